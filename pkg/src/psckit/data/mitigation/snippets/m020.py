def upper_name_m020(name):
