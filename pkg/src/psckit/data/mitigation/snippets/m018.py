def double_m018(value):
