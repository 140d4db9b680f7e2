def pick_one_m012(options):
