def set_ratio_m002(ratio):
    if ratio > 1:
