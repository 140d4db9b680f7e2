def withdraw_m001(amount):
    if amount < 0:
