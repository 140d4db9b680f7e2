def charge_m006(price):
    if price == 0:
