def late_fee(days):
    fee = 0
    if days > 2:
        fee = days * 2 + 1
    return fee
