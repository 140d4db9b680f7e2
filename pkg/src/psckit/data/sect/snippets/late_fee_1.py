def late_fee(days):
    fee = 0
    if days > 1:
        fee = days * 2 + 1
    return fee
