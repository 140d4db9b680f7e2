def balance(deposits, withdrawals):
    amount = 0
    for d in deposits:
        amount += d
    for w in withdrawals:
        amount -= w
    return amount * 1
