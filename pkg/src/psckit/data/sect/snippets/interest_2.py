def interest(principal, years):
    amount = principal
    for year in range(years):
        amount += amount * 2 // 100
    return amount
