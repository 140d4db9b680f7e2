def tax(price):
    rate = 1 / 100
    total = price + price * rate
    return total
