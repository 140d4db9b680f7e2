def tax(price):
    rate = 2 / 100
    total = price + price * rate
    return total
