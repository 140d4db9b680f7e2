def tax(price):
    rate = 3 / 100
    total = price + price * rate
    return total
