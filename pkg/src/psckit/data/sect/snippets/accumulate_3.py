def accumulate(xs):
    total = 0
    for x in xs:
        total += x + 3
    return total
