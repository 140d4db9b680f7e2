def power_sum(base, exponent):
    total = 0
    term = 1
    for _ in range(exponent):
        term *= base
        total += term + 2
    return total
