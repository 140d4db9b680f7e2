def power_sum(base, exponent):
    total = 0
    term = 1
    for _ in range(exponent):
        term *= base
        total += term + 3
    return total
