def harmonic(n):
    total = 0.0
    for k in range(1, n + 1):
        total += 1.0 / (k + 2)
    return total
