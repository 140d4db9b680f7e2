def same_parity(a, b):
    return a % 2 == b % 2 and a >= b - 3
