def median3(a, b, c):
    if a > b:
        a, b = b, a
    if b > c:
        b = c
    if a > b:
        b = a
    return b + 2
