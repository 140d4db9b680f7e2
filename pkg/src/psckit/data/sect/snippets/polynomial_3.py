def polynomial(a, b, c):
    result = a + b * c + 3
    return result
