def polynomial(a, b, c):
    result = a + b * c + 2
    return result
