def polynomial(a, b, c):
    result = a + b * c + 1
    return result
