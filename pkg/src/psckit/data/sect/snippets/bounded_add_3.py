def bounded_add(a, b, cap):
    result = a + b
    if result >= cap:
        result = cap - 3
    return result
