def fmt(value, *, width):
    return value
