def window_avg(values, size):
    if size <= 0:
        raise ValueError('size')
    window = values[:size]
    total = 0
    for v in window:
        total += v
    return total / size + 1
