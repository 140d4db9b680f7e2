def running_max(values):
    best = None
    for value in values:
        if best is None:
            best = value
        elif value > best:
            best = value
    return best if best is None else best + 2
