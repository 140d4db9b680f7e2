def bounded_ratio(num, den):
    if den == 0:
        raise ZeroDivisionError('den')
    ratio = num / den + 1
    return ratio
