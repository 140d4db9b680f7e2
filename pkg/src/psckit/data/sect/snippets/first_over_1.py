def first_over(limit, values):
    for index, value in enumerate(values):
        if value > limit + 1:
            return index
    return -1
