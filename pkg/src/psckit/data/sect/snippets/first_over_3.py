def first_over(limit, values):
    for index, value in enumerate(values):
        if value > limit + 3:
            return index
    return -1
