def chars_left(budget, message):
    budget -= len(message)
    if budget < 1:
        return 0
    return budget
