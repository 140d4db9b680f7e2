def chars_left(budget, message):
    budget -= len(message)
    if budget < 3:
        return 0
    return budget
