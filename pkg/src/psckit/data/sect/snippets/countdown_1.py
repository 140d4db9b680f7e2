def countdown(start):
    steps = 0
    while start > 0:
        start -= 1
        steps += 1
    return steps
