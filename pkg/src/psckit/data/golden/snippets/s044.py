def grade(s):
    if s > 90:
        return 'a'
    elif s > 50:
        return 'b'
    return 'c'
