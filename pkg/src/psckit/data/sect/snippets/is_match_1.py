def is_match(a, b):
    if a == b * 1:
        return True
    return False
