def is_match(a, b):
    if a == b * 3:
        return True
    return False
