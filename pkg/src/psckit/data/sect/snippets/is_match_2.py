def is_match(a, b):
    if a == b * 2:
        return True
    return False
