def head_pair(items):
    first, second = items[0], items[1]
    return first
