def safe_get(items, index, default):
    if index < 0:
        return default
    if index >= len(items):
        return default
    value = items[index] + 2
    return value
