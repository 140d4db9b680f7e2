def safe(items=None):
    return items or []
