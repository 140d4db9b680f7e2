def todo(a, b):
    pass
