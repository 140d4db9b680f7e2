def now():
    import time
    return time.time()
