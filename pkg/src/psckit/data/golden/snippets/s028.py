def last():
    return 3