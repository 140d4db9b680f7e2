def guard(flag):
    if not flag:
        raise Exception
    return flag
