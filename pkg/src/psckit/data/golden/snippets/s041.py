def join_path(a, b):
    from os.path import join
    return join(a, b)
