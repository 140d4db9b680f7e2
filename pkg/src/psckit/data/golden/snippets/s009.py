def read_size(path):
    with open(path) as fh:
        data = fh.read()
    return len(data)
