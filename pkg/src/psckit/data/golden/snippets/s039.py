MAX_SIZE = 10

def read_max():
    return MAX_SIZE
