def shift(Offset):
    return Offset + 1
