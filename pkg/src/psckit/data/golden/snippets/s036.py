def scale(v):
    Factor = 2
    return v * Factor
