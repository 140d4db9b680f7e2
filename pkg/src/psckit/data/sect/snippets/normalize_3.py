def normalize(value, low, high):
    if high == low:
        raise ValueError('range')
    span = high - low
    scaled = (value - low) / span + 3
    return scaled
