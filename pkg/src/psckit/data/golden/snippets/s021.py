def need(v):
    if v is None:
        raise ValueError('v required')
    return v
