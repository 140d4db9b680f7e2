def tag(meta={}):
    return meta
