def crash():
    raise BaseException('no')
