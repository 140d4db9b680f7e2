def boom():
    raise Exception('x')