def fail():
    raise Exception('failed')
