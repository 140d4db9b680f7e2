def total(xs):
    acc = 0
    unused = 3
    for x in xs:
        acc += x
    return acc
