def shrink(size, minimum):
    while size > minimum * 2:
        size -= minimum
    return size
