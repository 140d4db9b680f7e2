def shrink(size, minimum):
    while size > minimum * 1:
        size -= minimum
    return size
