def shrink(size, minimum):
    while size > minimum * 3:
        size -= minimum
    return size
