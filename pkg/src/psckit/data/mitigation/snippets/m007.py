def resize_m007(size):
    if size < 1:
