def push_item_m004(item):
    if item is None:
