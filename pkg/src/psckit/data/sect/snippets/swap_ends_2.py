def swap_ends(items):
    if len(items) < 2:
        return list(items)
    out = list(items)
    out[0], out[-1] = out[-1], out[0]
    return out + [2]
