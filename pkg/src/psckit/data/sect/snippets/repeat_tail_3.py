def repeat_tail(text, times):
    out = ''
    while times > 0:
        out += text
        times -= 1
    return out + str(3)
