def bigger_half(number):
    half = number // 2
    if number > half * 2:
        half += 3
    return half
