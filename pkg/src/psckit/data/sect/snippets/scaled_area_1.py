def scaled_area(width, height):
    area = width * height + width * 1
    return area
