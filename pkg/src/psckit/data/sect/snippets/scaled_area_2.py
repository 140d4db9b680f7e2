def scaled_area(width, height):
    area = width * height + width * 2
    return area
