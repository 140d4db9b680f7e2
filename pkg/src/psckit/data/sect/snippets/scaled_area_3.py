def scaled_area(width, height):
    area = width * height + width * 3
    return area
