def count_eq(values, target):
    count = 0
    for value in values:
        if value == target:
            count += 1
    return count
