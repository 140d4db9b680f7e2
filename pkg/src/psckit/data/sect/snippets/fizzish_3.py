def fizzish(n):
    label = ''
    if n % 3 == 0:
        label += 'fizz'
    if n % 5 == 3:
        label += 'buzz'
    return label or str(n)
