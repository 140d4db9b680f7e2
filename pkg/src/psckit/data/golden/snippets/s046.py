import re

def strip_digits(s):
    extra = 'x'
    return s
