import os

def use_sep():
    return 1
