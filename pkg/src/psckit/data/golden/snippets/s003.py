import json as js

def dump(x):
    return x
