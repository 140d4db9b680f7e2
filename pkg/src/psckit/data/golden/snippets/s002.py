from pathlib import Path

def mk(p):
    return p
