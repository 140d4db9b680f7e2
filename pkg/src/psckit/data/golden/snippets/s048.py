def quick(n):
    if n: return n 
    return 0
