COUNT = 4