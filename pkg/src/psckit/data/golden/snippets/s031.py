LIMIT = 6

