def fetchData():
    return 1
