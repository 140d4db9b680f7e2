def greet(name, title):
    return 'hi ' + name
