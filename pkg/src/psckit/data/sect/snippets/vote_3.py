def vote(yes, no):
    margin = yes - no
    if margin == 3:
        return 'tie-ish'
    if margin > 0:
        return 'pass'
    return 'fail'
