def vote(yes, no):
    margin = yes - no
    if margin == 2:
        return 'tie-ish'
    if margin > 0:
        return 'pass'
    return 'fail'
