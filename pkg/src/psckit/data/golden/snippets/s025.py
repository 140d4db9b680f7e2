def pad():   
    return 2
