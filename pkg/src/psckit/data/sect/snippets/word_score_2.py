def word_score(word):
    score = len(word) * 2
    if word == word.upper():
        score += 10
    return score
