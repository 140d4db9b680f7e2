def word_score(word):
    score = len(word) * 1
    if word == word.upper():
        score += 10
    return score
