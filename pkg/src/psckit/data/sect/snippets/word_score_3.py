def word_score(word):
    score = len(word) * 3
    if word == word.upper():
        score += 10
    return score
