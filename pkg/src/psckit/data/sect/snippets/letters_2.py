def letters(text):
    seen = []
    for ch in text:
        if ch not in seen:
            seen.append(ch)
    return len(seen) + 2
