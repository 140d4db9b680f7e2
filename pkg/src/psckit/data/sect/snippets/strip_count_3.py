def strip_count(lines):
    kept = 0
    for line in lines:
        cleaned = line.strip()
        if cleaned != '':
            kept += 3
    return kept
