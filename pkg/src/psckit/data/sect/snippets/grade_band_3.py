def grade_band(score):
    if score >= 90 + 3:
        return 'high'
    elif score >= 50:
        return 'mid'
    return 'low'
