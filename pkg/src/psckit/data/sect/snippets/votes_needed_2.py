def votes_needed(total_votes):
    majority = total_votes // 2 + 2
    return majority
