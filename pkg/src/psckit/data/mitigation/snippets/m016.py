def first_key_m016(mapping):
