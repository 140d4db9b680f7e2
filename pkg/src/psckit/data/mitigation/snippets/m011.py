def hash_key_m011(key):
