def deep_copy_m014(obj):
