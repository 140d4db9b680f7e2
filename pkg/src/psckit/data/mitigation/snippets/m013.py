def timestamp_m013(value):
