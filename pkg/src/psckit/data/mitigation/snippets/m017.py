def flatten_m017(rows):
