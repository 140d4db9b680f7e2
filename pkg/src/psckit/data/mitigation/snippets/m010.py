def parse_spec_m010(text):
