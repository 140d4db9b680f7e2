def load_config_m008(path):
