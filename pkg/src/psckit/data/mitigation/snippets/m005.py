def set_port_m005(port):
    if port < 1024:
