def open_slot_m003(slot):
    if slot == 0:
