def tail_m019(seq):
