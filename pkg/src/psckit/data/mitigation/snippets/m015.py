def total_price_m015(items):
