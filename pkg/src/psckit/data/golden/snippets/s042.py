def env():
    import os, sys
    return os.sep + sys.sep
