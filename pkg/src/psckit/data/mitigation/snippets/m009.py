def read_rows_m009(table):
