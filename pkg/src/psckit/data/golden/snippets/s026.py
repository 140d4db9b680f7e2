VALUE = 9	
