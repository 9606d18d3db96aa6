// cli implementation comes later
