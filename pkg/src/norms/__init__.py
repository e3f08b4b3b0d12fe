# Norm evaluation module
