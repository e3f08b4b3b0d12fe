# Sequence space module
