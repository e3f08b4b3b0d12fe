# Nilpotency certification module
