# Verification harness module
