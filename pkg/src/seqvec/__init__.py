# Sequence vector module
