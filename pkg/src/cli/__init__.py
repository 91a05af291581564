# Command-line package for whitealg
