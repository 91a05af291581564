# Configuration package for whitealg
