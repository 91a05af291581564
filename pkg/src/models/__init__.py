# Models package for whitealg
