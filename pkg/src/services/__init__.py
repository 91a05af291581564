# Services package for whitealg
