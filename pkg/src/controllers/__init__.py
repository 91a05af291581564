# Controllers package for whitealg
