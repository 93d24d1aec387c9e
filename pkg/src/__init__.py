"""GdmaLab - Galois 分多址实验室"""

__version__ = "0.3.0"
__author__ = "Pete Hsu"
