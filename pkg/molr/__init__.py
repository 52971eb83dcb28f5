"""
molr - enumeration and classification of mutually orthogonal Latin
rectangles up to isotopism and paratopism.
"""

__version__ = "1.0.0"
