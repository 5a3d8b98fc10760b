# Associated-order freeness for degree p extensions
__version__ = "0.1.0"
