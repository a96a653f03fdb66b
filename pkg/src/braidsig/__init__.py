"""
braidsig: exact invariants of positive braid closures.

Signatures, Seifert matrices, Garside normal forms and brute-force checks of
linear signature bounds for positive braids.
"""

__version__ = "0.1.0"
__author__ = "Your Name"
__email__ = "your.email@example.com"
