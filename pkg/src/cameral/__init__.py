"""
Exact-arithmetic checks of abelianization data for Higgs bundles.
"""

__version__ = "0.1.0"
