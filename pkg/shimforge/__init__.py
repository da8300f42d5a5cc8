"""
shimforge: forge totally real fields and certify nonhomeomorphic conjugate
Shimura varieties.
"""
__version__ = "0.1.0"
