"""
Signed Partition Lab - Models Package
"""
