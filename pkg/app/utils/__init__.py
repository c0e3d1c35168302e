"""
Signed Partition Lab - Utils Package
"""
