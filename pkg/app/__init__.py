"""
Signed Partition Lab - App Package
"""
