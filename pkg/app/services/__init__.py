"""
Signed Partition Lab - Services Package
"""
