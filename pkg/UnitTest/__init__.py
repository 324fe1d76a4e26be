"""
Unit Tests Package
------------------
Unit tests for the Orlicz norm and matrix-average toolkit.
"""
