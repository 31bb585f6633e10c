"""
Tests for ntree-qi.
"""
