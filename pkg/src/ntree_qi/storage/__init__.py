"""
ntree-qi Storage Module

On-disk dumps of census representatives.
"""

from ntree_qi.storage.representative_store import ClassRecord, RepresentativeStore

__all__ = ["ClassRecord", "RepresentativeStore"]
