"""Acceptance and oracle tests for ntree-qi."""
