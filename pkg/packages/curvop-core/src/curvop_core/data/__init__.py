"""Packaged reference tables."""
