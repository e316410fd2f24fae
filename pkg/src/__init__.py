"""Exact chromatic counting for integral gain graphs."""
