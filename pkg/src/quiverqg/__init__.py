"""Generalized quantum groups of quivers with loops, computed exactly."""
