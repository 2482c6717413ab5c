"""Exact analysis of k-convex polygons."""
