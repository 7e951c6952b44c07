"""Exact enumeration and bounds for higher-dimensional partitions."""

__version__ = "0.1.0"
