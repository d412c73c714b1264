"""polyvenn: exact verification, auditing, and search for Venn diagrams of
convex polygons."""

__version__ = "0.1.0"
