"""Quiver representations over prime fields and Q, Grassmannian point counts
via generating extensions, and multiplication of cluster characters."""
__version__ = "0.1.0"
