"""wcm - exact maximum-weight connected matching solver."""

__version__ = "0.1.0"
