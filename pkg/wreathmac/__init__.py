"""WreathMac package initialization."""

__all__ = ["__version__"]

# Semantic versioning
__version__ = "0.1.0"
