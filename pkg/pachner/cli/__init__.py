"""pachner CLI module."""

from .main import app

__all__ = ["app"]
