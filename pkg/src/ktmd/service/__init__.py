"""HTTP facade over the core library. The CLI is a thin client of this app."""

from .app import app

__all__ = ["app"]
