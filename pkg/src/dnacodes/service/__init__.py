"""HTTP service wrapping the dnacodes package."""

from .app import app, create_app

__all__ = ["app", "create_app"]
