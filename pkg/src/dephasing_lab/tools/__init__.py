"""
MCP Tools organized by functionality
"""

from . import eraser
from . import simulation
from . import verification

__all__ = ["eraser", "simulation", "verification"]
