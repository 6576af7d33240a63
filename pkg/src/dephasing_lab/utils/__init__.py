"""
Shared utilities and constants
"""

from .constants import *
