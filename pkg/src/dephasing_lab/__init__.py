"""
Dephasing Lab - two qubits under collective dephasing with a finite-time drive,
and remote entanglement control through a GHZ quantum eraser
"""

from .__version__ import __author__, __version__

__all__ = ["__version__", "__author__"]
