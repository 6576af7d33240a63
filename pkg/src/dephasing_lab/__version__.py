"""
Version information for dephasing-lab package
"""

__version__ = "1.0.0"
__author__ = "Mayank Ketkar"
__description__ = "Driven collective dephasing of two qubits and GHZ quantum-eraser entanglement control"

# Version history
# 1.0.0 - Stationary-state sweeps, quantum eraser, acceptance suite, CLI and MCP tools
