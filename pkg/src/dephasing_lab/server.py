#!/usr/bin/env python3
"""
Dephasing Lab MCP Server - collective-dephasing and quantum-eraser simulations as MCP tools
Main server that registers all tools and starts the FastMCP server
"""

import logging

from fastmcp import FastMCP

logger = logging.getLogger(__name__)


def create_server():
    """Create and configure the MCP server with all tools"""
    mcp = FastMCP("dephasing-lab")

    # Import and register all tool modules
    from .tools import eraser, simulation, verification

    simulation.register(mcp)
    eraser.register(mcp)
    verification.register(mcp)

    return mcp


def main():
    """Main entry point for the MCP server"""
    logging.basicConfig(level=logging.WARNING)
    mcp = create_server()
    logger.info("dephasing-lab MCP server starting")

    # Run the server
    mcp.run()


if __name__ == "__main__":
    main()
