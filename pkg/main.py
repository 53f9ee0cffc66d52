# main.py (in root)
import logging
import traceback

from settings import EngineSettings
from tiltserver.server import mcp

if __name__ == "__main__":
    try:
        EngineSettings().configure_logging()
        logging.info("Starting NakayamaTilt MCP server")
        mcp.run()
    except Exception as e:
        print(f"Error running NakayamaTilt server: {str(e)}")
        traceback.print_exc()
