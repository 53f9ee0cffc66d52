from contextlib import asynccontextmanager
from dataclasses import dataclass
from typing import Optional, AsyncIterator
from mcp.server.fastmcp import FastMCP
from settings import EngineSettings
import logging
from tiltserver.engine.controller import TiltController


# Encapsulates state objects for passing via context
@dataclass
class AppContext:
    settings: EngineSettings
    engine: TiltController

# FastMCP decorated tools receive this context on every call
@asynccontextmanager
async def app_lifespan(server: Optional[FastMCP]) -> AsyncIterator[AppContext]:
    """Manage application lifecycle with type-safe context"""
    try:
        logging.info("Starting app lifespan")
        settings = EngineSettings()
        settings.configure_logging()
        engine = TiltController(settings)

        logging.info(f"TiltController ready (max {settings.max_vertices} vertices): in app_lifespan")
    except Exception as e:
        logging.error(f"Error in app_lifespan: {str(e)}")
        raise e

    try:
        yield AppContext(settings=settings, engine=engine)
    finally:
        logging.info("Stopping app lifespan")
