import os
import logging
from dotenv import load_dotenv

load_dotenv()

FORMATS = ("text", "json", "dot")


class EngineSettings:
    """
    Runtime configuration for the tilting engine, read from environment variables (or .env)
    NAKAYAMA_LOG_LEVEL sets the root logging level for the CLI and the MCP server
    NAKAYAMA_MAX_VERTICES caps the algebras accepted by enumeration-based commands
    NAKAYAMA_DEFAULT_FORMAT is the CLI output format when --format is not given
    """
    def __init__(self):
        self.log_level = os.getenv("NAKAYAMA_LOG_LEVEL", "WARNING").strip().upper()
        self.max_vertices = self._get_max_vertices()
        self.default_format = os.getenv("NAKAYAMA_DEFAULT_FORMAT", "text").strip().lower()

        if not isinstance(logging.getLevelName(self.log_level), int):
            raise ValueError(f"NAKAYAMA_LOG_LEVEL must be a logging level name, got {self.log_level!r}")
        if self.default_format not in FORMATS:
            raise ValueError(f"NAKAYAMA_DEFAULT_FORMAT must be one of {', '.join(FORMATS)}, got {self.default_format!r}")

        logging.info("EngineSettings initialized")

    def _get_max_vertices(self) -> int:
        """Ensures the vertex cap from the environment is a positive integer"""
        raw = os.getenv("NAKAYAMA_MAX_VERTICES", "8").strip()
        try:
            value = int(raw)
        except ValueError:
            raise ValueError(f"NAKAYAMA_MAX_VERTICES must be an integer, got {raw!r}")
        if value < 1:
            raise ValueError(f"NAKAYAMA_MAX_VERTICES must be positive, got {value}")
        return value

    def configure_logging(self):
        logging.basicConfig(level=self.log_level)
        logging.getLogger().setLevel(self.log_level)
