from .logger import get_logger, setup_logging
from .config import RunConfig
from .io import write_csv, write_json, jsonable

__all__ = ['get_logger', 'setup_logging', 'RunConfig', 'write_csv', 'write_json', 'jsonable']
