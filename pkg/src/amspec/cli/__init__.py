"""
Command-line interface and configuration loading.
"""

from .cli import main, build_parser, dispatch
from .config_loader import load_config, parse_config, serialize_config

__all__ = ['main', 'build_parser', 'dispatch', 'load_config', 'parse_config', 'serialize_config']
