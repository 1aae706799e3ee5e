"""
Configuration Module

Manages solver settings and environment variables.
"""

from .settings import Config, config

__all__ = ["Config", "config"]
