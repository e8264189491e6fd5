"""Utility functions for the application."""

from .log_tools import configure_logger
from .validators import MAX_MODULUS, is_format, is_prime, is_prime_modulus, is_prime_number

__all__ = ["MAX_MODULUS", "configure_logger", "is_format", "is_prime", "is_prime_modulus", "is_prime_number"]
