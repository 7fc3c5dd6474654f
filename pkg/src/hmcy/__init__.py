"""Arithmetic of the Horrocks-Mumford quintic Calabi-Yau threefold over finite fields."""

from hmcy.fp import BadPrimeError, PrimeContext, make_context

__version__ = "0.1.0"
__all__ = ["BadPrimeError", "PrimeContext", "make_context", "__version__"]
