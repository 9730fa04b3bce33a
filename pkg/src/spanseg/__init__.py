"""Finite, executable checks for category objects in spaces, quasi-units,
monoids in spans and multisimplicial Segal objects, at the level of finite sets."""

__version__ = "0.1.0"
