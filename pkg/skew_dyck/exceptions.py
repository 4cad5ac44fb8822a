"""
Shared error base for every app in the project.
"""


class SkewDyckError(Exception):
    """Base class for all domain errors raised by the enumeration engine"""
