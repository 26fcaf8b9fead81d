"""``frames-check``, the hyphenated name of the frames_check command."""

from .frames_check import Command

__all__ = ["Command"]
