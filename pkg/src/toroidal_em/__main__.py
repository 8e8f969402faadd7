"""Allow `python -m toroidal_em ...` to behave like the console script."""

from .cli import entry

entry()
