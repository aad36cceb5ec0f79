"""Variable-coefficient linear recurrences and their chain-sum closed forms."""

__version__ = "0.1.0"
