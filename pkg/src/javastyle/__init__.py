"""Static analysis of Java style and best-practice adherence."""

__version__ = "0.1.0"
