__version__ = "2025.11.02"
