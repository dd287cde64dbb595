"""snipforge: semantic snippet extraction and passage retrieval."""

__version__ = "0.1.0"
