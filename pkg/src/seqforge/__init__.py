"""seqforge: generators, iterations, searches and file formats for integer sequences."""

__version__ = "0.1.0"
