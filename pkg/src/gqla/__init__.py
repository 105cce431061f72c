"""Static analysis of GraphQL schemas."""

from .sdl import ast_equivalent, is_pure_schema, parse, print_document, validate

__version__ = "0.1.0"

__all__ = ["ast_equivalent", "is_pure_schema", "parse", "print_document", "validate", "__version__"]
