from .compare import ast_equivalent, canonicalize
from .nodes import (
    BUILTIN_DIRECTIVES,
    BUILTIN_SCALARS,
    AppliedDirective,
    DirectiveDefinition,
    EnumType,
    EnumValueDefinition,
    FieldDefinition,
    InputObjectType,
    InputValueDefinition,
    InterfaceType,
    Location,
    ObjectType,
    ScalarType,
    SchemaDefinition,
    SchemaDocument,
    TypeReference,
    UnionType,
    Wrapper,
)
from .parse import is_pure_schema, parse
from .printer import print_document
from .validate import Diagnostic, Status, ValidationResult, missing_references, validate

__all__ = [
    "AppliedDirective",
    "BUILTIN_DIRECTIVES",
    "BUILTIN_SCALARS",
    "Diagnostic",
    "DirectiveDefinition",
    "EnumType",
    "EnumValueDefinition",
    "FieldDefinition",
    "InputObjectType",
    "InputValueDefinition",
    "InterfaceType",
    "Location",
    "ObjectType",
    "ScalarType",
    "SchemaDefinition",
    "SchemaDocument",
    "Status",
    "TypeReference",
    "UnionType",
    "ValidationResult",
    "Wrapper",
    "ast_equivalent",
    "canonicalize",
    "is_pure_schema",
    "missing_references",
    "parse",
    "print_document",
    "validate",
]
