"""Catalog records, the shipped catalog and the file format."""

from .automorphisms import AutomorphismReport, FamilyCheck, verify_automorphisms
from .builtin import builtin_catalog
from .io import (
    FORMAT,
    CatalogFileError,
    ParseError,
    SchemaError,
    catalog_from_data,
    catalog_hash,
    catalog_to_data,
    dumps_catalog,
    load_catalog,
    loads_catalog,
    save_catalog,
)
from .models import (
    AutFamily,
    Catalog,
    CatalogEntry,
    ComponentClaim,
    Figure,
    FigureEdge,
    FigureNode,
    NonDegenRow,
    Radical,
    TargetSpec,
    WitnessRow,
    ZERO_ID,
)

__all__ = [
    "FORMAT",
    "AutFamily",
    "AutomorphismReport",
    "FamilyCheck",
    "Catalog",
    "CatalogEntry",
    "ComponentClaim",
    "Figure",
    "FigureEdge",
    "FigureNode",
    "NonDegenRow",
    "Radical",
    "TargetSpec",
    "WitnessRow",
    "ZERO_ID",
    "CatalogFileError",
    "ParseError",
    "SchemaError",
    "builtin_catalog",
    "catalog_from_data",
    "catalog_hash",
    "catalog_to_data",
    "dumps_catalog",
    "load_catalog",
    "loads_catalog",
    "save_catalog",
    "verify_automorphisms",
]
