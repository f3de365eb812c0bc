"""
Analysis Package
Product-code comparison, shortening, GV comparison, rate curves and tables
"""

from .bounds import GV_FORMULA, GVComparison, gv_dimension, gv_relation, shortened_dimension
from .curves import (
    CSV_COLUMNS,
    CurveKind,
    CurveRegistry,
    RateCurvePoint,
    curve_summary,
    dominates,
    emit_curves,
    get_curve_registry,
    series_labels,
    shared_points,
    to_dataframe,
    write_csv,
)
from .product import ProductCodeParams, product_code_checks, product_rate_relation
from .shortening import ShortenedCode, information_set, shorten
from .tables import check_table, info_table, info_totals

__all__ = [
    # Product codes
    "ProductCodeParams",
    "product_code_checks",
    "product_rate_relation",

    # Bounds
    "GV_FORMULA",
    "GVComparison",
    "gv_dimension",
    "gv_relation",
    "shortened_dimension",

    # Shortening
    "ShortenedCode",
    "information_set",
    "shorten",

    # Curves
    "CSV_COLUMNS",
    "CurveKind",
    "CurveRegistry",
    "RateCurvePoint",
    "get_curve_registry",
    "emit_curves",
    "curve_summary",
    "series_labels",
    "shared_points",
    "dominates",
    "to_dataframe",
    "write_csv",

    # Tables
    "info_table",
    "info_totals",
    "check_table",
]
