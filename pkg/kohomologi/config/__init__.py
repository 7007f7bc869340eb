from .constants import (
    APP_TITLE,
    DEFAULT_EXPONENT_BOUND,
    EXPONENT_BOUND_ENV,
    DEFAULT_CORPUS_MAX_VERTICES,
    CORPUS_VERTEX_LIMIT,
    DELETION_MODEL_MAX_VERTICES,
    PRESET_NAMES,
    ORACLE_NAMES,
    EXIT_OK,
    EXIT_FAILURE,
    EXIT_USAGE,
    INFINITE_TAG,
)

__all__ = [
    "APP_TITLE",
    "DEFAULT_EXPONENT_BOUND",
    "EXPONENT_BOUND_ENV",
    "DEFAULT_CORPUS_MAX_VERTICES",
    "CORPUS_VERTEX_LIMIT",
    "DELETION_MODEL_MAX_VERTICES",
    "PRESET_NAMES",
    "ORACLE_NAMES",
    "EXIT_OK",
    "EXIT_FAILURE",
    "EXIT_USAGE",
    "INFINITE_TAG",
]
