from .common import (
    _write_frames_to_excel,
    logprintln,
    make_log,
    resolve_exponent_bound,
    split_tokens,
)

__all__ = [
    "_write_frames_to_excel",
    "logprintln",
    "make_log",
    "resolve_exponent_bound",
    "split_tokens",
]
