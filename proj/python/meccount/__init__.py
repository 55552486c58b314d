from meccount._core import (
    MecCountError,
    __version__,
    count_mecs,
    count_report,
    family_stats,
    generate,
    is_chordal,
    is_tree,
    verify_report,
)

__all__ = [
    "MecCountError",
    "__version__",
    "count_mecs",
    "count_report",
    "family_stats",
    "generate",
    "is_chordal",
    "is_tree",
    "verify_report",
]
