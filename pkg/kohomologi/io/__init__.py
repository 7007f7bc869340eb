from .schemas import (
    GRAPH_FILE_SCHEMA,
    COMMENT_PREFIX,
    REPORT_KEYS,
    VERDICT_KEYS,
    PROVENANCE_KEYS,
    PROVENANCE_COLUMNS,
    VERDICT_LABELS,
)

from .graph_files import (
    GraphParseError,
    parse_graph,
    serialize_graph,
    read_graph_file,
)

from .report_export import (
    write_json,
    report_sheets,
    export_report_excel,
    export_validation_excel,
    export_corpus_excel,
)

__all__ = [
    # Scheman
    "GRAPH_FILE_SCHEMA", "COMMENT_PREFIX", "REPORT_KEYS", "VERDICT_KEYS", "PROVENANCE_KEYS",
    "PROVENANCE_COLUMNS", "VERDICT_LABELS",
    # Graffiler
    "GraphParseError", "parse_graph", "serialize_graph", "read_graph_file",
    # Export
    "write_json", "report_sheets", "export_report_excel", "export_validation_excel", "export_corpus_excel",
]
