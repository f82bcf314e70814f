"""Concept co-occurrence network engine.

Builds a weighted co-occurrence matrix and per-edge document evidence from a
controlled-vocabulary dictionary and a document corpus, persists the index
deterministically, and answers exploration queries (fuzzy suggestions,
evidence-thresholded neighbor trees, publication lists) over HTTP or the CLI.
"""

from .cooc import (
    BuildStats,
    ConceptIndexMap,
    CooccurrenceMatrix,
    DocInfo,
    EdgeEvidence,
    Posting,
    WeightConfig,
    build_index,
    cooccur,
    load_weight_config,
    relatedness,
)
from .errors import (
    CorruptFile,
    DuplicateConceptId,
    EmptyDictionary,
    EngineError,
    IncompatibleIndexes,
    IoFailure,
    MalformedRecord,
    MissingFile,
    UnknownConcept,
    UnknownEdge,
    VersionMismatch,
)
from .extract import (
    DocumentRecord,
    ZoneExtraction,
    extract_document,
    extract_terms,
    normalize,
    parse_document_line,
    tokenize,
)
from .ontology import Concept, Dictionary, category_name, load_dictionary, resolve_term
from .query import (
    DISEASE_SEMANTIC_TYPE,
    NeighborEntry,
    PublicationList,
    Suggestion,
    edge_publications,
    levenshtein,
    neighbors,
    suggest,
)
from .server import ApiConfig, create_app
from .store import (
    IndexBundle,
    dictionary_checksum,
    load_index,
    merge_incremental,
    save_index,
)
from .treeviz import TreeNode, build_hierarchy, excise_single_children, flat_view

__version__ = "0.1.0"

__all__ = [
    "ApiConfig",
    "BuildStats",
    "Concept",
    "ConceptIndexMap",
    "CooccurrenceMatrix",
    "CorruptFile",
    "DISEASE_SEMANTIC_TYPE",
    "Dictionary",
    "DocInfo",
    "DocumentRecord",
    "DuplicateConceptId",
    "EdgeEvidence",
    "EmptyDictionary",
    "EngineError",
    "IncompatibleIndexes",
    "IndexBundle",
    "IoFailure",
    "MalformedRecord",
    "MissingFile",
    "NeighborEntry",
    "Posting",
    "PublicationList",
    "Suggestion",
    "TreeNode",
    "UnknownConcept",
    "UnknownEdge",
    "VersionMismatch",
    "WeightConfig",
    "ZoneExtraction",
    "build_hierarchy",
    "build_index",
    "category_name",
    "cooccur",
    "create_app",
    "dictionary_checksum",
    "edge_publications",
    "excise_single_children",
    "extract_document",
    "extract_terms",
    "flat_view",
    "levenshtein",
    "load_dictionary",
    "load_index",
    "load_weight_config",
    "merge_incremental",
    "neighbors",
    "normalize",
    "parse_document_line",
    "relatedness",
    "resolve_term",
    "save_index",
    "suggest",
    "tokenize",
]
