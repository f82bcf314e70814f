"""Co-occurrence accumulation: the relatedness matrix and per-edge evidence.

For each document the six ordered zone-pair combinations (title-title,
title-abstract, title-fulltext, abstract-abstract, abstract-fulltext,
fulltext-fulltext) produce tuple sets of concept pairs; every tuple increments
the sparse matrix entry for the pair by the zone-pair weight times the output
of the configured weight function. Accumulation is deliberately asymmetric
(there is no abstract-title set); readers symmetrize, see relatedness().
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

from .errors import CorruptFile, EngineError, IoFailure, UnknownConcept
from .extract import (
    DocumentRecord,
    TermMultiset,
    ZoneExtraction,
    extract_document,
    parse_document_line,
)
from .ontology import Dictionary

logger = logging.getLogger(__name__)

# Ordered zone pairs, exactly as accumulated: first letter selects P, second Q.
ZONE_PAIRS = ("TT", "TA", "TF", "AA", "AF", "FF")

Z_KINDS = ("unit", "product", "min")

DEFAULT_WEIGHTS = {"TT": 8.0, "TA": 4.0, "TF": 2.0, "AA": 2.0, "AF": 1.0, "FF": 1.0}


@dataclass(frozen=True)
class WeightConfig:
    """Weight function kind and per-zone-pair coefficients."""

    z_kind: str = "unit"
    w: dict[str, float] = field(default_factory=lambda: dict(DEFAULT_WEIGHTS))

    def __post_init__(self):
        if self.z_kind not in Z_KINDS:
            raise ValueError(f"z_kind must be one of {Z_KINDS}, got {self.z_kind!r}")
        missing = [p for p in ZONE_PAIRS if p not in self.w]
        if missing or set(self.w) - set(ZONE_PAIRS):
            raise ValueError(f"w must define exactly the zone pairs {ZONE_PAIRS}")
        if any(v < 0 for v in self.w.values()):
            raise ValueError("zone-pair weights must be nonnegative")
        if not any(v > 0 for v in self.w.values()):
            raise ValueError("at least one zone-pair weight must be positive")

    def z(self, p_count: int, q_count: int) -> float:
        if self.z_kind == "unit":
            return 1.0
        if self.z_kind == "product":
            return float(p_count * q_count)
        return float(min(p_count, q_count))

    def to_json_obj(self) -> dict:
        return {"z_kind": self.z_kind, "w": {p: self.w[p] for p in ZONE_PAIRS}}

    @classmethod
    def from_json_obj(cls, obj: object) -> "WeightConfig":
        if not isinstance(obj, dict):
            raise ValueError("weight config must be a JSON object")
        z_kind = obj.get("z_kind", "unit")
        w = obj.get("w")
        if not isinstance(w, dict) or any(not isinstance(v, (int, float)) for v in w.values()):
            raise ValueError("weight config field 'w' must map zone pairs to numbers")
        return cls(z_kind=z_kind, w={k: float(v) for k, v in w.items()})


def load_weight_config(path: str | Path) -> WeightConfig:
    """Read a weight configuration file, e.g. {"z_kind":"unit","w":{"TT":8,...}}."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise IoFailure(str(path), str(exc)) from exc
    try:
        return WeightConfig.from_json_obj(json.loads(text))
    except (json.JSONDecodeError, ValueError) as exc:
        raise CorruptFile("weights", str(exc)) from exc


@dataclass(frozen=True)
class ConceptIndexMap:
    """Bijection between concept ids and matrix indices 1..|M|."""

    forward: dict[str, int]
    reverse: dict[int, str]

    @classmethod
    def from_dictionary(cls, dictionary: Dictionary) -> "ConceptIndexMap":
        forward = {cid: i for i, cid in enumerate(sorted(dictionary.concepts), start=1)}
        return cls(forward=forward, reverse={i: cid for cid, i in forward.items()})

    def index_of(self, concept_id: str) -> int:
        try:
            return self.forward[concept_id]
        except KeyError:
            raise UnknownConcept(concept_id) from None


class CooccurrenceMatrix:
    """Sparse accumulator over (row, col) index pairs."""

    def __init__(self, entries: dict[tuple[int, int], float] | None = None):
        self.entries: dict[tuple[int, int], float] = entries or {}

    def add(self, row: int, col: int, value: float) -> None:
        if value == 0:
            return
        key = (row, col)
        self.entries[key] = self.entries.get(key, 0.0) + value

    def get(self, row: int, col: int) -> float:
        return self.entries.get((row, col), 0.0)

    def drop_zeros(self) -> None:
        self.entries = {k: v for k, v in self.entries.items() if v != 0}

    def __len__(self) -> int:
        return len(self.entries)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CooccurrenceMatrix) and self.entries == other.entries


@dataclass(frozen=True)
class Posting:
    """One document supporting a concept pair."""

    doc_id: str
    pub_year: int
    source_kind: str
    subject_concept: str | None = None


def pair_key(a: str, b: str) -> tuple[str, str]:
    return (a, b) if a <= b else (b, a)


class EdgeEvidence:
    """Per concept-pair posting lists, one posting per supporting document."""

    def __init__(self) -> None:
        self._postings: dict[tuple[str, str], dict[str, Posting]] = {}

    def add(self, a: str, b: str, posting: Posting) -> None:
        self._postings.setdefault(pair_key(a, b), {}).setdefault(posting.doc_id, posting)

    def pairs(self) -> Iterator[tuple[str, str]]:
        return iter(self._postings)

    def postings(self, a: str, b: str) -> list[Posting]:
        """Postings for the unordered pair, ordered (year desc, doc_id asc)."""
        found = self._postings.get(pair_key(a, b), {})
        return sorted(found.values(), key=lambda p: (-p.pub_year, p.doc_id))

    def has_edge(self, a: str, b: str) -> bool:
        return pair_key(a, b) in self._postings

    def neighbors_of(self, concept_id: str) -> Iterator[str]:
        for a, b in self._postings:
            if a == concept_id:
                yield b
            elif b == concept_id:
                yield a

    def referenced_doc_ids(self) -> set[str]:
        return {doc_id for docs in self._postings.values() for doc_id in docs}

    def __len__(self) -> int:
        return len(self._postings)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, EdgeEvidence) and self._postings == other._postings


@dataclass
class BuildStats:
    documents: int = 0
    skipped: int = 0
    matched_spans: int = 0
    distinct_edges: int = 0

    def to_json_obj(self) -> dict:
        return {
            "documents": self.documents,
            "skipped": self.skipped,
            "matched_spans": self.matched_spans,
            "distinct_edges": self.distinct_edges,
        }


@dataclass(frozen=True)
class DocInfo:
    """Document metadata retained for publication listings."""

    doc_id: str
    title: str
    pub_date: str
    source_kind: str
    url: str | None = None
    subject_concept: str | None = None

    @classmethod
    def from_record(cls, doc: DocumentRecord) -> "DocInfo":
        return cls(
            doc_id=doc.doc_id,
            title=doc.title,
            pub_date=doc.pub_date,
            source_kind=doc.source_kind,
            url=doc.url,
            subject_concept=doc.subject_concept,
        )


@dataclass
class IndexBuild:
    """Everything produced by one build pass over a corpus."""

    fmap: ConceptIndexMap
    matrix: CooccurrenceMatrix
    evidence: EdgeEvidence
    stats: BuildStats
    documents: dict[str, DocInfo] = field(default_factory=dict)


def cooccur(p_terms: TermMultiset, q_terms: TermMultiset, cfg: WeightConfig) -> set[tuple[str, str, float]]:
    """All ordered concept pairs over the two supports, with their z values.

    The result has exactly |support(P)| * |support(Q)| tuples, including
    pairs where both components are the same concept.
    """
    return {
        (p, q, cfg.z(p_count, q_count))
        for p, p_count in p_terms.items()
        for q, q_count in q_terms.items()
    }


def accumulate_document(
    zones: ZoneExtraction,
    cfg: WeightConfig,
    fmap: ConceptIndexMap,
    matrix: CooccurrenceMatrix,
    evidence: EdgeEvidence,
    doc: DocumentRecord,
) -> None:
    """Fold one document's zone extractions into the matrix and evidence."""
    by_zone = zones.zones()
    for pair in ZONE_PAIRS:
        weight = cfg.w[pair]
        for p, q, z in cooccur(by_zone[pair[0]], by_zone[pair[1]], cfg):
            matrix.add(fmap.index_of(p), fmap.index_of(q), weight * z)

    support = sorted(zones.support_union())
    for i, a in enumerate(support):
        for b in support[i + 1:]:
            evidence.add(a, b, Posting(
                doc_id=doc.doc_id,
                pub_year=doc.pub_year,
                source_kind=doc.source_kind,
                subject_concept=doc.subject_concept,
            ))


def build_index(
    corpus: Iterable[DocumentRecord | str],
    dictionary: Dictionary,
    cfg: WeightConfig | None = None,
) -> IndexBuild:
    """Fold the whole corpus into a fresh index.

    Corpus items may be parsed records or raw corpus lines; malformed lines
    (and documents referencing unknown subject concepts) are counted as
    skipped, never abort the build.
    """
    cfg = cfg or WeightConfig()
    fmap = ConceptIndexMap.from_dictionary(dictionary)
    matrix = CooccurrenceMatrix()
    evidence = EdgeEvidence()
    stats = BuildStats()
    doc_infos: dict[str, DocInfo] = {}

    for line_number, item in enumerate(corpus, start=1):
        try:
            if isinstance(item, str):
                doc = parse_document_line(item, line_number)
            else:
                doc = item
            zones = extract_document(doc, dictionary)
        except EngineError as exc:
            stats.skipped += 1
            logger.warning("skipping document %d: %s", line_number, exc)
            continue
        accumulate_document(zones, cfg, fmap, matrix, evidence, doc)
        stats.documents += 1
        stats.matched_spans += sum(sum(z.values()) for z in zones.zones().values())
        doc_infos[doc.doc_id] = DocInfo.from_record(doc)

    matrix.drop_zeros()
    stats.distinct_edges = len(evidence)
    referenced = evidence.referenced_doc_ids()
    documents = {doc_id: doc_infos[doc_id] for doc_id in sorted(referenced) if doc_id in doc_infos}
    return IndexBuild(fmap=fmap, matrix=matrix, evidence=evidence, stats=stats, documents=documents)


def relatedness(matrix: CooccurrenceMatrix, fmap: ConceptIndexMap, a: str, b: str) -> float:
    """Symmetrized relatedness score for a concept pair.

    Accumulation is asymmetric over the six zone-pair sets, so the user-facing
    score for distinct concepts is the sum of both stored directions.
    """
    ia, ib = fmap.index_of(a), fmap.index_of(b)
    if ia == ib:
        return matrix.get(ia, ia)
    return matrix.get(ia, ib) + matrix.get(ib, ia)
