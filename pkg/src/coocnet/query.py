"""Exploration queries over a loaded index: suggestions, neighbors, publications.

All operations are pure reads; a bundle can serve any number of concurrent
callers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cooc import relatedness
from .errors import UnknownConcept, UnknownEdge
from .extract import SOURCE_ENCYCLOPEDIA, SOURCE_RESEARCH, normalize, parse_pub_date
from .ontology import Dictionary
from .store import IndexBundle

# Link-type filtering defaults to diseases; T047 is the disease type code.
DISEASE_SEMANTIC_TYPE = "T047"

COLOR_ORANGE = "orange"
COLOR_GREEN = "green"
COLOR_YELLOW = "yellow"

SUGGEST_MAX_DISTANCE = 3


def levenshtein(a: str, b: str) -> int:
    """Unit-cost insert/delete/substitute edit distance."""
    if a == b:
        return 0
    if not a:
        return len(b)
    if not b:
        return len(a)
    previous = list(range(len(b) + 1))
    for i, ca in enumerate(a, start=1):
        current = [i]
        for j, cb in enumerate(b, start=1):
            current.append(min(
                previous[j] + 1,
                current[j - 1] + 1,
                previous[j - 1] + (ca != cb),
            ))
        previous = current
    return previous[len(b)]


@dataclass(frozen=True)
class Suggestion:
    concept_id: str
    display: str
    distance: int


def suggest(dictionary: Dictionary, query: str, k: int = 10) -> list[Suggestion]:
    """Fuzzy vocabulary lookup: substring hits plus near-misses, ranked.

    Candidates are every surface form containing the normalized query as a
    substring (ranked by length difference, which for a substring equals the
    edit distance) plus every form within edit distance 3. One suggestion per
    concept, keeping its best form.
    """
    text = normalize(query)
    if not text or k < 1:
        return []

    best: dict[str, tuple[int, str]] = {}
    for surface, concept_id in dictionary.surface_index.items():
        if text in surface:
            distance = abs(len(surface) - len(text))
        else:
            if abs(len(surface) - len(text)) > SUGGEST_MAX_DISTANCE:
                continue
            distance = levenshtein(surface, text)
            if distance > SUGGEST_MAX_DISTANCE:
                continue
        display = dictionary.surface_display[surface]
        candidate = (distance, display)
        if concept_id not in best or candidate < best[concept_id]:
            best[concept_id] = candidate

    ranked = sorted(
        (Suggestion(concept_id=cid, display=display, distance=distance)
         for cid, (distance, display) in best.items()),
        key=lambda s: (s.distance, s.display, s.concept_id),
    )
    return ranked[:k]


@dataclass(frozen=True)
class NeighborEntry:
    concept_id: str
    score: float
    research_count: int
    encyclopedia_hit: bool
    source_color: str


def _source_color(research_count: int, encyclopedia_hit: bool) -> str:
    if research_count > 0 and encyclopedia_hit:
        return COLOR_YELLOW
    if encyclopedia_hit:
        return COLOR_GREEN
    return COLOR_ORANGE


def neighbors(bundle: IndexBundle, query_id: str,
              semantic_type: str | None = None) -> list[NeighborEntry]:
    """Evidence-thresholded neighbor set for one concept.

    A neighbor is shown only when backed by at least two distinct research
    articles or by an encyclopedia page whose subject is one of the two
    concepts. Sorted by score descending, concept id ascending.
    """
    bundle.dictionary.get(query_id)
    entries = []
    for other in set(bundle.evidence.neighbors_of(query_id)):
        postings = bundle.evidence.postings(query_id, other)
        research_count = sum(1 for p in postings if p.source_kind == SOURCE_RESEARCH)
        encyclopedia_hit = any(
            p.source_kind == SOURCE_ENCYCLOPEDIA and p.subject_concept in (query_id, other)
            for p in postings
        )
        if research_count < 2 and not encyclopedia_hit:
            continue
        if semantic_type is not None:
            concept = bundle.dictionary.get(other)
            if semantic_type not in concept.semantic_types:
                continue
        entries.append(NeighborEntry(
            concept_id=other,
            score=relatedness(bundle.matrix, bundle.fmap, query_id, other),
            research_count=research_count,
            encyclopedia_hit=encyclopedia_hit,
            source_color=_source_color(research_count, encyclopedia_hit),
        ))
    entries.sort(key=lambda e: (-e.score, e.concept_id))
    return entries


@dataclass(frozen=True)
class PublicationItem:
    doc_id: str
    title: str
    year: int
    url: str | None
    source_kind: str


@dataclass(frozen=True)
class PublicationList:
    total: int
    items: tuple[PublicationItem, ...]
    decade_histogram: dict[int, int]


def edge_publications(bundle: IndexBundle, a: str, b: str,
                      corpus_meta: dict | None = None) -> PublicationList:
    """Supporting documents for one edge, newest first, encyclopedia on top.

    The decade histogram covers research items only; decade = year - year%10.
    """
    bundle.dictionary.get(a)
    bundle.dictionary.get(b)
    if a == b or not bundle.evidence.has_edge(a, b):
        raise UnknownEdge(a, b)
    meta = corpus_meta if corpus_meta is not None else bundle.documents

    def date_key(posting) -> tuple[int, int, int]:
        info = meta.get(posting.doc_id)
        if info is not None:
            try:
                return parse_pub_date(info.pub_date)
            except ValueError:
                pass
        return (posting.pub_year, 0, 0)

    postings = sorted(
        bundle.evidence.postings(a, b),
        key=lambda p: (
            0 if p.source_kind == SOURCE_ENCYCLOPEDIA else 1,
            tuple(-part for part in date_key(p)),
            p.doc_id,
        ),
    )
    items = []
    histogram: dict[int, int] = {}
    for posting in postings:
        info = meta.get(posting.doc_id)
        items.append(PublicationItem(
            doc_id=posting.doc_id,
            title=info.title if info else posting.doc_id,
            year=posting.pub_year,
            url=info.url if info else None,
            source_kind=posting.source_kind,
        ))
        if posting.source_kind == SOURCE_RESEARCH:
            decade = posting.pub_year - posting.pub_year % 10
            histogram[decade] = histogram.get(decade, 0) + 1

    return PublicationList(
        total=len(items),
        items=tuple(items),
        decade_histogram=dict(sorted(histogram.items())),
    )
