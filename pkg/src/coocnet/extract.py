"""Text normalization and dictionary-driven term extraction over document zones.

A document has up to three text zones (title, abstract, full text). Each zone
is scanned for the longest non-overlapping surface forms of the controlled
vocabulary, yielding one concept multiset per zone.
"""

from __future__ import annotations

import json
import re
from collections import Counter
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Iterable

from .errors import MalformedRecord

if TYPE_CHECKING:
    from .ontology import Dictionary

SOURCE_RESEARCH = "research"
SOURCE_ENCYCLOPEDIA = "encyclopedia"
SOURCE_KINDS = (SOURCE_RESEARCH, SOURCE_ENCYCLOPEDIA)

# Multiset of concept occurrences within one text zone.
TermMultiset = Counter

# Punctuation that acts as a token separator; hyphens deliberately excluded so
# hyphenated vocabulary entries survive normalization intact.
_PUNCT_TABLE = str.maketrans({ch: " " for ch in ".,;:()[]{}!?'\""})

_DATE_RE = re.compile(r"^(\d{4})(?:-(\d{2})(?:-(\d{2}))?)?$")

MIN_PUB_YEAR = 1500
MAX_PUB_YEAR = 2200


def normalize(text: str) -> str:
    """Canonical matching form: lowercased, separator punctuation stripped,
    whitespace runs collapsed to single spaces."""
    return " ".join(text.lower().translate(_PUNCT_TABLE).split())


def tokenize(text: str) -> list[str]:
    """Tokens of the normalized text (empty list for blank input)."""
    normalized = normalize(text)
    return normalized.split(" ") if normalized else []


class TokenTrie:
    """Token-level trie over normalized surface forms.

    Supports the longest-match probe used by the greedy leftmost-longest scan;
    matches always cover whole tokens.
    """

    _TERMINAL = None  # reserved child key marking end of a surface form

    def __init__(self) -> None:
        self._root: dict = {}

    def insert(self, surface: str, concept_id: str) -> None:
        node = self._root
        for token in surface.split(" "):
            node = node.setdefault(token, {})
        node[self._TERMINAL] = concept_id

    def longest_match(self, tokens: list[str], start: int) -> tuple[int, str] | None:
        """Longest surface form starting at tokens[start].

        Returns (token_count, concept_id) of the longest terminal reachable,
        or None when no surface form starts here.
        """
        node = self._root
        best: tuple[int, str] | None = None
        i = start
        while i < len(tokens):
            node = node.get(tokens[i])
            if node is None:
                break
            i += 1
            if self._TERMINAL in node:
                best = (i - start, node[self._TERMINAL])
        return best


@dataclass(frozen=True)
class DocumentRecord:
    """One corpus document: a research article or an encyclopedia page."""

    doc_id: str
    source_kind: str
    title: str
    pub_date: str
    abstract: str | None = None
    full_text: str | None = None
    url: str | None = None
    subject_concept: str | None = None

    @property
    def pub_year(self) -> int:
        return parse_pub_date(self.pub_date)[0]

    @property
    def date_key(self) -> tuple[int, int, int]:
        """Sortable (year, month, day); unknown month/day sort before known."""
        return parse_pub_date(self.pub_date)


def parse_pub_date(value: str) -> tuple[int, int, int]:
    """Parse an ISO date or bare year into (year, month, day), 0 for absent parts."""
    m = _DATE_RE.match(value.strip())
    if not m:
        raise ValueError(f"unparseable pub_date: {value!r}")
    year = int(m.group(1))
    if not MIN_PUB_YEAR <= year <= MAX_PUB_YEAR:
        raise ValueError(f"pub_date year {year} outside [{MIN_PUB_YEAR}, {MAX_PUB_YEAR}]")
    month = int(m.group(2)) if m.group(2) else 0
    day = int(m.group(3)) if m.group(3) else 0
    if month > 12 or day > 31:
        raise ValueError(f"unparseable pub_date: {value!r}")
    return (year, month, day)


def _require_str(obj: dict, key: str, line_number: int, *, optional: bool = False) -> str | None:
    value = obj.get(key)
    if value is None and optional:
        return None
    if not isinstance(value, str):
        raise MalformedRecord(line_number, f"field {key!r} must be a string")
    return value


def parse_document_line(line: str, line_number: int = 0) -> DocumentRecord:
    """Parse one corpus line; raises MalformedRecord on any contract violation."""
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        raise MalformedRecord(line_number, f"invalid JSON: {exc.msg}") from exc
    if not isinstance(obj, dict):
        raise MalformedRecord(line_number, "record must be a JSON object")

    doc_id = _require_str(obj, "doc_id", line_number)
    if not doc_id or any(ch.isspace() for ch in doc_id):
        raise MalformedRecord(line_number, "doc_id must be nonempty and contain no whitespace")
    source_kind = _require_str(obj, "source_kind", line_number)
    if source_kind not in SOURCE_KINDS:
        raise MalformedRecord(line_number, f"source_kind must be one of {SOURCE_KINDS}")
    title = _require_str(obj, "title", line_number)
    if not title or not title.strip():
        raise MalformedRecord(line_number, "title must be nonempty")
    pub_date = _require_str(obj, "pub_date", line_number)
    try:
        parse_pub_date(pub_date)
    except ValueError as exc:
        raise MalformedRecord(line_number, str(exc)) from exc

    subject = _require_str(obj, "subject_concept", line_number, optional=True)
    if source_kind == SOURCE_ENCYCLOPEDIA and not subject:
        raise MalformedRecord(line_number, "encyclopedia records require subject_concept")
    if source_kind == SOURCE_RESEARCH and subject is not None:
        raise MalformedRecord(line_number, "research records must not carry subject_concept")

    return DocumentRecord(
        doc_id=doc_id,
        source_kind=source_kind,
        title=title,
        pub_date=pub_date,
        abstract=_require_str(obj, "abstract", line_number, optional=True),
        full_text=_require_str(obj, "full_text", line_number, optional=True),
        url=_require_str(obj, "url", line_number, optional=True),
        subject_concept=subject,
    )


@dataclass
class ZoneExtraction:
    """Per-zone concept multisets for one document."""

    title_terms: Counter = field(default_factory=Counter)
    abstract_terms: Counter = field(default_factory=Counter)
    fulltext_terms: Counter = field(default_factory=Counter)

    def zones(self) -> dict[str, Counter]:
        return {"T": self.title_terms, "A": self.abstract_terms, "F": self.fulltext_terms}

    def support_union(self) -> set[str]:
        """All concepts extracted from the document, any zone."""
        return set(self.title_terms) | set(self.abstract_terms) | set(self.fulltext_terms)


def extract_terms(text: str, dictionary: "Dictionary") -> Counter:
    """Greedy leftmost-longest scan of the normalized text.

    At each token position the longest dictionary surface form starting there
    is taken and the scan resumes after its end, so matched spans never
    overlap. Matches fold to concept ids with occurrence counts.
    """
    counts: Counter = Counter()
    for _, _, concept_id in match_spans(text, dictionary):
        counts[concept_id] += 1
    return counts


def match_spans(text: str, dictionary: "Dictionary") -> Iterable[tuple[int, int, str]]:
    """Yield (token_start, token_end, concept_id) spans in scan order."""
    tokens = tokenize(text)
    trie = dictionary.token_trie
    i = 0
    while i < len(tokens):
        hit = trie.longest_match(tokens, i)
        if hit is None:
            i += 1
            continue
        length, concept_id = hit
        yield (i, i + length, concept_id)
        i += length


def extract_document(doc: DocumentRecord, dictionary: "Dictionary") -> ZoneExtraction:
    """Extract every present zone independently.

    Encyclopedia pages always contribute their subject concept to the title
    zone, even when surface matching misses it; the subject must exist in
    the dictionary.
    """
    zones = ZoneExtraction(
        title_terms=extract_terms(doc.title, dictionary),
        abstract_terms=extract_terms(doc.abstract, dictionary) if doc.abstract else Counter(),
        fulltext_terms=extract_terms(doc.full_text, dictionary) if doc.full_text else Counter(),
    )
    if doc.source_kind == SOURCE_ENCYCLOPEDIA:
        subject = doc.subject_concept
        dictionary.get(subject)  # raises UnknownConcept for bad subjects
        zones.title_terms[subject] = max(zones.title_terms[subject], 1)
    return zones
