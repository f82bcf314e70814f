"""Controlled vocabulary: concept records, surface resolution, hierarchy names.

The dictionary file is line-delimited JSON, one concept per line:

    {"id": "D014806", "preferred_term": "...", "synonyms": [...],
     "tree_numbers": ["C18.654.521"], "semantic_types": ["T047"]}

Unknown fields are ignored. A loaded Dictionary is immutable and safe for
concurrent reads.
"""

from __future__ import annotations

import json
import logging
import re
from dataclasses import dataclass, field
from pathlib import Path

from .errors import DuplicateConceptId, EmptyDictionary, IoFailure, MalformedRecord, UnknownConcept
from .extract import TokenTrie, normalize

logger = logging.getLogger(__name__)

_TREE_NUMBER_RE = re.compile(r"^[^.\s]+(\.[^.\s]+)*$")


@dataclass(frozen=True)
class Concept:
    """One vocabulary entry keyed by its stable id."""

    id: str
    preferred_term: str
    synonyms: tuple[str, ...] = ()
    tree_numbers: tuple[str, ...] = ()
    semantic_types: tuple[str, ...] = ()

    def surfaces(self) -> tuple[str, ...]:
        return (self.preferred_term,) + self.synonyms


@dataclass(frozen=True)
class Ambiguity:
    """A normalized surface form claimed by multiple concepts."""

    surface: str
    winner: str
    losers: tuple[str, ...]


@dataclass(frozen=True)
class LoadSummary:
    concept_count: int
    surface_count: int
    ambiguities: tuple[Ambiguity, ...]


@dataclass
class Dictionary:
    """Immutable lookup structures over the loaded vocabulary."""

    concepts: dict[str, Concept]
    surface_index: dict[str, str]  # normalized surface -> concept id
    surface_display: dict[str, str]  # normalized surface -> original spelling
    tree_name_index: dict[str, str]  # tree number -> display name
    load_summary: LoadSummary
    token_trie: TokenTrie = field(repr=False, default_factory=TokenTrie)

    def __contains__(self, concept_id: str) -> bool:
        return concept_id in self.concepts

    def get(self, concept_id: str) -> Concept:
        try:
            return self.concepts[concept_id]
        except KeyError:
            raise UnknownConcept(concept_id) from None


def _parse_concept_line(line: str, line_number: int) -> Concept:
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        raise MalformedRecord(line_number, f"invalid JSON: {exc.msg}") from exc
    if not isinstance(obj, dict):
        raise MalformedRecord(line_number, "record must be a JSON object")

    concept_id = obj.get("id")
    if not isinstance(concept_id, str) or not concept_id or any(ch.isspace() for ch in concept_id):
        raise MalformedRecord(line_number, "field 'id' must be a nonempty string without whitespace")
    preferred = obj.get("preferred_term")
    if not isinstance(preferred, str) or not preferred.strip():
        raise MalformedRecord(line_number, "field 'preferred_term' must be a nonempty string")

    def _str_list(key: str) -> list[str]:
        value = obj.get(key, [])
        if not isinstance(value, list) or any(not isinstance(v, str) for v in value):
            raise MalformedRecord(line_number, f"field {key!r} must be a list of strings")
        return value

    tree_numbers = _str_list("tree_numbers")
    for tn in tree_numbers:
        if not _TREE_NUMBER_RE.match(tn):
            raise MalformedRecord(line_number, f"invalid tree number: {tn!r}")

    # Synonyms that collapse onto the preferred term (or onto an earlier
    # synonym) after normalization carry no extra information; drop them.
    seen = {normalize(preferred)}
    synonyms: list[str] = []
    for syn in _str_list("synonyms"):
        norm = normalize(syn)
        if not norm or norm in seen:
            continue
        seen.add(norm)
        synonyms.append(syn)

    return Concept(
        id=concept_id,
        preferred_term=preferred,
        synonyms=tuple(synonyms),
        tree_numbers=tuple(tree_numbers),
        semantic_types=tuple(_str_list("semantic_types")),
    )


def load_dictionary(path: str | Path) -> Dictionary:
    """Load and index a dictionary file.

    Ambiguous surface forms (one normalized form claimed by several concepts)
    resolve to the lexicographically smallest concept id; every conflict is
    recorded in the load summary and logged.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise IoFailure(str(path), exc.strerror or str(exc)) from exc

    concepts: dict[str, Concept] = {}
    for line_number, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        concept = _parse_concept_line(line, line_number)
        if concept.id in concepts:
            raise DuplicateConceptId(concept.id)
        concepts[concept.id] = concept
    if not concepts:
        raise EmptyDictionary(str(path))

    # claims: normalized surface -> {concept id -> first original spelling}
    claims: dict[str, dict[str, str]] = {}
    for concept in concepts.values():
        for surface in concept.surfaces():
            norm = normalize(surface)
            if not norm:
                continue
            claims.setdefault(norm, {}).setdefault(concept.id, surface)

    surface_index: dict[str, str] = {}
    surface_display: dict[str, str] = {}
    ambiguities: list[Ambiguity] = []
    for norm in sorted(claims):
        claimants = claims[norm]
        winner = min(claimants)
        surface_index[norm] = winner
        surface_display[norm] = claimants[winner]
        if len(claimants) > 1:
            losers = tuple(sorted(set(claimants) - {winner}))
            ambiguities.append(Ambiguity(surface=norm, winner=winner, losers=losers))
            logger.warning(
                "ambiguous surface %r claimed by %s; resolved to %s",
                norm, sorted(claimants), winner,
            )

    tree_name_index: dict[str, str] = {}
    for concept_id in sorted(concepts):
        for tn in concepts[concept_id].tree_numbers:
            tree_name_index.setdefault(tn, concepts[concept_id].preferred_term)

    trie = TokenTrie()
    for norm, concept_id in surface_index.items():
        trie.insert(norm, concept_id)

    summary = LoadSummary(
        concept_count=len(concepts),
        surface_count=len(surface_index),
        ambiguities=tuple(ambiguities),
    )
    logger.info(
        "loaded dictionary %s: %d concepts, %d surfaces, %d ambiguities",
        path, summary.concept_count, summary.surface_count, len(summary.ambiguities),
    )
    return Dictionary(
        concepts=concepts,
        surface_index=surface_index,
        surface_display=surface_display,
        tree_name_index=tree_name_index,
        load_summary=summary,
        token_trie=trie,
    )


def resolve_term(dictionary: Dictionary, surface: str) -> str | None:
    """Concept id whose normalized surface equals normalize(surface), else None."""
    return dictionary.surface_index.get(normalize(surface))


def category_name(dictionary: Dictionary, tree_prefix: str) -> str:
    """Display name of the concept owning the tree number, else the raw prefix."""
    return dictionary.tree_name_index.get(tree_prefix, tree_prefix)


def concept_record(concept: Concept) -> dict:
    """Canonical JSON-ready form of a concept (stable field set and order)."""
    return {
        "id": concept.id,
        "preferred_term": concept.preferred_term,
        "synonyms": list(concept.synonyms),
        "tree_numbers": list(concept.tree_numbers),
        "semantic_types": list(concept.semantic_types),
    }
