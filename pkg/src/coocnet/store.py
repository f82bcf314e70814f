"""Index persistence: canonical on-disk layout, loading, and merging.

An index directory is fully self-contained:

    manifest.json     format version, dictionary checksum, weights, stats
    dictionary.jsonl  canonical copy of the concept dictionary
    matrix.txt        "row col score" lines sorted by (row, col)
    evidence.txt      "idA idB doc_id year kind [subject]" lines, idA < idB
    documents.jsonl   metadata for every document referenced by evidence

Serialization is canonical: saving the same logical index always produces
byte-identical files, so directories can be diffed and checksummed.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from pathlib import Path

from .cooc import (
    BuildStats,
    ConceptIndexMap,
    CooccurrenceMatrix,
    DocInfo,
    EdgeEvidence,
    IndexBuild,
    Posting,
    WeightConfig,
)
from .errors import (
    CorruptFile,
    DuplicateConceptId,
    EmptyDictionary,
    IncompatibleIndexes,
    IoFailure,
    MalformedRecord,
    MissingFile,
    VersionMismatch,
)
from .extract import SOURCE_KINDS
from .ontology import Dictionary, concept_record, load_dictionary

FORMAT_VERSION = 1

MANIFEST_FILE = "manifest.json"
DICTIONARY_FILE = "dictionary.jsonl"
MATRIX_FILE = "matrix.txt"
EVIDENCE_FILE = "evidence.txt"
DOCUMENTS_FILE = "documents.jsonl"


@dataclass
class IndexBundle:
    """A complete loaded index: everything the query layer needs."""

    dictionary: Dictionary
    fmap: ConceptIndexMap
    matrix: CooccurrenceMatrix
    evidence: EdgeEvidence
    stats: BuildStats
    weights: WeightConfig
    documents: dict[str, DocInfo]
    dictionary_checksum: str

    @classmethod
    def from_build(cls, build: IndexBuild, dictionary: Dictionary, weights: WeightConfig) -> "IndexBundle":
        return cls(
            dictionary=dictionary,
            fmap=build.fmap,
            matrix=build.matrix,
            evidence=build.evidence,
            stats=build.stats,
            weights=weights,
            documents=build.documents,
            dictionary_checksum=dictionary_checksum(dictionary),
        )


def canonical_dictionary_lines(dictionary: Dictionary) -> list[str]:
    """One compact JSON line per concept, ascending by concept id."""
    return [
        json.dumps(concept_record(dictionary.concepts[cid]), sort_keys=True,
                   separators=(",", ":"), ensure_ascii=False)
        for cid in sorted(dictionary.concepts)
    ]


def dictionary_checksum(dictionary: Dictionary) -> str:
    """Content hash of the dictionary, independent of source file formatting."""
    digest = hashlib.sha256()
    for line in canonical_dictionary_lines(dictionary):
        digest.update(line.encode("utf-8"))
        digest.update(b"\n")
    return digest.hexdigest()


def format_score(value: float) -> str:
    """Integer-valued scores print without a fractional part."""
    if value == int(value):
        return str(int(value))
    return repr(value)


def _matrix_lines(matrix: CooccurrenceMatrix) -> list[str]:
    return [
        f"{row} {col} {format_score(score)}"
        for (row, col), score in sorted(matrix.entries.items())
    ]


def _evidence_lines(evidence: EdgeEvidence) -> list[str]:
    lines = []
    for a, b in sorted(evidence.pairs()):
        for p in evidence.postings(a, b):
            fields = [a, b, p.doc_id, str(p.pub_year), p.source_kind]
            if p.subject_concept is not None:
                fields.append(p.subject_concept)
            lines.append(" ".join(fields))
    return lines


def _document_lines(documents: dict[str, DocInfo]) -> list[str]:
    lines = []
    for doc_id in sorted(documents):
        info = documents[doc_id]
        obj = {
            "doc_id": info.doc_id,
            "pub_date": info.pub_date,
            "source_kind": info.source_kind,
            "title": info.title,
        }
        if info.url is not None:
            obj["url"] = info.url
        if info.subject_concept is not None:
            obj["subject_concept"] = info.subject_concept
        lines.append(json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False))
    return lines


def _write_text(path: Path, lines: list[str]) -> None:
    body = "".join(line + "\n" for line in lines)
    path.write_text(body, encoding="utf-8")


def save_index(bundle: IndexBundle, path: str | Path) -> None:
    """Write the complete index directory; always canonical bytes."""
    target = Path(path)
    manifest = {
        "build_stats": bundle.stats.to_json_obj(),
        "dictionary_checksum": bundle.dictionary_checksum,
        "format_version": FORMAT_VERSION,
        "weight_config": bundle.weights.to_json_obj(),
    }
    try:
        target.mkdir(parents=True, exist_ok=True)
        (target / MANIFEST_FILE).write_text(
            json.dumps(manifest, sort_keys=True, indent=2, ensure_ascii=False) + "\n",
            encoding="utf-8",
        )
        _write_text(target / DICTIONARY_FILE, canonical_dictionary_lines(bundle.dictionary))
        _write_text(target / MATRIX_FILE, _matrix_lines(bundle.matrix))
        _write_text(target / EVIDENCE_FILE, _evidence_lines(bundle.evidence))
        _write_text(target / DOCUMENTS_FILE, _document_lines(bundle.documents))
    except OSError as exc:
        raise IoFailure(str(target), str(exc)) from exc


def _read_text(path: Path, name: str) -> str:
    full = path / name
    if not full.is_file():
        raise MissingFile(name)
    try:
        return full.read_text(encoding="utf-8")
    except OSError as exc:
        raise IoFailure(str(full), str(exc)) from exc


def _parse_matrix(text: str, size: int) -> CooccurrenceMatrix:
    matrix = CooccurrenceMatrix()
    for number, line in enumerate(text.splitlines(), start=1):
        parts = line.split(" ")
        if len(parts) != 3:
            raise CorruptFile("matrix", f"line {number}: expected 3 fields")
        try:
            row, col, score = int(parts[0]), int(parts[1]), float(parts[2])
        except ValueError:
            raise CorruptFile("matrix", f"line {number}: malformed numbers") from None
        if not (1 <= row <= size and 1 <= col <= size):
            raise CorruptFile("matrix", f"line {number}: index out of range 1..{size}")
        if score == 0:
            raise CorruptFile("matrix", f"line {number}: zero entry")
        if (row, col) in matrix.entries:
            raise CorruptFile("matrix", f"line {number}: duplicate entry")
        matrix.entries[(row, col)] = score
    return matrix


def _parse_evidence(text: str, dictionary: Dictionary) -> EdgeEvidence:
    evidence = EdgeEvidence()
    for number, line in enumerate(text.splitlines(), start=1):
        parts = line.split(" ")
        if len(parts) not in (5, 6):
            raise CorruptFile("evidence", f"line {number}: expected 5 or 6 fields")
        a, b, doc_id, year_text, kind = parts[:5]
        subject = parts[5] if len(parts) == 6 else None
        if not a < b:
            raise CorruptFile("evidence", f"line {number}: pair not in canonical order")
        if a not in dictionary.concepts or b not in dictionary.concepts:
            raise CorruptFile("evidence", f"line {number}: unknown concept id")
        if kind not in SOURCE_KINDS:
            raise CorruptFile("evidence", f"line {number}: unknown source kind {kind!r}")
        try:
            year = int(year_text)
        except ValueError:
            raise CorruptFile("evidence", f"line {number}: malformed year") from None
        evidence.add(a, b, Posting(doc_id=doc_id, pub_year=year, source_kind=kind,
                                   subject_concept=subject))
    return evidence


def _parse_documents(text: str) -> dict[str, DocInfo]:
    documents: dict[str, DocInfo] = {}
    for number, line in enumerate(text.splitlines(), start=1):
        try:
            obj = json.loads(line)
        except json.JSONDecodeError:
            raise CorruptFile("documents", f"line {number}: invalid JSON") from None
        try:
            info = DocInfo(
                doc_id=obj["doc_id"],
                title=obj["title"],
                pub_date=obj["pub_date"],
                source_kind=obj["source_kind"],
                url=obj.get("url"),
                subject_concept=obj.get("subject_concept"),
            )
        except (KeyError, TypeError):
            raise CorruptFile("documents", f"line {number}: missing fields") from None
        if info.doc_id in documents:
            raise CorruptFile("documents", f"line {number}: duplicate doc_id")
        documents[info.doc_id] = info
    return documents


def load_index(path: str | Path) -> IndexBundle:
    """Load and validate a saved index directory."""
    source = Path(path)
    if not source.is_dir():
        raise MissingFile(str(source))

    try:
        manifest = json.loads(_read_text(source, MANIFEST_FILE))
    except json.JSONDecodeError:
        raise CorruptFile("manifest", "invalid JSON") from None
    if not isinstance(manifest, dict):
        raise CorruptFile("manifest", "manifest must be a JSON object")

    version = manifest.get("format_version")
    if version != FORMAT_VERSION:
        raise VersionMismatch(str(version), str(FORMAT_VERSION))

    try:
        weights = WeightConfig.from_json_obj(manifest.get("weight_config"))
    except ValueError as exc:
        raise CorruptFile("manifest", f"bad weight_config: {exc}") from None
    stats_obj = manifest.get("build_stats")
    if not isinstance(stats_obj, dict):
        raise CorruptFile("manifest", "missing build_stats")
    try:
        stats = BuildStats(
            documents=int(stats_obj["documents"]),
            skipped=int(stats_obj["skipped"]),
            matched_spans=int(stats_obj["matched_spans"]),
            distinct_edges=int(stats_obj["distinct_edges"]),
        )
    except (KeyError, TypeError, ValueError):
        raise CorruptFile("manifest", "malformed build_stats") from None

    dict_path = source / DICTIONARY_FILE
    if not dict_path.is_file():
        raise MissingFile("dictionary")
    try:
        dictionary = load_dictionary(dict_path)
    except (MalformedRecord, DuplicateConceptId, EmptyDictionary) as exc:
        raise CorruptFile("dictionary", str(exc)) from exc
    checksum = dictionary_checksum(dictionary)
    recorded = manifest.get("dictionary_checksum")
    if recorded != checksum:
        raise CorruptFile("manifest", "dictionary checksum mismatch")

    fmap = ConceptIndexMap.from_dictionary(dictionary)
    matrix = _parse_matrix(_read_text(source, MATRIX_FILE), len(dictionary.concepts))
    evidence = _parse_evidence(_read_text(source, EVIDENCE_FILE), dictionary)
    documents = _parse_documents(_read_text(source, DOCUMENTS_FILE))

    return IndexBundle(
        dictionary=dictionary,
        fmap=fmap,
        matrix=matrix,
        evidence=evidence,
        stats=stats,
        weights=weights,
        documents=documents,
        dictionary_checksum=checksum,
    )


def merge_incremental(base: IndexBundle, other: IndexBundle) -> IndexBundle:
    """Merge two indexes built with the same dictionary and weights.

    Matrix entries add, evidence postings union (first bundle wins a doc_id
    collision, the postings being identical anyway), and the distinct edge
    count is recomputed from the merged evidence.
    """
    if base.dictionary_checksum != other.dictionary_checksum:
        raise IncompatibleIndexes("dictionary checksums differ")
    if base.weights != other.weights:
        raise IncompatibleIndexes("weight configurations differ")

    matrix = CooccurrenceMatrix(dict(base.matrix.entries))
    for (row, col), score in other.matrix.entries.items():
        matrix.add(row, col, score)
    matrix.drop_zeros()

    evidence = EdgeEvidence()
    for source in (base.evidence, other.evidence):
        for a, b in source.pairs():
            for posting in source.postings(a, b):
                evidence.add(a, b, posting)

    documents = dict(base.documents)
    for doc_id, info in other.documents.items():
        documents.setdefault(doc_id, info)

    stats = BuildStats(
        documents=base.stats.documents + other.stats.documents,
        skipped=base.stats.skipped + other.stats.skipped,
        matched_spans=base.stats.matched_spans + other.stats.matched_spans,
        distinct_edges=len(evidence),
    )
    return IndexBundle(
        dictionary=base.dictionary,
        fmap=base.fmap,
        matrix=matrix,
        evidence=evidence,
        stats=stats,
        weights=base.weights,
        documents=documents,
        dictionary_checksum=base.dictionary_checksum,
    )
