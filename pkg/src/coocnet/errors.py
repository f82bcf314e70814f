"""Exception types raised across the engine."""

from __future__ import annotations


class EngineError(Exception):
    """Base class for all engine errors."""


class MalformedRecord(EngineError):
    """A dictionary or corpus line could not be parsed."""

    def __init__(self, line_number: int, reason: str):
        super().__init__(f"line {line_number}: {reason}")
        self.line_number = line_number
        self.reason = reason


class DuplicateConceptId(EngineError):
    def __init__(self, concept_id: str):
        super().__init__(f"duplicate concept id: {concept_id}")
        self.concept_id = concept_id


class EmptyDictionary(EngineError):
    def __init__(self, path: str):
        super().__init__(f"dictionary file defines no concepts: {path}")
        self.path = path


class UnknownConcept(EngineError):
    def __init__(self, concept_id: str):
        super().__init__(f"unknown concept: {concept_id}")
        self.concept_id = concept_id


class UnknownEdge(EngineError):
    def __init__(self, a: str, b: str):
        super().__init__(f"no evidence for edge {a} -- {b}")
        self.pair = (a, b)


class IoFailure(EngineError):
    def __init__(self, path: str, reason: str):
        super().__init__(f"{path}: {reason}")
        self.path = path
        self.reason = reason


class MissingFile(EngineError):
    def __init__(self, name: str):
        super().__init__(f"index is missing file: {name}")
        self.name = name


class CorruptFile(EngineError):
    def __init__(self, name: str, reason: str):
        super().__init__(f"index file {name} is corrupt: {reason}")
        self.name = name
        self.reason = reason


class VersionMismatch(EngineError):
    def __init__(self, found: object, supported: int):
        super().__init__(f"unsupported index format_version {found!r} (supported: {supported})")
        self.found = found
        self.supported = supported


class IncompatibleIndexes(EngineError):
    """Two index bundles cannot be merged (different dictionary or weights)."""
