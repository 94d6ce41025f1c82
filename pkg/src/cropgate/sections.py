"""Sectioned key-value document format shared by farm and factor files.

Grammar (see docs/formats.md for the full description):

* UTF-8 text, LF or CRLF line endings, ``#`` starts a comment.
* ``[path.of.segments]`` opens a section; segment characters: ``A-Za-z0-9_``.
* Entries are ``key = value``; keys are unique within their section and
  section paths are unique within the document. Order carries no meaning.
* A value is a scalar or a comma-separated sequence of scalars. Scalars are
  quantity literals ("0.15 Mg/ha"), quoted text, bare identifiers, or the
  booleans ``true``/``false``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .units import Quantity, UnitError, format_quantity, parse_quantity

__all__ = ["SectionSyntaxError", "Entry", "Section", "Document",
           "parse_document", "serialize_document"]

Scalar = Quantity | str | bool
Value = Scalar | list


class SectionSyntaxError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


_HEADER_RE = re.compile(r"\[([A-Za-z0-9_]+(?:\.[A-Za-z0-9_]+)*)\]\s*$")
_KEY_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")


@dataclass(frozen=True)
class Entry:
    key: str
    value: Value
    line: int


@dataclass
class Section:
    path: tuple[str, ...]
    entries: dict[str, Entry] = field(default_factory=dict)
    line: int = 0

    @property
    def name(self) -> str:
        return ".".join(self.path)

    def get(self, key: str, default=None) -> Value:
        entry = self.entries.get(key)
        return entry.value if entry is not None else default

    def __contains__(self, key: str) -> bool:
        return key in self.entries


@dataclass
class Document:
    sections: list[Section] = field(default_factory=list)

    def find(self, *prefix: str) -> list[Section]:
        """Sections whose path starts with the given segments."""
        return [s for s in self.sections if s.path[: len(prefix)] == prefix]

    def section(self, *path: str) -> Section | None:
        for s in self.sections:
            if s.path == path:
                return s
        return None


def _is_escaped(text: str, i: int) -> bool:
    # a character is escaped iff an odd number of backslashes precede it
    backslashes = 0
    while i - backslashes - 1 >= 0 and text[i - backslashes - 1] == "\\":
        backslashes += 1
    return backslashes % 2 == 1


def _split_scalars(text: str, line: int, col0: int) -> list[tuple[str, int]]:
    # split on commas outside quotes, keeping column offsets
    parts: list[tuple[str, int]] = []
    depth_quote = False
    start = 0
    for i, ch in enumerate(text):
        if ch == '"' and not _is_escaped(text, i):
            depth_quote = not depth_quote
        elif ch == "," and not depth_quote:
            parts.append((text[start:i], col0 + start))
            start = i + 1
    if depth_quote:
        raise SectionSyntaxError("unterminated string", line, col0 + start + 1)
    parts.append((text[start:], col0 + start))
    return parts


def _parse_scalar(raw: str, line: int, col: int) -> Scalar:
    text = raw.strip()
    if not text:
        raise SectionSyntaxError("empty value element", line, col + 1)
    if text.startswith('"'):
        if not text.endswith('"') or len(text) < 2:
            raise SectionSyntaxError("unterminated string", line, col + 1)
        return text[1:-1].replace('\\"', '"').replace("\\\\", "\\")
    if text == "true":
        return True
    if text == "false":
        return False
    if text[0].isdigit() or text[0] in "+-." and len(text) > 1:
        try:
            return parse_quantity(text)
        except UnitError as exc:
            raise SectionSyntaxError(str(exc), line, col + 1) from None
    if _IDENT_RE.match(text):
        return text
    raise SectionSyntaxError(f"cannot parse value {text!r}", line, col + 1)


def parse_document(text: str) -> Document:
    """Parse a sectioned key-value document.

    Raises:
        SectionSyntaxError: on any grammar violation, with line and column.
    """
    doc = Document()
    current: Section | None = None
    seen_paths: set[tuple[str, ...]] = set()
    for lineno, raw_line in enumerate(text.replace("\r\n", "\n").split("\n"), start=1):
        # strip comments outside quotes
        in_quote = False
        line = raw_line
        for i, ch in enumerate(raw_line):
            if ch == '"' and not _is_escaped(raw_line, i):
                in_quote = not in_quote
            elif ch == "#" and not in_quote:
                line = raw_line[:i]
                break
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("["):
            m = _HEADER_RE.match(stripped)
            if not m:
                raise SectionSyntaxError("malformed section header", lineno,
                                         line.index("[") + 1)
            path = tuple(m.group(1).split("."))
            if path in seen_paths:
                raise SectionSyntaxError(f"duplicate section [{m.group(1)}]",
                                         lineno, line.index("[") + 1)
            seen_paths.add(path)
            current = Section(path=path, line=lineno)
            doc.sections.append(current)
            continue
        if "=" not in stripped:
            raise SectionSyntaxError("expected 'key = value' or section header",
                                     lineno, len(line) - len(line.lstrip()) + 1)
        if current is None:
            raise SectionSyntaxError("entry before any section header", lineno, 1)
        key_part, _, value_part = line.partition("=")
        key = key_part.strip()
        if not _KEY_RE.fullmatch(key):
            raise SectionSyntaxError(f"invalid key {key!r}", lineno,
                                     len(key_part) - len(key_part.lstrip()) + 1)
        if key in current.entries:
            raise SectionSyntaxError(
                f"duplicate key {key!r} in section [{current.name}]", lineno, 1)
        col0 = len(key_part) + 1
        scalars = [
            _parse_scalar(part, lineno, col)
            for part, col in _split_scalars(value_part, lineno, col0)
        ]
        value: Value = scalars[0] if len(scalars) == 1 else scalars
        current.entries[key] = Entry(key=key, value=value, line=lineno)
    return doc


def _serialize_scalar(value: Scalar) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Quantity):
        return format_quantity(value)
    # plain text: emit bare identifiers unquoted so they read back identically
    if _IDENT_RE.match(value) and value not in ("true", "false"):
        return value
    return '"' + value.replace("\\", "\\\\").replace('"', '\\"') + '"'


def serialize_document(doc: Document) -> str:
    """Render a document back to text; parsing the result gives equal values."""
    lines: list[str] = []
    for section in doc.sections:
        lines.append(f"[{section.name}]")
        for entry in section.entries.values():
            if isinstance(entry.value, list):
                rendered = ", ".join(_serialize_scalar(v) for v in entry.value)
            else:
                rendered = _serialize_scalar(entry.value)
            lines.append(f"{entry.key} = {rendered}")
        lines.append("")
    return "\n".join(lines)
