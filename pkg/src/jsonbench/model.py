"""Lossless JSON value model.

Documents are plain Python values: ``None``, ``bool``, ``int`` (signed
64-bit), ``float`` (finite binary64), ``str``, ``list`` and ``dict`` (key
order preserved). This module parses them from UTF-8 text, renders the
canonical minified form, compares them structurally and flattens them into
a pre-order sequence of :class:`PathedNode` rows.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from decimal import Decimal
from json.encoder import encode_basestring
from typing import Any, Iterator, Optional, Sequence, Union

JsonValue = Any

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1

STRUCTURAL = "structural"
TEXTUAL = "textual"
NUMERIC = "numeric"
BOOLEAN = "boolean"

Token = Union[str, int]


class JsonParseError(ValueError):
    """Raised for malformed input; carries the character offset when known."""

    def __init__(self, message: str, pos: Optional[int] = None,
                 lineno: Optional[int] = None, colno: Optional[int] = None):
        if pos is not None:
            message = f"{message}: line {lineno} column {colno} (char {pos})"
        super().__init__(message)
        self.pos = pos
        self.lineno = lineno
        self.colno = colno


# -- parsing -----------------------------------------------------------------

def _parse_int(text: str) -> Union[int, float]:
    n = int(text)
    if INT64_MIN <= n <= INT64_MAX:
        return n
    # Out-of-range integer literals survive only when binary64 holds them
    # exactly (e.g. the digits minify() emits for the float 1e20).
    f = float(n)
    if f != float("inf") and f != float("-inf") and int(f) == n:
        return f
    raise JsonParseError(f"number {text} is outside the representable range")


def _parse_float(text: str) -> float:
    f = float(text)
    if f in (float("inf"), float("-inf")):
        raise JsonParseError(f"number {text} is outside the representable range")
    return f


def _parse_constant(name: str):
    raise JsonParseError(f"{name} is not valid JSON")


def _object_pairs(pairs):
    obj = {}
    for key, value in pairs:
        if key in obj:
            raise JsonParseError(f"duplicate object key {key!r}")
        obj[key] = value
    return obj


def _has_surrogate(s: str) -> bool:
    return any("\ud800" <= ch <= "\udfff" for ch in s)


def _check_unicode(value: JsonValue) -> None:
    stack = [value]
    while stack:
        v = stack.pop()
        if isinstance(v, str):
            if _has_surrogate(v):
                raise JsonParseError("string contains an unpaired surrogate")
        elif isinstance(v, list):
            stack.extend(v)
        elif isinstance(v, dict):
            for k, item in v.items():
                if _has_surrogate(k):
                    raise JsonParseError("object key contains an unpaired surrogate")
                stack.append(item)


def parse(text: Union[bytes, bytearray, str]) -> JsonValue:
    """Parse a complete JSON text (UTF-8 bytes or str) into a JsonValue."""
    if isinstance(text, (bytes, bytearray)):
        try:
            text = bytes(text).decode("utf-8")
        except UnicodeDecodeError as exc:
            raise JsonParseError(f"invalid UTF-8 ({exc.reason})", exc.start,
                                 *_line_col(text, exc.start)) from None
    try:
        value = json.loads(
            text,
            parse_int=_parse_int,
            parse_float=_parse_float,
            parse_constant=_parse_constant,
            object_pairs_hook=_object_pairs,
        )
    except json.JSONDecodeError as exc:
        raise JsonParseError(exc.msg, exc.pos, exc.lineno, exc.colno) from None
    except RecursionError:
        raise JsonParseError("document nesting is too deep") from None
    _check_unicode(value)
    return value


def _line_col(data: bytes, pos: int) -> tuple[int, int]:
    line = data.count(b"\n", 0, pos) + 1
    col = pos - (data.rfind(b"\n", 0, pos) + 1) + 1
    return line, col


# -- minified rendering --------------------------------------------------------

def format_number(n: Union[int, float]) -> str:
    """Render a number the way a JavaScript stringifier would.

    Integers print as plain digits. Floats use the shortest digit string
    that round-trips, laid out with the ECMAScript Number::toString rules
    (plain notation for decimal exponents in (-7, 21], exponent notation
    otherwise). Integral floats print their exact digits, so 2**60 as a
    float renders as 1152921504606846976 where JavaScript would pad the
    shortest digits with zeros; the length is the same either way.
    """
    if isinstance(n, bool):
        raise TypeError("booleans are not numbers")
    if isinstance(n, int):
        return str(n)
    if n != n or n in (float("inf"), float("-inf")):
        raise ValueError(f"{n!r} is not representable in JSON")
    if n == 0:
        return "0"
    if n < 0:
        return "-" + format_number(-n)
    sign, digit_tuple, exponent = Decimal(repr(n)).as_tuple()
    digits = "".join(map(str, digit_tuple)).rstrip("0")
    exponent += len(digit_tuple) - len(digits)
    k = len(digits)
    point = k + exponent  # value == 0.<digits> * 10**point
    if k <= point <= 21:
        # Integral and below 1e21. The exact integer has the same number of
        # digits as the zero-padded shortest form, but unlike the padded form
        # it reads back as the very same number.
        return str(int(n))
    if 0 < point <= 21:
        return digits[:point] + "." + digits[point:]
    if -6 < point <= 0:
        return "0." + "0" * (-point) + digits
    e = point - 1
    mantissa = digits if k == 1 else digits[0] + "." + digits[1:]
    return f"{mantissa}e{'+' if e >= 0 else '-'}{abs(e)}"


def _render(value: JsonValue, out: list) -> None:
    if value is None:
        out.append("null")
    elif value is True:
        out.append("true")
    elif value is False:
        out.append("false")
    elif isinstance(value, (int, float)):
        out.append(format_number(value))
    elif isinstance(value, str):
        out.append(encode_basestring(value))
    elif isinstance(value, list):
        out.append("[")
        for i, item in enumerate(value):
            if i:
                out.append(",")
            _render(item, out)
        out.append("]")
    elif isinstance(value, dict):
        out.append("{")
        for i, (key, item) in enumerate(value.items()):
            if i:
                out.append(",")
            out.append(encode_basestring(key))
            out.append(":")
            _render(item, out)
        out.append("}")
    else:
        raise TypeError(f"{type(value).__name__} is not a JSON value")


def minify(value: JsonValue) -> bytes:
    """Canonical minified UTF-8 rendering of ``value``."""
    out: list = []
    _render(value, out)
    return "".join(out).encode("utf-8")


def minified_byte_size(value: JsonValue) -> int:
    return len(minify(value))


# -- equality --------------------------------------------------------------------

def kind_of(value: JsonValue) -> str:
    if value is None or isinstance(value, bool):
        return BOOLEAN
    if isinstance(value, (int, float)):
        return NUMERIC
    if isinstance(value, str):
        return TEXTUAL
    if isinstance(value, (list, dict)):
        return STRUCTURAL
    raise TypeError(f"{type(value).__name__} is not a JSON value")


def deep_equal(a: JsonValue, b: JsonValue) -> bool:
    """Structural JSON equality.

    Numbers compare by mathematical value (``1 == 1.0``), objects as
    unordered maps, arrays positionally. Booleans never equal numbers.
    """
    if a is None or b is None:
        return a is None and b is None
    if isinstance(a, bool) or isinstance(b, bool):
        return isinstance(a, bool) and isinstance(b, bool) and a == b
    if isinstance(a, (int, float)):
        return isinstance(b, (int, float)) and a == b
    if isinstance(a, str):
        return isinstance(b, str) and a == b
    if isinstance(a, list):
        return (isinstance(b, list) and len(a) == len(b)
                and all(deep_equal(x, y) for x, y in zip(a, b)))
    if isinstance(a, dict):
        return (isinstance(b, dict) and len(a) == len(b)
                and all(k in b and deep_equal(v, b[k]) for k, v in a.items()))
    raise TypeError(f"{type(a).__name__} is not a JSON value")


# -- JSON Pointer ------------------------------------------------------------------

def escape_token(token: Token) -> str:
    return str(token).replace("~", "~0").replace("/", "~1")


def format_pointer(path: Sequence[Token]) -> str:
    """RFC 6901 pointer for ``path``; the root renders as ``/``."""
    if not path:
        return "/"
    return "".join("/" + escape_token(t) for t in path)


def resolve_pointer(document: JsonValue, pointer: str) -> JsonValue:
    """Resolve an RFC 6901 pointer (``""`` is the whole document)."""
    if pointer == "":
        return document
    if not pointer.startswith("/"):
        raise KeyError(f"invalid JSON pointer {pointer!r}")
    value = document
    for raw in pointer[1:].split("/"):
        token = raw.replace("~1", "/").replace("~0", "~")
        if isinstance(value, dict):
            value = value[token]
        elif isinstance(value, list):
            if not token.isdigit() or (token != "0" and token.startswith("0")):
                raise KeyError(f"invalid array index {token!r}")
            value = value[int(token)]
        else:
            raise KeyError(f"cannot descend into a scalar at {token!r}")
    return value


# -- flattening ---------------------------------------------------------------------

@dataclass(frozen=True)
class PathedNode:
    """One value of a document in pre-order position."""

    pointer: str
    path: tuple
    level: int
    kind: str
    byte_size: int
    duplicate_of: Optional[str] = None


def _identity_key(value: JsonValue, children: Sequence) -> tuple:
    # Hashable key that collides exactly when deep_equal holds.
    if value is None:
        return ("z",)
    if isinstance(value, bool):
        return ("b", value)
    if isinstance(value, (int, float)):
        return ("#", value)
    if isinstance(value, str):
        return ("s", value)
    if isinstance(value, list):
        return ("a", tuple(children))
    return ("o", frozenset(zip(value.keys(), children)))


def _flatten(value, path, level, rows):
    """Append pre-order rows; return (byte_size, identity_key, height)."""
    index = len(rows)
    rows.append(None)
    if isinstance(value, list):
        size, keys, height = 2 + max(len(value) - 1, 0), [], 0
        for i, item in enumerate(value):
            s, k, h = _flatten(item, path + (i,), level + 1, rows)
            size += s
            keys.append(k)
            height = max(height, h + 1)
    elif isinstance(value, dict):
        size, keys, height = 2 + max(len(value) - 1, 0), [], 0
        for name, item in value.items():
            s, k, h = _flatten(item, path + (name,), level + 1, rows)
            size += len(encode_basestring(name).encode("utf-8")) + 1 + s
            keys.append(k)
            height = max(height, h + 1)
    else:
        size, keys, height = minified_byte_size(value), (), 0
    key = _identity_key(value, keys)
    rows[index] = (path, level, kind_of(value), size, key)
    return size, key, height


def enumerate_nodes(value: JsonValue) -> list[PathedNode]:
    """Flatten ``value`` into pre-order PathedNode rows (root first).

    Object members contribute their values in stored key order; the keys
    themselves are not nodes. ``duplicate_of`` names the earliest earlier
    node that is deep-equal to this one.
    """
    rows: list = []
    _flatten(value, (), 1, rows)
    first_seen: dict = {}
    nodes: list[PathedNode] = []
    for index, (path, level, kind, size, key) in enumerate(rows):
        original = first_seen.setdefault(key, index)
        nodes.append(PathedNode(
            pointer=format_pointer(path),
            path=path,
            level=level,
            kind=kind,
            byte_size=size,
            duplicate_of=None if original == index else nodes[original].pointer,
        ))
    return nodes


def height(value: JsonValue) -> int:
    """Edges on the longest root-to-leaf path."""
    return _flatten(value, (), 1, [])[2]


def iter_values(value: JsonValue) -> Iterator[JsonValue]:
    """Pre-order walk over every value, matching enumerate_nodes order."""
    yield value
    if isinstance(value, list):
        for item in value:
            yield from iter_values(item)
    elif isinstance(value, dict):
        for item in value.values():
            yield from iter_values(item)
