"""MessagePack over JsonValue with minimal-length headers.

Integers take the smallest fixint/uint/int family member that holds them,
floats become float32 only when that is exact, and strings, arrays and maps
use the shortest length header. Binary and extension types have no JSON
counterpart and are rejected on decode.
"""

import struct

from ._binary import (DecodeError, EncodeError, Reader, add_member, check_float,
                      check_int, decoded_float, decoded_int, fits)


def _int(n, out):
    check_int(n)
    if 0 <= n < 0x80:
        out.append(n)
    elif -32 <= n < 0:
        out += struct.pack(">b", n)
    elif n >= 0:
        if n <= 0xFF:
            out += struct.pack(">BB", 0xCC, n)
        elif n <= 0xFFFF:
            out += struct.pack(">BH", 0xCD, n)
        elif n <= 0xFFFFFFFF:
            out += struct.pack(">BI", 0xCE, n)
        else:
            out += struct.pack(">BQ", 0xCF, n)
    elif n >= -0x80:
        out += struct.pack(">Bb", 0xD0, n)
    elif n >= -0x8000:
        out += struct.pack(">Bh", 0xD1, n)
    elif n >= -0x80000000:
        out += struct.pack(">Bi", 0xD2, n)
    else:
        out += struct.pack(">Bq", 0xD3, n)


def _header(n, fix_base, fix_limit, codes, out):
    # codes: (8-bit, 16-bit, 32-bit) header bytes; None where the family has none
    if n < fix_limit:
        out.append(fix_base | n)
    elif codes[0] is not None and n <= 0xFF:
        out += struct.pack(">BB", codes[0], n)
    elif n <= 0xFFFF:
        out += struct.pack(">BH", codes[1], n)
    elif n <= 0xFFFFFFFF:
        out += struct.pack(">BI", codes[2], n)
    else:
        raise EncodeError(f"length {n} exceeds the MessagePack limit")


def _encode(value, out):
    if value is None:
        out.append(0xC0)
    elif value is False:
        out.append(0xC2)
    elif value is True:
        out.append(0xC3)
    elif isinstance(value, int):
        _int(value, out)
    elif isinstance(value, float):
        check_float(value)
        if fits(value, ">f"):
            out += struct.pack(">Bf", 0xCA, value)
        else:
            out += struct.pack(">Bd", 0xCB, value)
    elif isinstance(value, str):
        raw = value.encode("utf-8")
        _header(len(raw), 0xA0, 32, (0xD9, 0xDA, 0xDB), out)
        out += raw
    elif isinstance(value, list):
        _header(len(value), 0x90, 16, (None, 0xDC, 0xDD), out)
        for item in value:
            _encode(item, out)
    elif isinstance(value, dict):
        _header(len(value), 0x80, 16, (None, 0xDE, 0xDF), out)
        for key, item in value.items():
            _encode(key, out)
            _encode(item, out)
    else:
        raise EncodeError(f"{type(value).__name__} is not a JSON value")


def encode(value) -> bytes:
    out = bytearray()
    try:
        _encode(value, out)
    except RecursionError:
        raise EncodeError("document nesting is too deep") from None
    return bytes(out)


_UNPACK = {
    0xCC: ">B", 0xCD: ">H", 0xCE: ">I", 0xCF: ">Q",
    0xD0: ">b", 0xD1: ">h", 0xD2: ">i", 0xD3: ">q",
}


def _decode(r):
    start = r.pos
    b = r.byte()
    if b <= 0x7F:
        return b
    if b >= 0xE0:
        return b - 0x100
    if 0xA0 <= b <= 0xBF:
        return r.text(b & 0x1F)
    if 0x90 <= b <= 0x9F:
        return _array(r, b & 0x0F)
    if 0x80 <= b <= 0x8F:
        return _map(r, b & 0x0F)
    if b == 0xC0:
        return None
    if b == 0xC2:
        return False
    if b == 0xC3:
        return True
    if b in _UNPACK:
        return decoded_int(r.unpack(_UNPACK[b]), start)
    if b == 0xCA:
        return decoded_float(r.unpack(">f"), start)
    if b == 0xCB:
        return decoded_float(r.unpack(">d"), start)
    if b == 0xD9:
        return r.text(r.unpack(">B"))
    if b == 0xDA:
        return r.text(r.unpack(">H"))
    if b == 0xDB:
        return r.text(r.unpack(">I"))
    if b == 0xDC:
        return _array(r, r.unpack(">H"))
    if b == 0xDD:
        return _array(r, r.unpack(">I"))
    if b == 0xDE:
        return _map(r, r.unpack(">H"))
    if b == 0xDF:
        return _map(r, r.unpack(">I"))
    raise DecodeError(f"unsupported type tag 0x{b:02x}", start)


def _array(r, n):
    return [_decode(r) for _ in range(n)]


def _map(r, n):
    obj = {}
    for _ in range(n):
        at = r.pos
        key = _decode(r)
        if not isinstance(key, str):
            raise DecodeError("map key is not a string", at)
        add_member(obj, key, _decode(r), at)
    return obj


def decode(data: bytes):
    r = Reader(data)
    try:
        return r.finish(_decode(r))
    except RecursionError:
        raise DecodeError("nesting is too deep", r.pos) from None
