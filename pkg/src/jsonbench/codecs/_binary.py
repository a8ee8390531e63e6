import math
import struct

from ..model import INT64_MAX, INT64_MIN


class EncodeError(ValueError):
    pass


class DecodeError(ValueError):
    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} at offset {offset}"
        super().__init__(message)
        self.offset = offset


class Reader:
    """Cursor over an immutable byte buffer."""

    def __init__(self, data):
        self.data = bytes(data)
        self.pos = 0

    def read(self, n):
        end = self.pos + n
        if end > len(self.data):
            raise DecodeError("truncated input", self.pos)
        chunk = self.data[self.pos:end]
        self.pos = end
        return chunk

    def byte(self):
        if self.pos >= len(self.data):
            raise DecodeError("truncated input", self.pos)
        b = self.data[self.pos]
        self.pos += 1
        return b

    def peek(self):
        if self.pos >= len(self.data):
            raise DecodeError("truncated input", self.pos)
        return self.data[self.pos]

    def unpack(self, fmt):
        size = struct.calcsize(fmt)
        return struct.unpack(fmt, self.read(size))[0]

    def text(self, n):
        start = self.pos
        try:
            return self.read(n).decode("utf-8")
        except UnicodeDecodeError:
            raise DecodeError("invalid UTF-8 string", start) from None

    def finish(self, value):
        if self.pos != len(self.data):
            raise DecodeError("trailing data", self.pos)
        return value


def fits(x, fmt):
    """True when float ``x`` survives a round trip through struct ``fmt``."""
    try:
        packed = struct.pack(fmt, x)
    except OverflowError:
        return False
    return struct.unpack(fmt, packed)[0] == x


def check_int(n):
    if not INT64_MIN <= n <= INT64_MAX:
        raise EncodeError(f"integer {n} is outside the signed 64-bit range")


def check_float(x):
    if math.isnan(x) or math.isinf(x):
        raise EncodeError(f"{x!r} is not a JSON number")


def decoded_int(n, offset):
    if not INT64_MIN <= n <= INT64_MAX:
        raise DecodeError(f"integer {n} is outside the signed 64-bit range", offset)
    return n


def decoded_float(x, offset):
    if math.isnan(x) or math.isinf(x):
        raise DecodeError(f"{x!r} is not a JSON number", offset)
    return x


def add_member(obj, key, value, offset):
    if key in obj:
        raise DecodeError(f"duplicate object key {key!r}", offset)
    obj[key] = value
