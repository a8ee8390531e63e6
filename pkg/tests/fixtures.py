"""The 184-byte demonstration document and its expected value breakdown."""

DEMO_TEXT = (
    '{"tags":[],"tz":-18000,"days":[1,1,2,1],"coord":[46.20833,6.1427],'
    '"data":[{"name":"ox03","staff":true},{"name":null,"staff":false,'
    '"extra":{"info":""}},{"name":"ox03","staff":true},{}]}'
)

# (pointer, kind, level, byte size, same as)
DEMO_ROWS = [
    ("/", "structural", 1, 184, None),
    ("/tags", "structural", 2, 2, None),
    ("/tz", "numeric", 2, 6, None),
    ("/days", "structural", 2, 9, None),
    ("/days/0", "numeric", 3, 1, None),
    ("/days/1", "numeric", 3, 1, "/days/0"),
    ("/days/2", "numeric", 3, 1, None),
    ("/days/3", "numeric", 3, 1, "/days/0"),
    ("/coord", "structural", 2, 17, None),
    ("/coord/0", "numeric", 3, 8, None),
    ("/coord/1", "numeric", 3, 6, None),
    ("/data", "structural", 2, 110, None),
    ("/data/0", "structural", 3, 28, None),
    ("/data/0/name", "textual", 4, 6, None),
    ("/data/0/staff", "boolean", 4, 4, None),
    ("/data/1", "structural", 3, 47, None),
    ("/data/1/name", "boolean", 4, 4, None),
    ("/data/1/staff", "boolean", 4, 5, None),
    ("/data/1/extra", "structural", 4, 11, None),
    ("/data/1/extra/info", "textual", 5, 2, None),
    ("/data/2", "structural", 3, 28, "/data/0"),
    ("/data/2/name", "textual", 4, 6, "/data/0/name"),
    ("/data/2/staff", "boolean", 4, 4, "/data/0/staff"),
    ("/data/3", "structural", 3, 2, None),
]

# Sizes from the jsonesort benchmark table, grouped as in its statistics table.
JSONESORT = {
    "Uncompressed": {"driven": [13, 9, 12, 48, 18, 44, 10, 11], "less": [65, 21, 39, 21, 27, 30]},
    "GZIP": {"driven": [30, 29, 32, 45, 38, 51, 30, 31], "less": [66, 41, 56, 41, 48, 48]},
    "LZ4": {"driven": [32, 28, 31, 58, 37, 63, 29, 30], "less": [79, 40, 58, 40, 46, 49]},
    "LZMA": {"driven": [32, 32, 36, 45, 41, 51, 33, 35], "less": [66, 46, 60, 46, 52, 53]},
}

# Published (average, median, range, std.dev) per row and group.
JSONESORT_STATS = {
    "Uncompressed": {"driven": (20.6, 12.5, 39, 14.9), "less": (33.8, 28.5, 44, 15.2)},
    "GZIP": {"driven": (35.8, 31.5, 22, 7.7), "less": (50, 48, 25, 8.8)},
    "LZ4": {"driven": (38.5, 31.5, 35, 13.0), "less": (52, 47.5, 39, 13.5)},
    "LZMA": {"driven": (38.1, 35.5, 19, 6.5), "less": (53.8, 52.5, 20, 7.2)},
}
