from .text import (
    dump_category,
    dump_map,
    dump_semigroup,
    dump_transformations,
    parse_category,
    parse_map,
    parse_semigroup,
    parse_transformations,
    read_category,
    read_map,
    read_semigroup,
    write_text,
)

__all__ = [
    "dump_category",
    "dump_map",
    "dump_semigroup",
    "dump_transformations",
    "parse_category",
    "parse_map",
    "parse_semigroup",
    "parse_transformations",
    "read_category",
    "read_map",
    "read_semigroup",
    "write_text",
]
