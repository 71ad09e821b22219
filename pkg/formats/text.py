"""Plain-text formats for semigroups, transformation generators, categories and maps.

Blank lines and lines starting with '#' are ignored. Dumps are canonical:
parsing a dump and dumping again reproduces it byte for byte.
"""

import re
from dataclasses import dataclass
from pathlib import Path

from categories.structures import FinCategory, SfsCategory, WideSubcategory, underlying
from models.errors import ParseError
from semigroups.core import make_from_table
from semigroups.structures import FiniteSemigroup, Homomorphism, Transformation
from semigroups.transformations import generate_transformation_monoid

_TOKEN = re.compile(r"\S+")


@dataclass
class _Line:
    number: int
    text: str

    @property
    def tokens(self) -> list[tuple[str, int]]:
        return [(m.group(), m.start() + 1) for m in _TOKEN.finditer(self.text)]

    def rest_after(self, count: int) -> str:
        """Text following the first `count` tokens, with one separating space dropped."""
        tokens = list(_TOKEN.finditer(self.text))
        end = tokens[count - 1].end()
        return self.text[end + 1:] if end < len(self.text) else ""


def _lines(text: str) -> list[_Line]:
    result = []
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped and not stripped.startswith("#"):
            result.append(_Line(number, raw.rstrip("\n")))
    return result


def _int(token: tuple[str, int], line: _Line, low: int | None = None, high: int | None = None) -> int:
    text, column = token
    try:
        value = int(text)
    except ValueError:
        raise ParseError(f"expected an integer, found {text!r}", line.number, column) from None
    if (low is not None and value < low) or (high is not None and value > high):
        raise ParseError(f"{value} is outside {low}..{high}", line.number, column)
    return value


def _header(lines: list[_Line], keyword: str, count: int) -> list[int]:
    if not lines:
        raise ParseError(f"empty input, expected '{keyword}'", 1)
    line = lines[0]
    tokens = line.tokens
    if tokens[0][0] != keyword:
        raise ParseError(f"expected '{keyword}', found {tokens[0][0]!r}", line.number, tokens[0][1])
    if len(tokens) != count + 1:
        raise ParseError(f"'{keyword}' takes {count} numbers", line.number, tokens[0][1])
    return [_int(t, line, low=0) for t in tokens[1:]]


def _row(line: _Line, width: int, low: int, high: int) -> list[int]:
    tokens = line.tokens
    if len(tokens) != width:
        raise ParseError(f"expected {width} entries, found {len(tokens)}", line.number)
    return [_int(t, line, low, high) for t in tokens]


# =============================================================================
# Semigroups
# =============================================================================

def parse_semigroup(text: str) -> FiniteSemigroup:
    """Read `semigroup <n>`, n table rows, then optional `identity` and `label` lines.

    Raises:
        ParseError: with the line and column of the first problem
    """
    lines = _lines(text)
    (n,) = _header(lines, "semigroup", 1)
    if n < 1:
        raise ParseError("a semigroup needs at least one element", lines[0].number)
    if len(lines) < n + 1:
        raise ParseError(f"expected {n} table rows", lines[-1].number + 1)
    table = [_row(line, n, 0, n - 1) for line in lines[1:n + 1]]

    identity = None
    labels: dict[int, str] = {}
    for line in lines[n + 1:]:
        tokens = line.tokens
        keyword, column = tokens[0]
        if keyword == "identity" and len(tokens) == 2:
            identity = _int(tokens[1], line, 0, n - 1)
        elif keyword == "label" and len(tokens) >= 3:
            labels[_int(tokens[1], line, 0, n - 1)] = line.rest_after(2)
        else:
            raise ParseError(f"unexpected line starting with {keyword!r}", line.number, column)
    if labels and len(labels) != n:
        raise ParseError(f"labels given for {len(labels)} of {n} elements", lines[-1].number)
    return make_from_table(table, identity=identity, labels=[labels[i] for i in range(n)] if labels else None)


def dump_semigroup(semigroup: FiniteSemigroup) -> str:
    out = [f"semigroup {semigroup.size}"]
    out.extend(" ".join(str(v) for v in row) for row in semigroup.table)
    if semigroup.identity is not None:
        out.append(f"identity {semigroup.identity}")
    if semigroup.labels is not None:
        out.extend(f"label {i} {label}" for i, label in enumerate(semigroup.labels))
    return "\n".join(out) + "\n"


def parse_transformations(text: str) -> tuple[int, list[Transformation]]:
    """Read `transformations <k>` followed by one generator per line (1-based images)."""
    lines = _lines(text)
    (k,) = _header(lines, "transformations", 1)
    if k < 1:
        raise ParseError("arity must be positive", lines[0].number)
    return k, [Transformation.of(_row(line, k, 1, k)) for line in lines[1:]]


def dump_transformations(arity: int, generators: list[Transformation]) -> str:
    out = [f"transformations {arity}"]
    out.extend(" ".join(str(v) for v in t.images) for t in generators)
    return "\n".join(out) + "\n"


# =============================================================================
# Categories
# =============================================================================

def parse_category(text: str) -> SfsCategory:
    """Read the category format.

    `category <objects> <arrows>`, then `arrow <id> <dom> <cod>`,
    `identity <obj> <arrow>`, `compose <f> <g> <fg>`, `E <ids...>`,
    `M <ids...>`, optional `unit <obj>`, `label <arrow> <text>` and
    `object <obj> <text>` lines.

    Raises:
        ParseError: with the line and column of the first problem
    """
    lines = _lines(text)
    n_obj, n_arr = _header(lines, "category", 2)
    arrows: dict[int, tuple[int, int]] = {}
    identities: dict[int, int] = {}
    compose: dict[tuple[int, int], int] = {}
    e_arrows: set[int] = set()
    m_arrows: set[int] = set()
    unit = None
    arrow_labels: dict[int, str] = {}
    object_labels: dict[int, str] = {}
    obj_max, arr_max = n_obj - 1, n_arr - 1

    for line in lines[1:]:
        tokens = line.tokens
        keyword, column = tokens[0]
        args = tokens[1:]
        if keyword == "arrow" and len(args) == 3:
            f = _int(args[0], line, 0, arr_max)
            if f in arrows:
                raise ParseError(f"arrow {f} declared twice", line.number, args[0][1])
            arrows[f] = (_int(args[1], line, 0, obj_max), _int(args[2], line, 0, obj_max))
        elif keyword == "identity" and len(args) == 2:
            identities[_int(args[0], line, 0, obj_max)] = _int(args[1], line, 0, arr_max)
        elif keyword == "compose" and len(args) == 3:
            f, g, h = (_int(t, line, 0, arr_max) for t in args)
            compose[(f, g)] = h
        elif keyword in ("E", "M"):
            target = e_arrows if keyword == "E" else m_arrows
            target.update(_int(t, line, 0, arr_max) for t in args)
        elif keyword == "unit" and len(args) == 1:
            unit = _int(args[0], line, 0, obj_max)
        elif keyword == "label" and len(args) >= 2:
            arrow_labels[_int(args[0], line, 0, arr_max)] = line.rest_after(2)
        elif keyword == "object" and len(args) >= 2:
            object_labels[_int(args[0], line, 0, obj_max)] = line.rest_after(2)
        else:
            raise ParseError(f"unexpected line starting with {keyword!r}", line.number, column)

    last = lines[-1].number
    if len(arrows) != n_arr:
        raise ParseError(f"{len(arrows)} of {n_arr} arrows declared", last)
    if len(identities) != n_obj:
        raise ParseError(f"identities given for {len(identities)} of {n_obj} objects", last)
    if arrow_labels and len(arrow_labels) != n_arr:
        raise ParseError(f"labels given for {len(arrow_labels)} of {n_arr} arrows", last)
    if object_labels and len(object_labels) != n_obj:
        raise ParseError(f"labels given for {len(object_labels)} of {n_obj} objects", last)

    cat = FinCategory(
        object_count=n_obj,
        arrows=tuple(arrows[f] for f in range(n_arr)),
        identity_of=tuple(identities[a] for a in range(n_obj)),
        compose=compose,
        arrow_labels=tuple(arrow_labels[f] for f in range(n_arr)) if arrow_labels else None,
        object_labels=tuple(object_labels[a] for a in range(n_obj)) if object_labels else None,
    )
    return SfsCategory(
        cat=cat,
        e_arrows=WideSubcategory(cat, frozenset(e_arrows)),
        m_arrows=WideSubcategory(cat, frozenset(m_arrows)),
        unit=unit,
    )


def dump_category(category: "SfsCategory | FinCategory") -> str:
    cat = underlying(category)
    out = [f"category {cat.object_count} {cat.arrow_count}"]
    out.extend(f"arrow {f} {a} {b}" for f, (a, b) in enumerate(cat.arrows))
    out.extend(f"identity {a} {f}" for a, f in enumerate(cat.identity_of))
    out.extend(f"compose {f} {g} {h}" for (f, g), h in sorted(cat.compose.items()))
    if isinstance(category, SfsCategory):
        out.append(" ".join(["E"] + [str(f) for f in category.e_arrows]))
        out.append(" ".join(["M"] + [str(f) for f in category.m_arrows]))
        if category.unit is not None:
            out.append(f"unit {category.unit}")
    if cat.arrow_labels is not None:
        out.extend(f"label {f} {label}" for f, label in enumerate(cat.arrow_labels))
    if cat.object_labels is not None:
        out.extend(f"object {a} {label}" for a, label in enumerate(cat.object_labels))
    return "\n".join(out) + "\n"


# =============================================================================
# Homomorphism Maps
# =============================================================================

def parse_map(text: str) -> tuple[int, ...]:
    """Read `map <n>` followed by one line of n target indices."""
    lines = _lines(text)
    (n,) = _header(lines, "map", 1)
    if len(lines) != 2:
        raise ParseError("expected exactly one line of images", lines[-1].number)
    return tuple(_row(lines[1], n, 0, None))


def dump_map(images: "Homomorphism | tuple[int, ...]") -> str:
    values = images.map if isinstance(images, Homomorphism) else tuple(images)
    return f"map {len(values)}\n" + " ".join(str(v) for v in values) + "\n"


# =============================================================================
# Files
# =============================================================================

def read_semigroup(path: "str | Path") -> FiniteSemigroup:
    """Load a semigroup file, or a transformations file which is closed into a monoid."""
    text = Path(path).read_text()
    lines = _lines(text)
    if lines and lines[0].tokens[0][0] == "transformations":
        arity, generators = parse_transformations(text)
        return generate_transformation_monoid(arity, generators)
    return parse_semigroup(text)


def read_category(path: "str | Path") -> SfsCategory:
    return parse_category(Path(path).read_text())


def read_map(path: "str | Path") -> tuple[int, ...]:
    return parse_map(Path(path).read_text())


def write_text(path: "str | Path", text: str) -> None:
    Path(path).write_text(text)
