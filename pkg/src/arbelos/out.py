#!/usr/bin/env python3

import functools

import orjson

DIGITS = 17
HUMAN = 7


@functools.singledispatch
def exact(obj):
    """Return object ready for orjson, floats pinned to 17 significant digits."""
    return obj


@exact.register(float)
def _wrap_float(obj: float) -> orjson.Fragment:
    """Pre-serialize floats, orjson would pick the shortest repr."""
    return orjson.Fragment(f"{obj:.{DIGITS}g}")


@exact.register(dict)
def _wrap_dict(obj: dict) -> dict:
    return {k: exact(v) for k, v in obj.items()}


@exact.register(list)
@exact.register(tuple)
def _wrap_list(obj) -> list:
    return [exact(v) for v in obj]


def dumps(obj) -> str:
    return orjson.dumps(exact(obj)).decode()


def human(value) -> str:
    """Seven significant digits for floats, str() for anything else."""
    if isinstance(value, float):
        return f"{value:.{HUMAN}g}"
    return str(value)


def table(rows: list[dict]) -> str:
    """Left-aligned columns under a header taken from the first row."""
    cells = [list(rows[0])] + [[human(v) for v in row.values()] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(cells[0]))]
    return "\n".join(
        "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
        for row in cells
    )
