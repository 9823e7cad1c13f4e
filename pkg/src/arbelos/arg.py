#!/usr/bin/env python3

import builtins
from typing import Optional, Sequence

from box import Box
from docopt import docopt


class UsageError(ValueError):
    """Option value rejected by the type declared for it."""


def _tags(doc: str, parser: dict) -> dict:
    """Map option name to the type named in its <name:type> tag."""
    tags = {}
    in_options = False
    for line in doc.splitlines():
        line = line.strip()
        if line == "Options:":
            in_options = True
            continue
        if not line:
            in_options = False
        if not in_options:
            continue

        tag = None
        for word in line.split():
            if word.startswith("-") and word in parser:
                tag = word.lstrip("-")
            elif tag and word.startswith("<") and ":" in word:
                tags[tag] = word.strip("<>").split(":")[1]
    return tags


def parse(
    doc: str, names: Optional[dict] = None, argv: Optional[Sequence[str]] = None
) -> Box:
    """Parse options as described in doc, converting <name:type> tags."""
    parser = docopt(doc, argv=argv)
    tags = _tags(doc, parser)

    lookup = {**vars(builtins), **(names or {})}
    args = {}
    for key, value in parser.items():
        name = key.lstrip("-")
        if name in tags and value is not None:
            try:
                value = lookup[tags[name]](value)
            except (TypeError, ValueError) as e:
                raise UsageError(f"{key} {value!r}: {e}") from e
        args[name.replace("-", "_")] = value

    return Box(args, frozen_box=True)
