"""`name:key=value,key=value` specs used by the registries and the CLI."""

from __future__ import annotations

from fractions import Fraction


def parse_spec(text: str) -> tuple[str, dict[str, str]]:
    name, _, rest = text.partition(":")
    params: dict[str, str] = {}
    for part in filter(None, (p.strip() for p in rest.split(","))):
        key, eq, val = part.partition("=")
        if not eq:
            raise ValueError(f"parameter {part!r} in {text!r} is not key=value")
        params[key.strip()] = val.strip()
    return name.strip(), params


def as_int(params: dict[str, str], key: str, default: int | None = None) -> int:
    if key not in params:
        if default is None:
            raise ValueError(f"missing parameter {key!r}")
        return default
    return int(float(params[key])) if "e" in params[key].lower() else int(params[key])


def as_fraction(params: dict[str, str], key: str, default: Fraction | None = None) -> Fraction:
    if key not in params:
        if default is None:
            raise ValueError(f"missing parameter {key!r}")
        return default
    return Fraction(params[key])
