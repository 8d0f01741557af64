"""Report payloads: canonical JSON, volatile-field stripping, text rendering.

Every run of the library produces one JSON-able payload dict carrying a
top-level "schema" integer. Canonical serialization (sorted keys, no
whitespace) is what run records hash and what the determinism guarantees
talk about: two runs agree iff their canonical JSON agrees after dropping
the volatile fields (timestamps and elapsed time).
"""

from __future__ import annotations

import json
from typing import Any

SCHEMA_VERSION = 1

VOLATILE_KEYS = {"elapsed_ms", "timestamp"}


def canonical_json(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def strip_volatile(payload: Any) -> Any:
    """Recursively drop volatile keys; used when comparing runs."""
    if isinstance(payload, dict):
        return {k: strip_volatile(v) for k, v in payload.items() if k not in VOLATILE_KEYS}
    if isinstance(payload, list):
        return [strip_volatile(v) for v in payload]
    return payload


def payloads_match(a: dict, b: dict) -> bool:
    return canonical_json(strip_volatile(a)) == canonical_json(strip_volatile(b))


def _render_value(key: str, value: Any, lines: list[str], indent: str) -> None:
    if isinstance(value, dict):
        lines.append(f"{indent}{key}:")
        for k in sorted(value):
            _render_value(k, value[k], lines, indent + "  ")
    elif isinstance(value, list):
        lines.append(f"{indent}{key}: {len(value)} item(s)")
        for item in value[:50]:
            if isinstance(item, (dict, list)):
                lines.append(f"{indent}  - {canonical_json(item) if isinstance(item, dict) else item}")
            else:
                lines.append(f"{indent}  - {item}")
        if len(value) > 50:
            lines.append(f"{indent}  ... ({len(value) - 50} more)")
    else:
        lines.append(f"{indent}{key}: {value}")


def render_text(payload: dict) -> str:
    """Human-oriented rendering; carries the same counts as the JSON form
    but the layout is explicitly not a stable interface."""
    lines: list[str] = []
    for key in sorted(payload):
        _render_value(key, payload[key], lines, "")
    return "\n".join(lines)
