"""Run persistence and replay.

A run record freezes everything needed to reproduce a run: the command line,
the effective configuration, digests of any input files, the payload it
produced, and the tool version. Records are content-addressed (the filename
is a digest of the non-volatile content), so persisting the same run twice
is idempotent. Replay re-executes the recorded command and diffs the new
payload against the stored one, ignoring timestamps and elapsed time; a
version mismatch is always flagged.
"""

from __future__ import annotations

import hashlib
import json
import time
from pathlib import Path

from .errors import InvalidInput
from .reports import SCHEMA_VERSION, canonical_json, strip_volatile


def _digest_file(path: str) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 16), b""):
            h.update(chunk)
    return h.hexdigest()


def make_record(payload: dict, command: list[str], config: dict,
                input_paths: list[str], version: str) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "tool": "ordshadow",
        "version": version,
        "command": list(command),
        "config": config,
        "input_digests": {p: _digest_file(p) for p in input_paths},
        "payload": payload,
        "timestamp": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
    }


def record_address(record: dict) -> str:
    stable = {k: record[k] for k in ("command", "config", "payload", "version")}
    return hashlib.sha256(canonical_json(strip_volatile(stable)).encode()).hexdigest()[:16]


def persist_run(payload: dict, directory, command: list[str], config: dict,
                input_paths: list[str], version: str) -> Path:
    directory = Path(directory)
    try:
        directory.mkdir(parents=True, exist_ok=True)
        record = make_record(payload, command, config, input_paths, version)
        path = directory / f"run-{record_address(record)}.json"
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(record, fh, indent=1, sort_keys=True)
            fh.write("\n")
    except OSError as exc:
        raise InvalidInput(f"cannot persist run record: {exc}") from exc
    return path


def load_record(path) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            record = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InvalidInput(f"cannot read run record {path}: {exc}") from exc
    for key in ("command", "payload", "version"):
        if key not in record:
            raise InvalidInput(f"run record {path} lacks {key!r}")
    return record


def compare_payloads(old: dict, new: dict) -> list[str]:
    """Human-readable differences between two payloads, volatile fields ignored."""
    a = strip_volatile(old)
    b = strip_volatile(new)
    diffs: list[str] = []

    def walk(x, y, path):
        if type(x) is not type(y):
            diffs.append(f"{path}: type {type(x).__name__} != {type(y).__name__}")
            return
        if isinstance(x, dict):
            for k in sorted(set(x) | set(y)):
                if k not in x:
                    diffs.append(f"{path}.{k}: only in replay")
                elif k not in y:
                    diffs.append(f"{path}.{k}: only in record")
                else:
                    walk(x[k], y[k], f"{path}.{k}")
        elif isinstance(x, list):
            if len(x) != len(y):
                diffs.append(f"{path}: length {len(x)} != {len(y)}")
            else:
                for i, (xi, yi) in enumerate(zip(x, y)):
                    walk(xi, yi, f"{path}[{i}]")
        elif x != y:
            diffs.append(f"{path}: {x!r} != {y!r}")

    walk(a, b, "payload")
    return diffs
