"""Reading and writing the on-disk data formats.

Model files are YAML with three keys: ``n_vars``, ``alphabet_sizes`` and
``pmf`` (flat, row-major mixed-radix order, last variable fastest); ``#``
comment lines are allowed. Probabilities are written at full precision so a
write/read round trip reproduces the source bit for bit. Sample files are
headerless CSV with one N-symbol observation per row; partition files list
one comma-separated group per line.
"""

from __future__ import annotations

import csv
import io
from pathlib import Path

import numpy as np
import yaml

from .partitions import Partition
from .sources import JointSource

try:
    _YamlLoader = yaml.CSafeLoader
except AttributeError:  # libyaml not compiled in
    _YamlLoader = yaml.SafeLoader

_MODEL_KEYS = {"n_vars", "alphabet_sizes", "pmf"}


def format_model(source: JointSource, header: str | None = None) -> str:
    """Render a source in the model file format, full precision."""
    lines = []
    if header:
        lines.extend(f"# {line}".rstrip() for line in header.splitlines())
    lines.append(f"n_vars: {source.n_vars}")
    lines.append(f"alphabet_sizes: [{', '.join(str(s) for s in source.alphabet_sizes)}]")
    values = [repr(float(p)) for p in source.pmf]
    lines.append("pmf: [")
    for at in range(0, len(values), 8):
        row = ", ".join(values[at : at + 8])
        comma = "," if at + 8 < len(values) else ""
        lines.append(f"  {row}{comma}")
    lines.append("]")
    return "\n".join(lines) + "\n"


def write_model(source: JointSource, path, header: str | None = None) -> None:
    Path(path).write_text(format_model(source, header), encoding="utf-8")


def parse_model(text: str) -> JointSource:
    """Parse model file text into a validated JointSource."""
    try:
        data = yaml.load(text, Loader=_YamlLoader)
    except yaml.YAMLError as exc:
        raise ValueError(f"model file is not valid YAML: {exc}") from exc
    if not isinstance(data, dict):
        raise ValueError("model file must contain a mapping of keys to values")
    missing = _MODEL_KEYS - data.keys()
    if missing:
        raise ValueError(f"model file is missing keys: {sorted(missing)}")
    unknown = data.keys() - _MODEL_KEYS
    if unknown:
        raise ValueError(f"model file has unknown keys: {sorted(unknown)}")
    sizes = data["alphabet_sizes"]
    if not isinstance(sizes, list):
        raise ValueError("alphabet_sizes must be a list")
    if int(data["n_vars"]) != len(sizes):
        raise ValueError(
            f"n_vars is {data['n_vars']} but alphabet_sizes lists {len(sizes)} entries"
        )
    pmf = data["pmf"]
    if not isinstance(pmf, list):
        raise ValueError("pmf must be a list of probabilities")
    return JointSource(tuple(int(s) for s in sizes), np.asarray(pmf, dtype=float))


def read_model(path) -> JointSource:
    return parse_model(Path(path).read_text(encoding="utf-8"))


def read_samples(path, skip_header: bool = False) -> np.ndarray:
    """Load a samples CSV into an (n_rows, n_vars) integer array."""
    rows = []
    width = None
    with open(path, newline="", encoding="utf-8") as handle:
        reader = csv.reader(handle)
        for number, record in enumerate(reader, start=1):
            if skip_header and number == 1:
                continue
            if not record or all(not cell.strip() for cell in record):
                continue
            if width is None:
                width = len(record)
            elif len(record) != width:
                raise ValueError(
                    f"samples row {number} has {len(record)} columns, expected {width}"
                )
            parsed = []
            for column, cell in enumerate(record, start=1):
                try:
                    parsed.append(int(cell.strip()))
                except ValueError:
                    raise ValueError(
                        f"samples row {number}, column {column}: {cell.strip()!r} "
                        f"is not an integer symbol"
                    ) from None
            rows.append(parsed)
    if not rows:
        raise ValueError("samples file contains no observations")
    return np.asarray(rows, dtype=np.int64)


def format_partition(partition: Partition) -> str:
    return "\n".join(",".join(str(i) for i in g) for g in partition.groups) + "\n"


def write_partition(partition: Partition, path) -> None:
    Path(path).write_text(format_partition(partition), encoding="utf-8")


def parse_partition(text: str) -> Partition:
    groups = []
    for number, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        try:
            groups.append(tuple(int(cell.strip()) for cell in body.split(",")))
        except ValueError:
            raise ValueError(
                f"partition line {number}: {line.strip()!r} is not a "
                f"comma-separated list of node indices"
            ) from None
    if not groups:
        raise ValueError("partition file contains no groups")
    return Partition(tuple(groups))


def read_partition(path) -> Partition:
    return parse_partition(Path(path).read_text(encoding="utf-8"))
