"""Atomic file output and lossless JSON/CSV formatting."""

import json
import os
import sys
import tempfile


def atomic_write_text(path, text):
    """Write text via a temporary file and rename; never leaves partials."""
    path = os.path.abspath(path)
    fd, tmp = tempfile.mkstemp(dir=os.path.dirname(path),
                               prefix="." + os.path.basename(path) + ".")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def write_text(path, text):
    """Write to the path, or to stdout when path is None or '-'."""
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        atomic_write_text(path, text)


def dump_json(obj, path):
    write_text(path, json.dumps(obj, indent=2) + "\n")


def load_json(path):
    with open(path) as fh:
        return json.load(fh)


def format_csv(header, rows):
    """Comma-joined table; floats keep full shortest-round-trip precision."""
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(_cell(v) for v in row))
    return "\n".join(lines) + "\n"


def _cell(v):
    if isinstance(v, float):
        return repr(v)
    return str(v)
