"""Plain-text frame files.

::

    # comments start with '#'
    frame 2 3
    1 0   0 0
    0 0   1 0
    1 0   1 0
    weights 2 3/2 6/5
    probs   1/2 1/3 1/6

After the header come ``N`` rows, one per frame vector, of ``2n`` numbers:
real and imaginary parts interleaved.  Numbers are decimals or rationals
``a/b``; both are rounded once, correctly, to the nearest double.  Writing
uses 17 significant digits, so a save/load round trip is bit-exact.
"""

import math
from fractions import Fraction
from pathlib import Path

import numpy as np

from .erasure import ProbabilitySequence, WeightSequence
from .errors import ParseError, ValidationError
from .frames import Frame


def _number(tok, line, col):
    try:
        if "/" in tok:
            x = float(Fraction(tok))
        else:
            x = float(tok)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not a number: {tok!r}", line, col) from None
    if not math.isfinite(x):
        raise ParseError(f"non-finite value {tok!r}", line, col)
    return x


def _tokens(text):
    """Yield (line_no, [(token, column), ...]) for non-blank, non-comment lines."""
    for no, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        toks, col = [], 0
        for part in body.split():
            col = body.index(part, col)
            toks.append((part, col + 1))
            col += len(part)
        if toks:
            yield no, toks


def parse_frame_text(text):
    """Parse frame-file contents; see :func:`load_frame_file`."""
    lines = list(_tokens(text))
    if not lines:
        raise ParseError("empty frame file")
    no, head = lines[0]
    if head[0][0] != "frame" or len(head) != 3:
        raise ParseError("header must read 'frame <n> <N>'", no, head[0][1])
    try:
        n, N = int(head[1][0]), int(head[2][0])
    except ValueError:
        raise ParseError("dimension and count must be integers", no, head[1][1]) from None
    if n < 1 or N < 1:
        raise ParseError("dimension and count must be positive", no, head[1][1])
    if len(lines) < N + 1:
        raise ParseError(f"expected {N} vector rows, found {len(lines) - 1}", lines[-1][0])
    rows = []
    for no, toks in lines[1 : N + 1]:
        if toks[0][0] in ("weights", "probs"):
            raise ParseError(f"expected {N} vector rows before {toks[0][0]!r}", no, toks[0][1])
        if len(toks) != 2 * n:
            raise ParseError(f"expected {2 * n} numbers, found {len(toks)}", no, toks[0][1])
        vals = [_number(t, no, c) for t, c in toks]
        rows.append([complex(vals[2 * k], vals[2 * k + 1]) for k in range(n)])
    weights = probs = None
    for no, toks in lines[N + 1 :]:
        key = toks[0][0]
        if key not in ("weights", "probs"):
            raise ParseError(f"unexpected line starting with {key!r}", no, toks[0][1])
        if len(toks) != N + 1:
            raise ParseError(f"{key} needs {N} numbers, found {len(toks) - 1}", no, toks[0][1])
        vals = [_number(t, no, c) for t, c in toks[1:]]
        if key == "weights":
            if weights is not None:
                raise ParseError("duplicate weights line", no, 1)
            weights = vals
        else:
            if probs is not None:
                raise ParseError("duplicate probs line", no, 1)
            probs = vals
    F = Frame(np.array(rows, dtype=complex).T)
    q = WeightSequence.auto(weights, n) if weights is not None else None
    p = ProbabilitySequence(probs) if probs is not None else None
    return F, q, p


def load_frame_file(path):
    """Returns ``(Frame, WeightSequence or None, ProbabilitySequence or None)``."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc.strerror or exc}") from None
    return parse_frame_text(text)


def _fmt(x):
    return format(float(x), ".17g")


def format_frame(F, q=None, p=None, comment=None):
    out = []
    if comment:
        out += [f"# {c}" for c in comment.splitlines()]
    out.append(f"frame {F.n} {F.N}")
    for v in F.vectors:
        out.append(" ".join(f"{_fmt(z.real)} {_fmt(z.imag)}" for z in v))
    if q is not None:
        qq = q.q if isinstance(q, WeightSequence) else q
        out.append("weights " + " ".join(_fmt(x) for x in qq))
    if p is not None:
        pp = p.p if isinstance(p, ProbabilitySequence) else p
        out.append("probs " + " ".join(_fmt(x) for x in pp))
    return "\n".join(out) + "\n"


def save_frame_file(path, F, q=None, p=None, comment=None):
    Path(path).write_text(format_frame(F, q, p, comment), encoding="utf-8")
