"""Operation degrees and truncated Hilbert data of the chain operad.

Every face of a directed complex is a color. A tuple of faces that forms
a chain in a face F carries a one-dimensional operation space whose total
degree is the chain's excess; every other tuple carries the zero space.
The Hilbert endomorphism sends each color c to the sum, over chains
(F_1..F_n) in c, of t^excess * F_1...F_n, read as a noncommutative word;
images here are truncated by word length. The sign twist I negates every
color and t; the composite f.I.f.I minus the identity is reported per
color as a self-duality residual, with no value asserted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional

from .complexes import Chain, FaceComplex, is_chain, iter_chains
from .errors import ResourceLimitError

MAX_TRUNCATION = 6
MAX_RESIDUAL_TRUNCATION = 5

Word = tuple[int, ...]


class LaurentPoly:
    """Integer Laurent polynomial in t, keyed by exponent."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self.coeffs = {e: c for e, c in (coeffs or {}).items() if c}

    @classmethod
    def t_power(cls, exponent: int, coefficient: int = 1) -> "LaurentPoly":
        return cls({exponent: coefficient})

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    def flip_t(self) -> "LaurentPoly":
        """Substitute t -> -t."""
        return LaurentPoly({e: (c if e % 2 == 0 else -c) for e, c in self.coeffs.items()})

    def min_exponent(self) -> Optional[int]:
        return min(self.coeffs) if self.coeffs else None

    def terms(self) -> list[tuple[int, int]]:
        return sorted(self.coeffs.items())

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in self.terms():
            if e == 0:
                parts.append(str(c))
            else:
                head = "" if c == 1 else ("-" if c == -1 else str(c) + "*")
                parts.append(f"{head}t" + (f"^{e}" if e != 1 else ""))
        return " + ".join(parts).replace("+ -", "- ")


ONE = LaurentPoly({0: 1})

Series = dict[Word, LaurentPoly]


@dataclass(frozen=True)
class HilbertImage:
    """Truncated image of one color: word of colors -> Laurent polynomial."""

    color: int
    truncation: int
    terms: dict[Word, LaurentPoly]

    def term(self, word: Word) -> LaurentPoly:
        return self.terms.get(tuple(word), LaurentPoly())

    def is_zero(self) -> bool:
        return not any(self.terms.values())


def operation_degree(c: FaceComplex, chain: Chain) -> Optional[int]:
    """Excess of the chain, the total degree of its operation.

    Non-chain tuples carry the zero operation space; None is returned for
    them. The operation space itself sits in internal degree
    excess - length + 1, so that t^(length-1) times its dimension series
    contributes t^excess to the Hilbert image.
    """
    if not is_chain(c, chain):
        return None
    dims = [c.faces[fid].dim for fid in chain.face_ids]
    return (c.faces[chain.ambient].dim - 1) - sum(d - 1 for d in dims)


def hilbert_image(
    c: FaceComplex,
    color: int,
    max_len: int,
    allow_repeats: bool = True,
    truncation_bound: int = MAX_TRUNCATION,
) -> HilbertImage:
    """Sum t^excess * word over all chains in the color, up to word length."""
    if max_len < 1:
        raise ValueError("word length truncation must be at least 1")
    if max_len > truncation_bound:
        raise ResourceLimitError(
            f"truncation too large: {max_len} > {truncation_bound}"
        )
    c.require_directed()
    amb_dim = c.faces[color].dim
    terms: dict[Word, LaurentPoly] = {}
    for word in iter_chains(c, color, max_len, 0, allow_repeats):
        weight = sum(c.faces[g].dim - 1 for g in word)
        terms[word] = LaurentPoly.t_power((amb_dim - 1) - weight)
    return HilbertImage(color, max_len, terms)


def is_augmented(c: FaceComplex) -> bool:
    """True when only identity operations sit in degree <= 0.

    Enumerates chains of dim>=1 members directly (no longest-path DP), so
    the agreement with the shortness certifier is a two-route check.
    Vertex members never help a chain reach degree <= 0: inserting one
    raises the excess by exactly 1.
    """
    c.require_directed()
    for f in c.faces:
        amb = f.dim - 1
        for word in iter_chains(c, f.id, None, 1, True):
            if word == (f.id,):
                continue
            if amb - sum(c.faces[g].dim - 1 for g in word) <= 0:
                return False
    return True


def _mul_series(a: Series, b: Series, max_len: int) -> Series:
    out: Series = {}
    for wa, pa in a.items():
        for wb, pb in b.items():
            if len(wa) + len(wb) <= max_len:
                w = wa + wb
                prod = pa * pb
                out[w] = out[w] + prod if w in out else prod
    return {w: p for w, p in out.items() if p}


def _apply_endo(images: dict[int, Series], t_sign: int, series: Series, max_len: int) -> Series:
    """Apply the endomorphism with the given generator images to a series.

    t_sign = -1 folds in a preceding t -> -t substitution on coefficients;
    sign twists on the colors are carried by the images themselves.
    """
    out: Series = {}
    for word, poly in series.items():
        base = poly.flip_t() if t_sign < 0 else poly
        acc: Series = {(): base}
        for cid in word:
            acc = _mul_series(acc, images[cid], max_len)
            if not acc:
                break
        for w, p in acc.items():
            out[w] = out[w] + p if w in out else p
    return {w: p for w, p in out.items() if p}


def selfduality_residual(
    c: FaceComplex, max_len: int, allow_repeats: bool = True
) -> dict[int, HilbertImage]:
    """Per color: the composite f.I.f.I applied to the color, minus the color.

    Purely a report; nothing is asserted about the outcome, and the repeat
    policy changes it.
    """
    if max_len > MAX_RESIDUAL_TRUNCATION:
        raise ResourceLimitError(
            f"residual truncation too large: {max_len} > {MAX_RESIDUAL_TRUNCATION}"
        )
    c.require_directed()
    f_images = {
        f.id: hilbert_image(c, f.id, max_len, allow_repeats).terms for f in c.faces
    }
    # (f . I)(color) = f(-color) = -f(color)
    e_images = {
        cid: {w: -p for w, p in terms.items()} for cid, terms in f_images.items()
    }
    out = {}
    for f in c.faces:
        g = _apply_endo(e_images, -1, e_images[f.id], max_len)
        ident: Word = (f.id,)
        g[ident] = g.get(ident, LaurentPoly()) - ONE
        residual = {w: p for w, p in g.items() if p}
        out[f.id] = HilbertImage(f.id, max_len, residual)
    return out


def image_rows(image: HilbertImage, labels: dict[int, str] | None = None) -> list[dict]:
    """Flat rows (color, word, t exponent, coefficient) for CSV and JSON."""
    rows = []
    for word in sorted(image.terms, key=lambda w: (len(w), w)):
        for exponent, coefficient in image.terms[word].terms():
            row = {
                "color": image.color,
                "word": list(word),
                "exponent": exponent,
                "coefficient": coefficient,
            }
            if labels is not None:
                row["color_label"] = labels[image.color]
                row["word_labels"] = [labels[g] for g in word]
            rows.append(row)
    return rows
