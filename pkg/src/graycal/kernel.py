"""Finite semistrict 3-categories as explicit tables, plus the axiom checker.

The data model is deliberately dumb.  A category is a bundle of finite,
string-keyed tables: cells grouped into hom 2-categories, hom-local
composition tables, global whiskering tables and an interchanger table.
Operations never invent cells — every composite is a table lookup.  A missing
entry raises :class:`TableGap`; a boundary mismatch raises
:class:`NotComposable`; :func:`check_gray_axioms` reports problems softly as
:class:`Violation` records instead of raising.

Conventions, fixed once and used by every module:

* ``tensor1(g, f)`` is the composite 1-cell ``g . f`` (f first, then g).
* ``whisker(side, w, d, x)`` whiskers the d-cell ``x`` with the 1-cell ``w``;
  ``side`` names the position of *w*: ``"post"`` is ``w . x`` (w after),
  ``"pre"`` is ``x . w`` (w before).
* ``otimes2(y, x)`` composes 2-cells along a shared 1-cell boundary inside a
  single hom (x first); ``circ3(Y, X)`` composes 3-cells along a shared
  2-cell boundary; ``otimes3(Y, X)`` composes 3-cells side by side along a
  shared 1-cell boundary.
* ``interchanger(xi, gamma)`` is the 3-cell witnessing the two orders of
  sliding ``xi`` past ``gamma`` across a middle object:

      (xi . f') o (g . gamma)   ==>   (g' . gamma) o (xi . f)

  for ``xi: g => g'`` and ``gamma: f => f'`` in adjacent homs.  It is
  required to be invertible.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, NamedTuple


# ---------------------------------------------------------------------------
# errors and reports


class GrayError(Exception):
    """Base class for structural errors raised by this package."""


class NotComposable(GrayError):
    """Cells were fed to an operation whose boundaries do not match."""


class TableGap(GrayError):
    """A composite that should exist is missing from its table."""


class MissingConstraint(GrayError):
    """Constraint data (adjoint equivalence, comparison cell) is absent."""


class CellRef(NamedTuple):
    """A cell named together with its dimension (0 = object)."""

    dim: int
    name: str

    def __str__(self) -> str:
        return f"{self.dim}:{self.name}"


@dataclass(frozen=True, order=True)
class Violation:
    tag: str
    cells: tuple[CellRef, ...]
    detail: str

    def to_json(self) -> dict:
        return {
            "tag": self.tag,
            "cells": [[c.dim, c.name] for c in self.cells],
            "detail": self.detail,
        }


@dataclass
class AxiomReport:
    """Outcome of a check run: instance counts plus sorted violations."""

    checked: int = 0
    skipped: int = 0
    violations: list[Violation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def tags(self) -> set[str]:
        return {v.tag for v in self.violations}

    def merge(self, other: "AxiomReport") -> "AxiomReport":
        self.checked += other.checked
        self.skipped += other.skipped
        self.violations.extend(other.violations)
        return self

    def finish(self) -> "AxiomReport":
        self.violations.sort()
        return self

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "checked": self.checked,
            "skipped": self.skipped,
            "violations": [v.to_json() for v in self.violations],
        }

    def __repr__(self) -> str:
        state = "ok" if self.passed else f"{len(self.violations)} violations"
        return f"<AxiomReport {state}, checked={self.checked}, skipped={self.skipped}>"


def default_jobs() -> int:
    """Parallelism cap taken from GRAYCAL_JOBS (default 1)."""
    try:
        return max(1, int(os.environ.get("GRAYCAL_JOBS", "1")))
    except ValueError:
        return 1


# ---------------------------------------------------------------------------
# category data


@dataclass
class HomData:
    """Cells and hom-local composition tables of one hom 2-category.

    ``two_cells`` / ``three_cells`` map a cell name to its (src, tgt)
    boundary pair one level down.  ``otimes2``, ``circ3`` and ``otimes3``
    are keyed ``(later, earlier)``.
    """

    one_cells: list[str] = field(default_factory=list)
    two_cells: dict[str, tuple[str, str]] = field(default_factory=dict)
    three_cells: dict[str, tuple[str, str]] = field(default_factory=dict)
    id2: dict[str, str] = field(default_factory=dict)
    id3: dict[str, str] = field(default_factory=dict)
    otimes2: dict[tuple[str, str], str] = field(default_factory=dict)
    circ3: dict[tuple[str, str], str] = field(default_factory=dict)
    otimes3: dict[tuple[str, str], str] = field(default_factory=dict)


_EMPTY_HOM = HomData()


class GrayCategory:
    """A finite semistrict 3-category given by explicit tables.

    Whisker tables are keyed ``(w, d, x)`` where ``w`` is the whiskering
    1-cell and ``x`` the d-cell being whiskered (d = 1 entries are 1-cell
    composition).  ``sigma`` is keyed ``(xi, gamma)`` with ``xi`` in the
    later hom.
    """

    def __init__(
        self,
        name: str,
        objects: Iterable[str],
        homs: dict[tuple[str, str], HomData],
        identity1: dict[str, str],
        whisker_post: dict[tuple[str, int, str], str],
        whisker_pre: dict[tuple[str, int, str], str],
        sigma: dict[tuple[str, str], str],
        provenance: str | None = None,
    ):
        self.name = name
        self.objects = list(objects)
        self.homs = dict(homs)
        self.identity1 = dict(identity1)
        self.whisker_post = dict(whisker_post)
        self.whisker_pre = dict(whisker_pre)
        self.sigma = dict(sigma)
        self.provenance = provenance
        self.reindex()

    # -- indexes ------------------------------------------------------------

    def reindex(self) -> None:
        """Rebuild the name -> hom indexes (call after mutating tables)."""
        self._objset = set(self.objects)
        self._hom_of: dict[int, dict[str, tuple[str, str]]] = {1: {}, 2: {}, 3: {}}
        self._by_boundary2: dict[tuple, list[str]] = {}
        self._by_boundary3: dict[tuple, list[str]] = {}
        self._inv3: dict[str, str | None] = {}
        for key, h in self.homs.items():
            for f in h.one_cells:
                self._claim(1, f, key)
            for x, (s, t) in h.two_cells.items():
                self._claim(2, x, key)
                self._by_boundary2.setdefault((key, s, t), []).append(x)
            for X, (s, t) in h.three_cells.items():
                self._claim(3, X, key)
                self._by_boundary3.setdefault((key, s, t), []).append(X)

    def _claim(self, dim: int, name: str, key: tuple[str, str]) -> None:
        prev = self._hom_of[dim].setdefault(name, key)
        if prev != key:
            raise GrayError(
                f"{self.name}: {dim}-cell name {name!r} appears in homs {prev} and {key}"
            )

    # -- access -------------------------------------------------------------

    def hom(self, a: str, b: str) -> HomData:
        return self.homs.get((a, b), _EMPTY_HOM)

    def has_cell(self, dim: int, name: str) -> bool:
        if dim == 0:
            return name in self._objset
        return name in self._hom_of.get(dim, {})

    def hom_key(self, dim: int, name: str) -> tuple[str, str]:
        key = self._hom_of[dim].get(name)
        if key is None:
            raise GrayError(f"{self.name}: unknown {dim}-cell {name!r}")
        return key

    def all_cells(self, dim: int) -> Iterator[str]:
        yield from self._hom_of[dim]

    def src1(self, f: str) -> str:
        return self.hom_key(1, f)[0]

    def tgt1(self, f: str) -> str:
        return self.hom_key(1, f)[1]

    def two_boundary(self, x: str) -> tuple[tuple[str, str], str, str]:
        key = self.hom_key(2, x)
        s, t = self.homs[key].two_cells[x]
        return key, s, t

    def three_boundary(self, X: str) -> tuple[tuple[str, str], str, str]:
        key = self.hom_key(3, X)
        s, t = self.homs[key].three_cells[X]
        return key, s, t

    def two_cells_between(self, f: str, g: str) -> list[str]:
        key = self._hom_of[1].get(f)
        if key is None:
            return []
        return list(self._by_boundary2.get((key, f, g), ()))

    def three_cells_between(self, x: str, y: str) -> list[str]:
        key = self._hom_of[2].get(x)
        if key is None:
            return []
        return list(self._by_boundary3.get((key, x, y), ()))

    # -- identities ---------------------------------------------------------

    def id1(self, a: str) -> str:
        f = self.identity1.get(a)
        if f is None:
            raise TableGap(f"{self.name}: no identity 1-cell on object {a!r}")
        return f

    def id2(self, f: str) -> str:
        key = self.hom_key(1, f)
        x = self.homs[key].id2.get(f)
        if x is None:
            raise TableGap(f"{self.name}: no identity 2-cell on {f!r}")
        return x

    def id3(self, x: str) -> str:
        key = self.hom_key(2, x)
        X = self.homs[key].id3.get(x)
        if X is None:
            raise TableGap(f"{self.name}: no identity 3-cell on {x!r}")
        return X

    # -- composition --------------------------------------------------------

    def tensor1(self, g: str, f: str) -> str:
        """Composite 1-cell g . f (f first)."""
        if self.tgt1(f) != self.src1(g):
            raise NotComposable(
                f"{self.name}: tensor1({g!r}, {f!r}): {f!r} ends at "
                f"{self.tgt1(f)!r} but {g!r} starts at {self.src1(g)!r}"
            )
        out = self.whisker_post.get((g, 1, f))
        if out is None:
            raise TableGap(f"{self.name}: tensor1({g!r}, {f!r}) missing from whisker tables")
        alt = self.whisker_pre.get((f, 1, g))
        if alt is not None and alt != out:
            raise GrayError(
                f"{self.name}: tensor1({g!r}, {f!r}) disagrees between "
                f"post ({out!r}) and pre ({alt!r}) tables"
            )
        return out

    def whisker(self, side: str, w: str, d: int, x: str) -> str:
        """``w . x`` for side="post", ``x . w`` for side="pre" (x a d-cell)."""
        wa, wb = self.hom_key(1, w)
        if d not in (1, 2, 3):
            raise GrayError(f"whisker: bad cell dimension {d!r}")
        key = self.hom_key(d, x)
        if side == "post":
            if key[1] != wa:
                raise NotComposable(
                    f"{self.name}: whisker(post, {w!r}, {x!r}): hom {key} does not end at {wa!r}"
                )
            out = self.whisker_post.get((w, d, x))
        elif side == "pre":
            if key[0] != wb:
                raise NotComposable(
                    f"{self.name}: whisker(pre, {w!r}, {x!r}): hom {key} does not start at {wb!r}"
                )
            out = self.whisker_pre.get((w, d, x))
        else:
            raise GrayError(f"whisker: bad side {side!r}")
        if out is None:
            raise TableGap(f"{self.name}: whisker({side}, {w!r}, {d}, {x!r}) missing")
        return out

    def otimes2(self, y: str, x: str) -> str:
        ky, kx = self.hom_key(2, y), self.hom_key(2, x)
        if ky != kx:
            raise NotComposable(f"{self.name}: otimes2({y!r}, {x!r}): cells in different homs")
        h = self.homs[kx]
        if h.two_cells[x][1] != h.two_cells[y][0]:
            raise NotComposable(f"{self.name}: otimes2({y!r}, {x!r}): boundaries do not chain")
        out = h.otimes2.get((y, x))
        if out is None:
            raise TableGap(f"{self.name}: otimes2({y!r}, {x!r}) missing")
        return out

    def circ3(self, Y: str, X: str) -> str:
        ky, kx = self.hom_key(3, Y), self.hom_key(3, X)
        if ky != kx:
            raise NotComposable(f"{self.name}: circ3({Y!r}, {X!r}): cells in different homs")
        h = self.homs[kx]
        if h.three_cells[X][1] != h.three_cells[Y][0]:
            raise NotComposable(f"{self.name}: circ3({Y!r}, {X!r}): boundaries do not chain")
        out = h.circ3.get((Y, X))
        if out is None:
            raise TableGap(f"{self.name}: circ3({Y!r}, {X!r}) missing")
        return out

    def otimes3(self, Y: str, X: str) -> str:
        ky, kx = self.hom_key(3, Y), self.hom_key(3, X)
        if ky != kx:
            raise NotComposable(f"{self.name}: otimes3({Y!r}, {X!r}): cells in different homs")
        h = self.homs[kx]
        xs = h.three_cells[X][0]
        ys = h.three_cells[Y][0]
        bx = h.two_cells.get(xs)
        by = h.two_cells.get(ys)
        if bx is None or by is None:
            raise GrayError(f"{self.name}: otimes3({Y!r}, {X!r}): dangling 2-cell boundary")
        if bx[1] != by[0]:
            raise NotComposable(f"{self.name}: otimes3({Y!r}, {X!r}): 1-cell boundaries do not chain")
        out = h.otimes3.get((Y, X))
        if out is None:
            raise TableGap(f"{self.name}: otimes3({Y!r}, {X!r}) missing")
        return out

    def interchanger(self, xi: str, gamma: str) -> str:
        kxi = self.hom_key(2, xi)
        kg = self.hom_key(2, gamma)
        if kg[1] != kxi[0]:
            raise NotComposable(
                f"{self.name}: interchanger({xi!r}, {gamma!r}): homs {kxi} and {kg} not adjacent"
            )
        out = self.sigma.get((xi, gamma))
        if out is None:
            raise TableGap(f"{self.name}: interchanger({xi!r}, {gamma!r}) missing")
        return out

    def star2(self, sigma: str, theta: str) -> str:
        """Side-by-side composite (sigma . f') o (g . theta) of adjacent 2-cells."""
        _, g0, _g1 = self.two_boundary(sigma)
        _, _f0, f1 = self.two_boundary(theta)
        left = self.whisker("pre", f1, 2, sigma)
        right = self.whisker("post", g0, 2, theta)
        return self.otimes2(left, right)

    # -- invertibility and equivalences ------------------------------------

    def invert3(self, X: str) -> str | None:
        """Two-sided inverse of a 3-cell under circ3, or None (cached)."""
        key = self.hom_key(3, X)
        if X in self._inv3:
            return self._inv3[X]
        h = self.homs[key]
        s, t = h.three_cells[X]
        out = None
        ids = h.id3.get(s)
        idt = h.id3.get(t)
        for Y, (ys, yt) in h.three_cells.items():
            if ys != t or yt != s:
                continue
            if h.circ3.get((Y, X)) == ids and h.circ3.get((X, Y)) == idt:
                out = Y
                break
        self._inv3[X] = out
        return out

    def invertible_threes_between(self, x: str, y: str) -> list[str]:
        """Invertible 3-cells x => y; the identity comes first when x == y."""
        out: list[str] = []
        if x == y:
            key = self._hom_of[2].get(x)
            if key is not None:
                ident = self.homs[key].id3.get(x)
                if ident is not None:
                    out.append(ident)
        for X in self.three_cells_between(x, y):
            if X in out:
                continue
            if self.invert3(X) is not None:
                out.append(X)
        return out

    def counts(self) -> tuple[int, int, int, int]:
        return (
            len(self.objects),
            len(self._hom_of[1]),
            len(self._hom_of[2]),
            len(self._hom_of[3]),
        )

    def check_axioms(self, jobs: int | None = None) -> AxiomReport:
        return check_gray_axioms(self, jobs=jobs)

    def __repr__(self) -> str:
        n0, n1, n2, n3 = self.counts()
        return f"<GrayCategory {self.name}: {n0}/{n1}/{n2}/{n3} cells>"


# ---------------------------------------------------------------------------
# adjoint equivalences and biadjoint biequivalences


@dataclass(frozen=True)
class AdjointEquivalence:
    """An adjoint equivalence between parallel 1-cells, inside one hom.

    ``fwd: X => Y``, ``bwd: Y => X`` are 2-cells; ``unit: id2[X] => bwd o fwd``
    and ``counit: fwd o bwd => id2[Y]`` are invertible 3-cells satisfying the
    two triangle identities.
    """

    fwd: str
    bwd: str
    unit: str
    counit: str


def check_adjoint_equivalence(cat: GrayCategory, ae: AdjointEquivalence) -> list[str]:
    """Return a list of problems (empty when the data is valid)."""
    probs: list[str] = []
    try:
        key, x0, y0 = cat.two_boundary(ae.fwd)
        keyb, x1, y1 = cat.two_boundary(ae.bwd)
        if keyb != key or x1 != y0 or y1 != x0:
            return [f"bwd {ae.bwd!r} is not reversed-parallel to fwd {ae.fwd!r}"]
        idx, idy = cat.id2(x0), cat.id2(y0)
        bf = cat.otimes2(ae.bwd, ae.fwd)
        fb = cat.otimes2(ae.fwd, ae.bwd)
        _, us, ut = cat.three_boundary(ae.unit)
        if (us, ut) != (idx, bf):
            probs.append(f"unit {ae.unit!r} is not id2[{x0}] => bwd o fwd")
        _, cs, ct = cat.three_boundary(ae.counit)
        if (cs, ct) != (fb, idy):
            probs.append(f"counit {ae.counit!r} is not fwd o bwd => id2[{y0}]")
        if probs:
            return probs
        if cat.invert3(ae.unit) is None:
            probs.append("unit is not invertible")
        if cat.invert3(ae.counit) is None:
            probs.append("counit is not invertible")
        tri_a = cat.circ3(
            cat.otimes3(ae.counit, cat.id3(ae.fwd)),
            cat.otimes3(cat.id3(ae.fwd), ae.unit),
        )
        if tri_a != cat.id3(ae.fwd):
            probs.append("triangle identity on fwd fails")
        tri_b = cat.circ3(
            cat.otimes3(cat.id3(ae.bwd), ae.counit),
            cat.otimes3(ae.unit, cat.id3(ae.bwd)),
        )
        if tri_b != cat.id3(ae.bwd):
            probs.append("triangle identity on bwd fails")
    except GrayError as err:
        probs.append(str(err))
    return probs


def adjoint_equivalences_with_fwd(cat: GrayCategory, fwd: str) -> Iterator[AdjointEquivalence]:
    """All adjoint-equivalence completions of ``fwd``, in deterministic order."""
    _, x0, y0 = cat.two_boundary(fwd)
    for bwd in cat.two_cells_between(y0, x0):
        try:
            bf = cat.otimes2(bwd, fwd)
            fb = cat.otimes2(fwd, bwd)
            idx, idy = cat.id2(x0), cat.id2(y0)
        except GrayError:
            continue
        for unit in cat.invertible_threes_between(idx, bf):
            for counit in cat.invertible_threes_between(fb, idy):
                ae = AdjointEquivalence(fwd, bwd, unit, counit)
                if not check_adjoint_equivalence(cat, ae):
                    yield ae


def find_adjoint_equivalence(cat: GrayCategory, fwd: str) -> AdjointEquivalence | None:
    return next(adjoint_equivalences_with_fwd(cat, fwd), None)


def identity_adjeq(cat: GrayCategory, f: str) -> AdjointEquivalence:
    u = cat.id2(f)
    v = cat.id3(u)
    return AdjointEquivalence(u, u, v, v)


def rev_adjeq(cat: GrayCategory, ae: AdjointEquivalence) -> AdjointEquivalence:
    """Swap the two directions (valid because unit and counit are invertible)."""
    iu = cat.invert3(ae.unit)
    ic = cat.invert3(ae.counit)
    if iu is None or ic is None:
        raise GrayError("cannot reverse: unit or counit is not invertible")
    return AdjointEquivalence(ae.bwd, ae.fwd, ic, iu)


def compose_adjeq(
    cat: GrayCategory, second: AdjointEquivalence, first: AdjointEquivalence
) -> AdjointEquivalence:
    """Paste adjoint equivalences along a shared middle 1-cell (first, then second)."""
    fwd = cat.otimes2(second.fwd, first.fwd)
    bwd = cat.otimes2(first.bwd, second.bwd)
    unit = cat.circ3(
        cat.otimes3(cat.otimes3(cat.id3(first.bwd), second.unit), cat.id3(first.fwd)),
        first.unit,
    )
    counit = cat.circ3(
        second.counit,
        cat.otimes3(cat.otimes3(cat.id3(second.fwd), first.counit), cat.id3(second.bwd)),
    )
    return AdjointEquivalence(fwd, bwd, unit, counit)


def whisker_adjeq(cat: GrayCategory, side: str, w: str, ae: AdjointEquivalence) -> AdjointEquivalence:
    return AdjointEquivalence(
        cat.whisker(side, w, 2, ae.fwd),
        cat.whisker(side, w, 2, ae.bwd),
        cat.whisker(side, w, 3, ae.unit),
        cat.whisker(side, w, 3, ae.counit),
    )


@dataclass(frozen=True)
class BiadjointBiequivalence:
    """A biequivalence between two objects with all witnessing cells.

    ``fwd: a -> b`` and ``bwd: b -> a`` are 1-cells; ``m`` completes a 2-cell
    ``id_a => bwd . fwd`` and ``n`` a 2-cell ``id_b => fwd . bwd`` to adjoint
    equivalences; ``phi`` and ``psi`` are invertible 3-cells cancelling the
    two composite round trips:

        phi : (n.bwd . fwd) o (fwd . m.fwd)  ==>  id2[fwd]
        psi : (bwd . n.bwd) o (m.fwd . bwd)  ==>  id2[bwd]
    """

    fwd: str
    bwd: str
    m: AdjointEquivalence
    n: AdjointEquivalence
    phi: str
    psi: str


def check_biadjoint_biequivalence(cat: GrayCategory, w: BiadjointBiequivalence) -> list[str]:
    probs: list[str] = []
    try:
        a, b = cat.src1(w.fwd), cat.tgt1(w.fwd)
        if (cat.src1(w.bwd), cat.tgt1(w.bwd)) != (b, a):
            return [f"bwd {w.bwd!r} is not a 1-cell {b!r} -> {a!r}"]
        ida, idb = cat.id1(a), cat.id1(b)
        bf = cat.tensor1(w.bwd, w.fwd)
        fb = cat.tensor1(w.fwd, w.bwd)
        _, ms, mt = cat.two_boundary(w.m.fwd)
        if (ms, mt) != (ida, bf):
            probs.append("m.fwd is not a 2-cell id_a => bwd . fwd")
        _, ns, nt = cat.two_boundary(w.n.fwd)
        if (ns, nt) != (idb, fb):
            probs.append("n.fwd is not a 2-cell id_b => fwd . bwd")
        probs += [f"m: {p}" for p in check_adjoint_equivalence(cat, w.m)]
        probs += [f"n: {p}" for p in check_adjoint_equivalence(cat, w.n)]
        if probs:
            return probs
        phi_src = cat.otimes2(
            cat.whisker("pre", w.fwd, 2, w.n.bwd),
            cat.whisker("post", w.fwd, 2, w.m.fwd),
        )
        _, ps, pt = cat.three_boundary(w.phi)
        if (ps, pt) != (phi_src, cat.id2(w.fwd)):
            probs.append("phi does not cancel the fwd round trip")
        elif cat.invert3(w.phi) is None:
            probs.append("phi is not invertible")
        psi_src = cat.otimes2(
            cat.whisker("post", w.bwd, 2, w.n.bwd),
            cat.whisker("pre", w.bwd, 2, w.m.fwd),
        )
        _, qs, qt = cat.three_boundary(w.psi)
        if (qs, qt) != (psi_src, cat.id2(w.bwd)):
            probs.append("psi does not cancel the bwd round trip")
        elif cat.invert3(w.psi) is None:
            probs.append("psi is not invertible")
    except GrayError as err:
        probs.append(str(err))
    return probs


def biadjoint_biequivalences_with_fwd(
    cat: GrayCategory, fwd: str
) -> Iterator[BiadjointBiequivalence]:
    a, b = cat.src1(fwd), cat.tgt1(fwd)
    try:
        ida, idb = cat.id1(a), cat.id1(b)
    except GrayError:
        return
    for bwd in cat.hom(b, a).one_cells:
        try:
            bf = cat.tensor1(bwd, fwd)
            fb = cat.tensor1(fwd, bwd)
        except GrayError:
            continue
        for am in cat.two_cells_between(ida, bf):
            for m in adjoint_equivalences_with_fwd(cat, am):
                for an in cat.two_cells_between(idb, fb):
                    for n in adjoint_equivalences_with_fwd(cat, an):
                        try:
                            phi_src = cat.otimes2(
                                cat.whisker("pre", fwd, 2, n.bwd),
                                cat.whisker("post", fwd, 2, am),
                            )
                            psi_src = cat.otimes2(
                                cat.whisker("post", bwd, 2, n.bwd),
                                cat.whisker("pre", bwd, 2, am),
                            )
                            id_f, id_b_ = cat.id2(fwd), cat.id2(bwd)
                        except GrayError:
                            continue
                        for phi in cat.invertible_threes_between(phi_src, id_f):
                            for psi in cat.invertible_threes_between(psi_src, id_b_):
                                yield BiadjointBiequivalence(fwd, bwd, m, n, phi, psi)


def biadjoint_biequivalences(cat: GrayCategory, a: str, b: str) -> Iterator[BiadjointBiequivalence]:
    for fwd in cat.hom(a, b).one_cells:
        yield from biadjoint_biequivalences_with_fwd(cat, fwd)


def find_biadjoint_biequivalence(cat: GrayCategory, a: str, b: str) -> BiadjointBiequivalence | None:
    return next(biadjoint_biequivalences(cat, a, b), None)


def find_biadjoint_with_fwd(cat: GrayCategory, fwd: str) -> BiadjointBiequivalence | None:
    return next(biadjoint_biequivalences_with_fwd(cat, fwd), None)


# ---------------------------------------------------------------------------
# functors


class GrayFunctor:
    """A strict map of categories: cells to cells, all structure on the nose."""

    def __init__(
        self,
        name: str,
        source: GrayCategory,
        target: GrayCategory,
        maps: dict[int, dict],
    ):
        self.name = name
        self.source = source
        self.target = target
        self.maps = {d: dict(maps.get(d, {})) for d in (0, 1, 2, 3)}

    def __call__(self, dim: int, name):
        try:
            return self.maps[dim][name]
        except KeyError:
            raise TableGap(f"functor {self.name}: no image for {dim}-cell {name!r}") from None

    def is_weak(self) -> bool:
        return False

    def _constraints(self):
        return None

    def __eq__(self, other):
        if not isinstance(other, GrayFunctor):
            return NotImplemented
        return (
            self.is_weak() == other.is_weak()
            and self.source.name == other.source.name
            and self.target.name == other.target.name
            and self.maps == other.maps
            and self._constraints() == other._constraints()
        )

    __hash__ = None

    def __repr__(self) -> str:
        kind = "WeakFunctor" if self.is_weak() else "GrayFunctor"
        return f"<{kind} {self.name}: {self.source.name} -> {self.target.name}>"


class WeakFunctor(GrayFunctor):
    """A functor that preserves 1-cell composition only up to comparison data.

    Hom-wise it is still strict.  ``chi[(g, f)]`` is an adjoint equivalence
    ``Fg . Ff => F(g . f)``; ``iota[a]`` one ``id_{Fa} => F(id_a)``;
    ``chi_nat[(sigma, theta)]`` holds the comparison square for a pair of
    2-cells and its mate; ``omega``, ``gamma``, ``delta`` are the
    associativity and unit comparison 3-cells.
    """

    def __init__(
        self,
        name: str,
        source: GrayCategory,
        target: GrayCategory,
        maps: dict[int, dict],
        chi: dict[tuple[str, str], AdjointEquivalence],
        iota: dict[str, AdjointEquivalence],
        chi_nat: dict[tuple[str, str], tuple[str, str]] | None = None,
        omega: dict[tuple[str, str, str], str] | None = None,
        gamma: dict[str, str] | None = None,
        delta: dict[str, str] | None = None,
    ):
        super().__init__(name, source, target, maps)
        self.chi = dict(chi)
        self.iota = dict(iota)
        self.chi_nat = dict(chi_nat or {})
        self.omega = dict(omega or {})
        self.gamma = dict(gamma or {})
        self.delta = dict(delta or {})

    def is_weak(self) -> bool:
        return True

    def _constraints(self):
        return (self.chi, self.iota, self.chi_nat, self.omega, self.gamma, self.delta)


def identity_functor(cat: GrayCategory) -> GrayFunctor:
    maps: dict[int, dict] = {0: {a: a for a in cat.objects}}
    for d in (1, 2, 3):
        maps[d] = {x: x for x in cat.all_cells(d)}
    return GrayFunctor(f"id_{cat.name}", cat, cat, maps)


def _mapped_adjeq(G: GrayFunctor, ae: AdjointEquivalence) -> AdjointEquivalence:
    return AdjointEquivalence(G(2, ae.fwd), G(2, ae.bwd), G(3, ae.unit), G(3, ae.counit))


def compose_functors(G: GrayFunctor, F: GrayFunctor) -> GrayFunctor:
    """G after F.  At most one of the two may be weak."""
    if F.target.name != G.source.name:
        raise NotComposable(
            f"cannot compose {G.name} after {F.name}: middle categories "
            f"{F.target.name!r} and {G.source.name!r} differ"
        )
    name = f"{G.name}*{F.name}"
    maps: dict[int, dict] = {}
    for d in (0, 1, 2, 3):
        maps[d] = {x: G(d, y) for x, y in F.maps[d].items()}
    f_weak, g_weak = F.is_weak(), G.is_weak()
    if f_weak and g_weak:
        raise GrayError("composition of two weak maps is not supported")
    if not f_weak and not g_weak:
        return GrayFunctor(name, F.source, G.target, maps)
    if f_weak:
        # strict G transports F's comparison data forward
        return WeakFunctor(
            name, F.source, G.target, maps,
            chi={k: _mapped_adjeq(G, ae) for k, ae in F.chi.items()},
            iota={a: _mapped_adjeq(G, ae) for a, ae in F.iota.items()},
            chi_nat={k: (G(3, X), G(3, Y)) for k, (X, Y) in F.chi_nat.items()},
            omega={k: G(3, X) for k, X in F.omega.items()},
            gamma={k: G(3, X) for k, X in F.gamma.items()},
            delta={k: G(3, X) for k, X in F.delta.items()},
        )
    # strict F: reindex G's comparison data along F
    src = F.source
    chi: dict[tuple[str, str], AdjointEquivalence] = {}
    chi_nat: dict[tuple[str, str], tuple[str, str]] = {}
    omega: dict[tuple[str, str, str], str] = {}
    try:
        for g in src.all_cells(1):
            for f in src.all_cells(1):
                if src.tgt1(f) != src.src1(g):
                    continue
                chi[(g, f)] = G.chi[(F(1, g), F(1, f))]
        iota = {a: G.iota[F(0, a)] for a in src.objects}
        for xi in src.all_cells(2):
            for gm in src.all_cells(2):
                if src.hom_key(2, gm)[1] != src.hom_key(2, xi)[0]:
                    continue
                chi_nat[(xi, gm)] = G.chi_nat[(F(2, xi), F(2, gm))]
        for h in src.all_cells(1):
            for g in src.all_cells(1):
                if src.tgt1(g) != src.src1(h):
                    continue
                for f in src.all_cells(1):
                    if src.tgt1(f) != src.src1(g):
                        continue
                    omega[(h, g, f)] = G.omega[(F(1, h), F(1, g), F(1, f))]
        gamma = {f: G.gamma[F(1, f)] for f in src.all_cells(1)}
        delta = {f: G.delta[F(1, f)] for f in src.all_cells(1)}
    except KeyError as err:
        raise MissingConstraint(
            f"compose_functors({G.name}, {F.name}): missing comparison data at {err}"
        ) from None
    return WeakFunctor(name, F.source, G.target, maps, chi, iota, chi_nat, omega, gamma, delta)


# ---------------------------------------------------------------------------
# the axiom checker


class _Fam:
    """Accumulator for one checking family."""

    def __init__(self, tag: str):
        self.tag = tag
        self.checked = 0
        self.skipped = 0
        self.vios: list[Violation] = []

    def bad(self, cells: Iterable[CellRef], detail: str, tag: str | None = None) -> None:
        self.vios.append(Violation(tag or self.tag, tuple(cells), detail))

    def check(self, cond: bool, cells: Iterable[CellRef], detail: str, tag: str | None = None) -> None:
        self.checked += 1
        if not cond:
            self.bad(cells, detail, tag)

    def eq(self, cells, label: str, lhs, rhs, tag: str | None = None) -> None:
        self.checked += 1
        try:
            a = lhs() if callable(lhs) else lhs
            b = rhs() if callable(rhs) else rhs
        except GrayError as err:
            self.bad(cells, f"{label}: {err}", tag)
            return
        if a != b:
            self.bad(cells, f"{label}: {a!r} != {b!r}", tag)

    def result(self) -> tuple[int, int, list[Violation]]:
        return self.checked, self.skipped, self.vios


def _dims(h: HomData):
    return ((1, list(h.one_cells)), (2, list(h.two_cells)), (3, list(h.three_cells)))


def _fam_boundary(cat: GrayCategory):
    fam = _Fam("boundary")
    for a in cat.objects:
        f = cat.identity1.get(a)
        fam.checked += 1
        if f is not None and cat._hom_of[1].get(f) != (a, a):
            fam.bad([CellRef(0, a), CellRef(1, f)], f"identity 1-cell {f!r} not in hom ({a!r}, {a!r})")
    for a in cat.identity1:
        if a not in cat._objset:
            fam.bad([CellRef(0, a)], "identity1 entry for unknown object")
    for key, h in cat.homs.items():
        a, b = key
        if a not in cat._objset or b not in cat._objset:
            fam.bad([CellRef(0, a), CellRef(0, b)], f"hom {key} keyed by unknown object(s)")
        ones = set(h.one_cells)
        for x, (s, t) in h.two_cells.items():
            fam.checked += 1
            if s not in ones or t not in ones:
                fam.bad([CellRef(2, x)], f"2-cell boundary ({s!r}, {t!r}) outside hom {key}")
        for X, (s, t) in h.three_cells.items():
            fam.checked += 1
            bs, bt = h.two_cells.get(s), h.two_cells.get(t)
            if bs is None or bt is None:
                fam.bad([CellRef(3, X)], f"3-cell boundary ({s!r}, {t!r}) outside hom {key}")
            elif bs != bt:
                fam.bad([CellRef(3, X)], f"endpoints {s!r}: {bs} and {t!r}: {bt} are not parallel")
        for f, u in h.id2.items():
            fam.checked += 1
            if f not in ones:
                fam.bad([CellRef(1, f)], "id2 entry for 1-cell outside hom")
            elif h.two_cells.get(u) != (f, f):
                fam.bad([CellRef(1, f), CellRef(2, u)], f"id2[{f!r}] = {u!r} is not a 2-cell {f!r} => {f!r}")
        for x, v in h.id3.items():
            fam.checked += 1
            if x not in h.two_cells:
                fam.bad([CellRef(2, x)], "id3 entry for 2-cell outside hom")
            elif h.three_cells.get(v) != (x, x):
                fam.bad([CellRef(2, x), CellRef(3, v)], f"id3[{x!r}] = {v!r} is not a 3-cell {x!r} => {x!r}")
        for (y, x), z in h.otimes2.items():
            fam.checked += 1
            bx, by, bz = h.two_cells.get(x), h.two_cells.get(y), h.two_cells.get(z)
            refs = [CellRef(2, y), CellRef(2, x)]
            if bx is None or by is None or bz is None:
                fam.bad(refs, f"otimes2 entry {z!r} touches cells outside hom {key}")
            elif bx[1] != by[0]:
                fam.bad(refs, "otimes2 key is not composable")
            elif bz != (bx[0], by[1]):
                fam.bad(refs, f"otimes2 value {z!r} has boundary {bz}, expected {(bx[0], by[1])}")
        for (Y, X), Z in h.circ3.items():
            fam.checked += 1
            bx, by, bz = h.three_cells.get(X), h.three_cells.get(Y), h.three_cells.get(Z)
            refs = [CellRef(3, Y), CellRef(3, X)]
            if bx is None or by is None or bz is None:
                fam.bad(refs, f"circ3 entry {Z!r} touches cells outside hom {key}")
            elif bx[1] != by[0]:
                fam.bad(refs, "circ3 key is not composable")
            elif bz != (bx[0], by[1]):
                fam.bad(refs, f"circ3 value {Z!r} has boundary {bz}, expected {(bx[0], by[1])}")
        for (Y, X), Z in h.otimes3.items():
            fam.checked += 1
            bx, by, bz = h.three_cells.get(X), h.three_cells.get(Y), h.three_cells.get(Z)
            refs = [CellRef(3, Y), CellRef(3, X)]
            if bx is None or by is None or bz is None:
                fam.bad(refs, f"otimes3 entry {Z!r} touches cells outside hom {key}")
                continue
            exp_s = h.otimes2.get((by[0], bx[0]))
            exp_t = h.otimes2.get((by[1], bx[1]))
            if exp_s is None or exp_t is None:
                fam.skipped += 1  # gap family reports the missing otimes2
            elif bz != (exp_s, exp_t):
                fam.bad(refs, f"otimes3 value {Z!r} has boundary {bz}, expected {(exp_s, exp_t)}")
    for table, side in ((cat.whisker_post, "post"), (cat.whisker_pre, "pre")):
        for (w, d, x), z in table.items():
            fam.checked += 1
            refs = [CellRef(1, w), CellRef(d if d in (1, 2, 3) else 1, x)]
            winfo = cat._hom_of[1].get(w)
            if winfo is None or d not in (1, 2, 3):
                fam.bad(refs, f"{side}-whisker key ({w!r}, {d!r}, {x!r}) malformed")
                continue
            wa, wb = winfo
            xkey = cat._hom_of[d].get(x)
            if xkey is None:
                fam.bad(refs, f"{side}-whisker key names unknown {d}-cell {x!r}")
                continue
            if side == "post":
                if xkey[1] != wa:
                    fam.bad(refs, f"post-whisker key not composable: hom {xkey} vs {w!r}")
                    continue
                rkey = (xkey[0], wb)
            else:
                if xkey[0] != wb:
                    fam.bad(refs, f"pre-whisker key not composable: hom {xkey} vs {w!r}")
                    continue
                rkey = (wa, xkey[1])
            if cat._hom_of[d].get(z) != rkey:
                fam.bad(refs, f"{side}-whisker value {z!r} is not a {d}-cell of hom {rkey}")
                continue
            if d == 2:
                s, t = cat.homs[xkey].two_cells[x]
                zs, zt = cat.homs[rkey].two_cells[z]
                ws, wt = table.get((w, 1, s)), table.get((w, 1, t))
                if ws is not None and zs != ws:
                    fam.bad(refs, f"{side}-whisker value source {zs!r} != whiskered source {ws!r}")
                if wt is not None and zt != wt:
                    fam.bad(refs, f"{side}-whisker value target {zt!r} != whiskered target {wt!r}")
            elif d == 3:
                s, t = cat.homs[xkey].three_cells[x]
                zs, zt = cat.homs[rkey].three_cells[z]
                ws, wt = table.get((w, 2, s)), table.get((w, 2, t))
                if ws is not None and zs != ws:
                    fam.bad(refs, f"{side}-whisker value source {zs!r} != whiskered source {ws!r}")
                if wt is not None and zt != wt:
                    fam.bad(refs, f"{side}-whisker value target {zt!r} != whiskered target {wt!r}")
    for (xi, gamma), Z in cat.sigma.items():
        fam.checked += 1
        refs = [CellRef(2, xi), CellRef(2, gamma), CellRef(3, Z)]
        kxi = cat._hom_of[2].get(xi)
        kg = cat._hom_of[2].get(gamma)
        if kxi is None or kg is None:
            fam.bad(refs, "interchanger key names unknown 2-cell(s)")
            continue
        if kg[1] != kxi[0]:
            fam.bad(refs, f"interchanger key homs {kxi} and {kg} are not adjacent")
            continue
        g0, g1 = cat.homs[kxi].two_cells[xi]
        f0, f1 = cat.homs[kg].two_cells[gamma]
        try:
            src = cat.otimes2(cat.whisker("pre", f1, 2, xi), cat.whisker("post", g0, 2, gamma))
            tgt = cat.otimes2(cat.whisker("post", g1, 2, gamma), cat.whisker("pre", f0, 2, xi))
        except GrayError as err:
            fam.bad(refs, f"interchanger boundary not computable: {err}")
            continue
        rkey = (kg[0], kxi[1])
        if cat._hom_of[3].get(Z) != rkey:
            fam.bad(refs, f"interchanger value {Z!r} is not a 3-cell of hom {rkey}")
            continue
        bz = cat.homs[rkey].three_cells[Z]
        if bz != (src, tgt):
            fam.bad(refs, f"interchanger value {Z!r} has boundary {bz}, expected {(src, tgt)}")
    return fam.result()


def _fam_totality(cat: GrayCategory):
    fam = _Fam("gap")
    for a in cat.objects:
        fam.check(a in cat.identity1, [CellRef(0, a)], "object has no identity 1-cell")
    for key, h in cat.homs.items():
        for f in h.one_cells:
            fam.check(f in h.id2, [CellRef(1, f)], "1-cell has no identity 2-cell")
        for x in h.two_cells:
            fam.check(x in h.id3, [CellRef(2, x)], "2-cell has no identity 3-cell")
        for y, (ys, yt) in h.two_cells.items():
            for x, (xs, xt) in h.two_cells.items():
                if xt == ys:
                    fam.check((y, x) in h.otimes2, [CellRef(2, y), CellRef(2, x)], "no otimes2 entry")
        for Y, (Ys, Yt) in h.three_cells.items():
            by = h.two_cells.get(Ys)
            for X, (Xs, Xt) in h.three_cells.items():
                if Xt == Ys:
                    fam.check((Y, X) in h.circ3, [CellRef(3, Y), CellRef(3, X)], "no circ3 entry")
                bx = h.two_cells.get(Xs)
                if bx is not None and by is not None and bx[1] == by[0]:
                    fam.check((Y, X) in h.otimes3, [CellRef(3, Y), CellRef(3, X)], "no otimes3 entry")
    for w, (wa, wb) in cat._hom_of[1].items():
        for key, h in cat.homs.items():
            if key[1] == wa:
                for d, cells in _dims(h):
                    for x in cells:
                        fam.check(
                            (w, d, x) in cat.whisker_post,
                            [CellRef(1, w), CellRef(d, x)],
                            "no post-whisker entry",
                        )
            if key[0] == wb:
                for d, cells in _dims(h):
                    for x in cells:
                        fam.check(
                            (w, d, x) in cat.whisker_pre,
                            [CellRef(1, w), CellRef(d, x)],
                            "no pre-whisker entry",
                        )
    for key_hi, hhi in cat.homs.items():
        for key_lo, hlo in cat.homs.items():
            if key_lo[1] != key_hi[0]:
                continue
            for xi in hhi.two_cells:
                for gamma in hlo.two_cells:
                    fam.check(
                        (xi, gamma) in cat.sigma,
                        [CellRef(2, xi), CellRef(2, gamma)],
                        "no interchanger entry",
                    )
    return fam.result()


def _fam_hom(cat: GrayCategory):
    """Each hom must be a strict 2-category."""
    fam = _Fam("D1")
    for key, h in cat.homs.items():
        for x, (s, t) in h.two_cells.items():
            fam.eq([CellRef(2, x)], "right unit for otimes2",
                   lambda x=x, s=s: cat.otimes2(x, cat.id2(s)), x)
            fam.eq([CellRef(2, x)], "left unit for otimes2",
                   lambda x=x, t=t: cat.otimes2(cat.id2(t), x), x)
        for y, (ys, yt) in h.two_cells.items():
            for x, (xs, xt) in h.two_cells.items():
                if xt != ys:
                    continue
                for z, (zs, zt) in h.two_cells.items():
                    if yt != zs:
                        continue
                    fam.eq([CellRef(2, z), CellRef(2, y), CellRef(2, x)],
                           "otimes2 associativity",
                           lambda x=x, y=y, z=z: cat.otimes2(z, cat.otimes2(y, x)),
                           lambda x=x, y=y, z=z: cat.otimes2(cat.otimes2(z, y), x))
        for X, (s, t) in h.three_cells.items():
            fam.eq([CellRef(3, X)], "right unit for circ3",
                   lambda X=X, s=s: cat.circ3(X, cat.id3(s)), X)
            fam.eq([CellRef(3, X)], "left unit for circ3",
                   lambda X=X, t=t: cat.circ3(cat.id3(t), X), X)
            bx = h.two_cells.get(s)
            if bx is None:
                fam.skipped += 1
                continue
            f0, f1 = bx
            fam.eq([CellRef(3, X)], "right unit for otimes3",
                   lambda X=X, f0=f0: cat.otimes3(X, cat.id3(cat.id2(f0))), X)
            fam.eq([CellRef(3, X)], "left unit for otimes3",
                   lambda X=X, f1=f1: cat.otimes3(cat.id3(cat.id2(f1)), X), X)
        for (y, x), z in h.otimes2.items():
            fam.eq([CellRef(2, y), CellRef(2, x)], "id3 respects otimes2",
                   lambda x=x, y=y: cat.otimes3(cat.id3(y), cat.id3(x)),
                   lambda z=z: cat.id3(z))
        chains3: dict[str, list[str]] = {}
        for X, (s, t) in h.three_cells.items():
            chains3.setdefault(s, []).append(X)
        for X, (xs, xt) in h.three_cells.items():
            for Y in chains3.get(xt, ()):
                for Z in chains3.get(h.three_cells[Y][1], ()):
                    fam.eq([CellRef(3, Z), CellRef(3, Y), CellRef(3, X)],
                           "circ3 associativity",
                           lambda X=X, Y=Y, Z=Z: cat.circ3(Z, cat.circ3(Y, X)),
                           lambda X=X, Y=Y, Z=Z: cat.circ3(cat.circ3(Z, Y), X))
        for (Y, X), _ in h.otimes3.items():
            for (Z, Y2), _2 in h.otimes3.items():
                if Y2 != Y:
                    continue
                fam.eq([CellRef(3, Z), CellRef(3, Y), CellRef(3, X)],
                       "otimes3 associativity",
                       lambda X=X, Y=Y, Z=Z: cat.otimes3(Z, cat.otimes3(Y, X)),
                       lambda X=X, Y=Y, Z=Z: cat.otimes3(cat.otimes3(Z, Y), X))
        # interchange of circ3 and otimes3
        for X1, (x0, x1) in h.three_cells.items():
            b1 = h.two_cells.get(x0)
            if b1 is None:
                continue
            for X2 in chains3.get(x1, ()):
                for Y1, (y0, y1) in h.three_cells.items():
                    b2 = h.two_cells.get(y0)
                    if b2 is None or b1[1] != b2[0]:
                        continue
                    for Y2 in chains3.get(y1, ()):
                        fam.eq(
                            [CellRef(3, Y2), CellRef(3, Y1), CellRef(3, X2), CellRef(3, X1)],
                            "interchange of circ3 and otimes3",
                            lambda X1=X1, X2=X2, Y1=Y1, Y2=Y2:
                                cat.circ3(cat.otimes3(Y2, X2), cat.otimes3(Y1, X1)),
                            lambda X1=X1, X2=X2, Y1=Y1, Y2=Y2:
                                cat.otimes3(cat.circ3(Y2, Y1), cat.circ3(X2, X1)),
                        )
    return fam.result()


def _fam_whisker_2functor(cat: GrayCategory):
    """Whiskering with a fixed 1-cell must be a strict 2-functor."""
    fam = _Fam("D4")
    for w, (wa, wb) in cat._hom_of[1].items():
        for key, h in cat.homs.items():
            sides = []
            if key[1] == wa:
                sides.append("post")
            if key[0] == wb:
                sides.append("pre")
            for side in sides:
                for f in h.one_cells:
                    fam.eq([CellRef(1, w), CellRef(1, f)], f"{side}-whisker preserves id2",
                           lambda side=side, w=w, f=f: cat.whisker(side, w, 2, cat.id2(f)),
                           lambda side=side, w=w, f=f: cat.id2(cat.whisker(side, w, 1, f)))
                for x in h.two_cells:
                    fam.eq([CellRef(1, w), CellRef(2, x)], f"{side}-whisker preserves id3",
                           lambda side=side, w=w, x=x: cat.whisker(side, w, 3, cat.id3(x)),
                           lambda side=side, w=w, x=x: cat.id3(cat.whisker(side, w, 2, x)))
                for (y, x) in h.otimes2:
                    fam.eq([CellRef(1, w), CellRef(2, y), CellRef(2, x)],
                           f"{side}-whisker preserves otimes2",
                           lambda side=side, w=w, x=x, y=y: cat.whisker(side, w, 2, cat.otimes2(y, x)),
                           lambda side=side, w=w, x=x, y=y:
                               cat.otimes2(cat.whisker(side, w, 2, y), cat.whisker(side, w, 2, x)))
                for (Y, X) in h.circ3:
                    fam.eq([CellRef(1, w), CellRef(3, Y), CellRef(3, X)],
                           f"{side}-whisker preserves circ3",
                           lambda side=side, w=w, X=X, Y=Y: cat.whisker(side, w, 3, cat.circ3(Y, X)),
                           lambda side=side, w=w, X=X, Y=Y:
                               cat.circ3(cat.whisker(side, w, 3, Y), cat.whisker(side, w, 3, X)))
                for (Y, X) in h.otimes3:
                    fam.eq([CellRef(1, w), CellRef(3, Y), CellRef(3, X)],
                           f"{side}-whisker preserves otimes3",
                           lambda side=side, w=w, X=X, Y=Y: cat.whisker(side, w, 3, cat.otimes3(Y, X)),
                           lambda side=side, w=w, X=X, Y=Y:
                               cat.otimes3(cat.whisker(side, w, 3, Y), cat.whisker(side, w, 3, X)))
    return fam.result()


def _need(value, msg: str):
    if value is None:
        raise TableGap(msg)
    return value


def _fam_c1(cat: GrayCategory):
    """The two whisker tables must agree on 1-cell composition."""
    fam = _Fam("C1")
    for g, (ga, gb) in cat._hom_of[1].items():
        for f, (fa, fb) in cat._hom_of[1].items():
            if fb != ga:
                continue
            fam.eq([CellRef(1, g), CellRef(1, f)], "post and pre tables agree on g . f",
                   lambda g=g, f=f: _need(cat.whisker_post.get((g, 1, f)), "post entry missing"),
                   lambda g=g, f=f: _need(cat.whisker_pre.get((f, 1, g)), "pre entry missing"))
    return fam.result()


def _fam_c2(cat: GrayCategory):
    """Whiskering is unital and compatible with 1-cell composition."""
    fam = _Fam("C2")
    for b in cat.objects:
        idb = cat.identity1.get(b)
        if idb is None:
            fam.skipped += 1
            continue
        for key, h in cat.homs.items():
            for d, cells in _dims(h):
                for x in cells:
                    if key[1] == b:
                        fam.eq([CellRef(1, idb), CellRef(d, x)], "identity post-whisker is trivial",
                               lambda idb=idb, d=d, x=x: cat.whisker("post", idb, d, x), x)
                    if key[0] == b:
                        fam.eq([CellRef(1, idb), CellRef(d, x)], "identity pre-whisker is trivial",
                               lambda idb=idb, d=d, x=x: cat.whisker("pre", idb, d, x), x)
    for w2, (b2, c2) in cat._hom_of[1].items():
        for w1, (a1, b1) in cat._hom_of[1].items():
            if b1 != b2:
                continue
            comp = cat.whisker_post.get((w2, 1, w1))
            if comp is None:
                fam.skipped += 1
                continue
            for key, h in cat.homs.items():
                for d, cells in _dims(h):
                    for x in cells:
                        if key[1] == a1:
                            fam.eq([CellRef(1, w2), CellRef(1, w1), CellRef(d, x)],
                                   "post-whiskers compose",
                                   lambda w1=w1, w2=w2, d=d, x=x:
                                       cat.whisker("post", w2, d, cat.whisker("post", w1, d, x)),
                                   lambda comp=comp, d=d, x=x: cat.whisker("post", comp, d, x))
                        if key[0] == c2:
                            fam.eq([CellRef(1, w2), CellRef(1, w1), CellRef(d, x)],
                                   "pre-whiskers compose",
                                   lambda w1=w1, w2=w2, d=d, x=x:
                                       cat.whisker("pre", w1, d, cat.whisker("pre", w2, d, x)),
                                   lambda comp=comp, d=d, x=x: cat.whisker("pre", comp, d, x))
    for wp, (c, _d) in cat._hom_of[1].items():
        for wq, (_a, b) in cat._hom_of[1].items():
            key = (b, c)
            h = cat.homs.get(key)
            if h is None:
                continue
            for d, cells in _dims(h):
                for x in cells:
                    fam.eq([CellRef(1, wp), CellRef(1, wq), CellRef(d, x)],
                           "pre- and post-whiskers commute",
                           lambda wp=wp, wq=wq, d=d, x=x:
                               cat.whisker("post", wp, d, cat.whisker("pre", wq, d, x)),
                           lambda wp=wp, wq=wq, d=d, x=x:
                               cat.whisker("pre", wq, d, cat.whisker("post", wp, d, x)))
    return fam.result()


def _fam_c3(cat: GrayCategory):
    """Interchangers with an identity argument are identities."""
    fam = _Fam("C3")
    for (xi, gamma), Z in cat.sigma.items():
        kxi = cat._hom_of[2].get(xi)
        kg = cat._hom_of[2].get(gamma)
        if kxi is None or kg is None:
            fam.skipped += 1
            continue
        g0, _g1 = cat.homs[kxi].two_cells[xi]
        f0, _f1 = cat.homs[kg].two_cells[gamma]
        if gamma == cat.homs[kg].id2.get(f0):
            fam.eq([CellRef(2, xi), CellRef(2, gamma)],
                   "interchanger with identity right argument",
                   Z, lambda xi=xi, f0=f0: cat.id3(cat.whisker("pre", f0, 2, xi)))
        if xi == cat.homs[kxi].id2.get(g0):
            fam.eq([CellRef(2, xi), CellRef(2, gamma)],
                   "interchanger with identity left argument",
                   Z, lambda gamma=gamma, g0=g0: cat.id3(cat.whisker("post", g0, 2, gamma)))
    return fam.result()


def _fam_c4(cat: GrayCategory):
    """Interchangers split over otimes2 in either argument."""
    fam = _Fam("C4")
    for key_hi, hhi in cat.homs.items():
        for key_lo, hlo in cat.homs.items():
            if key_lo[1] != key_hi[0]:
                continue
            for xi1, (g0, g1) in hhi.two_cells.items():
                for xi2, (h0, h1) in hhi.two_cells.items():
                    if h0 != g1:
                        continue
                    for gamma, (f0, f1) in hlo.two_cells.items():
                        fam.eq(
                            [CellRef(2, xi2), CellRef(2, xi1), CellRef(2, gamma)],
                            "interchanger splits over otimes2 on the left",
                            lambda xi1=xi1, xi2=xi2, gamma=gamma:
                                cat.interchanger(cat.otimes2(xi2, xi1), gamma),
                            lambda xi1=xi1, xi2=xi2, gamma=gamma, f0=f0, f1=f1:
                                cat.circ3(
                                    cat.otimes3(cat.interchanger(xi2, gamma),
                                                cat.id3(cat.whisker("pre", f0, 2, xi1))),
                                    cat.otimes3(cat.id3(cat.whisker("pre", f1, 2, xi2)),
                                                cat.interchanger(xi1, gamma)),
                                ),
                        )
            for xi, (g0, g1) in hhi.two_cells.items():
                for gamma1, (f0, f1) in hlo.two_cells.items():
                    for gamma2, (e0, e1) in hlo.two_cells.items():
                        if e0 != f1:
                            continue
                        fam.eq(
                            [CellRef(2, xi), CellRef(2, gamma2), CellRef(2, gamma1)],
                            "interchanger splits over otimes2 on the right",
                            lambda xi=xi, gamma1=gamma1, gamma2=gamma2:
                                cat.interchanger(xi, cat.otimes2(gamma2, gamma1)),
                            lambda xi=xi, gamma1=gamma1, gamma2=gamma2, g0=g0, g1=g1:
                                cat.circ3(
                                    cat.otimes3(cat.id3(cat.whisker("post", g1, 2, gamma2)),
                                                cat.interchanger(xi, gamma1)),
                                    cat.otimes3(cat.interchanger(xi, gamma2),
                                                cat.id3(cat.whisker("post", g0, 2, gamma1))),
                                ),
                        )
    return fam.result()


def _fam_c5(cat: GrayCategory):
    """Interchangers are natural in both arguments against 3-cells."""
    fam = _Fam("C5")
    for key_hi, hhi in cat.homs.items():
        for key_lo, hlo in cat.homs.items():
            if key_lo[1] != key_hi[0]:
                continue
            for Xi, (xi, xihat) in hhi.three_cells.items():
                bx = hhi.two_cells.get(xi)
                if bx is None:
                    fam.skipped += 1
                    continue
                g0, g1 = bx
                for gamma, (f0, f1) in hlo.two_cells.items():
                    fam.eq(
                        [CellRef(3, Xi), CellRef(2, gamma)],
                        "interchanger natural in the left argument",
                        lambda Xi=Xi, xihat=xihat, gamma=gamma, f1=f1, g0=g0:
                            cat.circ3(
                                cat.interchanger(xihat, gamma),
                                cat.otimes3(cat.whisker("pre", f1, 3, Xi),
                                            cat.id3(cat.whisker("post", g0, 2, gamma))),
                            ),
                        lambda Xi=Xi, xi=xi, gamma=gamma, f0=f0, g1=g1:
                            cat.circ3(
                                cat.otimes3(cat.id3(cat.whisker("post", g1, 2, gamma)),
                                            cat.whisker("pre", f0, 3, Xi)),
                                cat.interchanger(xi, gamma),
                            ),
                    )
            for xi, (g0, g1) in hhi.two_cells.items():
                for Th, (gamma, gammahat) in hlo.three_cells.items():
                    bg = hlo.two_cells.get(gamma)
                    if bg is None:
                        fam.skipped += 1
                        continue
                    f0, f1 = bg
                    fam.eq(
                        [CellRef(2, xi), CellRef(3, Th)],
                        "interchanger natural in the right argument",
                        lambda Th=Th, xi=xi, gammahat=gammahat, f1=f1, g0=g0:
                            cat.circ3(
                                cat.interchanger(xi, gammahat),
                                cat.otimes3(cat.id3(cat.whisker("pre", f1, 2, xi)),
                                            cat.whisker("post", g0, 3, Th)),
                            ),
                        lambda Th=Th, xi=xi, gamma=gamma, f0=f0, g1=g1:
                            cat.circ3(
                                cat.otimes3(cat.whisker("post", g1, 3, Th),
                                            cat.id3(cat.whisker("pre", f0, 2, xi))),
                                cat.interchanger(xi, gamma),
                            ),
                    )
    return fam.result()


def _fam_c6(cat: GrayCategory):
    """Interchangers respect whiskering by a 1-cell in all three positions."""
    fam = _Fam("C6")
    for h1, (p, q) in cat._hom_of[1].items():
        for key_hi, hhi in cat.homs.items():
            for key_lo, hlo in cat.homs.items():
                # outer post: xi gets post-whiskered by h1
                if key_hi[1] == p and key_lo[1] == key_hi[0]:
                    for xi in hhi.two_cells:
                        for gamma in hlo.two_cells:
                            fam.eq(
                                [CellRef(1, h1), CellRef(2, xi), CellRef(2, gamma)],
                                "interchanger respects outer post-whiskering",
                                lambda h1=h1, xi=xi, gamma=gamma:
                                    cat.interchanger(cat.whisker("post", h1, 2, xi), gamma),
                                lambda h1=h1, xi=xi, gamma=gamma:
                                    cat.whisker("post", h1, 3, cat.interchanger(xi, gamma)),
                            )
                # middle: h1 bridges gamma's hom to xi's hom
                if key_hi[0] == q and key_lo[1] == p:
                    for xi in hhi.two_cells:
                        for gamma in hlo.two_cells:
                            fam.eq(
                                [CellRef(1, h1), CellRef(2, xi), CellRef(2, gamma)],
                                "interchanger respects middle whiskering",
                                lambda h1=h1, xi=xi, gamma=gamma:
                                    cat.interchanger(cat.whisker("pre", h1, 2, xi), gamma),
                                lambda h1=h1, xi=xi, gamma=gamma:
                                    cat.interchanger(xi, cat.whisker("post", h1, 2, gamma)),
                            )
                # outer pre: gamma gets pre-whiskered by h1
                if key_lo[0] == q and key_lo[1] == key_hi[0]:
                    for xi in hhi.two_cells:
                        for gamma in hlo.two_cells:
                            fam.eq(
                                [CellRef(1, h1), CellRef(2, xi), CellRef(2, gamma)],
                                "interchanger respects outer pre-whiskering",
                                lambda h1=h1, xi=xi, gamma=gamma:
                                    cat.interchanger(xi, cat.whisker("pre", h1, 2, gamma)),
                                lambda h1=h1, xi=xi, gamma=gamma:
                                    cat.whisker("pre", h1, 3, cat.interchanger(xi, gamma)),
                            )
    return fam.result()


def _fam_d5(cat: GrayCategory):
    """Every interchanger must be invertible."""
    fam = _Fam("D5")
    for (xi, gamma), Z in cat.sigma.items():
        fam.checked += 1
        refs = [CellRef(2, xi), CellRef(2, gamma), CellRef(3, Z)]
        if cat._hom_of[3].get(Z) is None:
            fam.bad(refs, f"interchanger value {Z!r} is not a 3-cell")
            continue
        if cat.invert3(Z) is None:
            fam.bad(refs, "interchanger value is not invertible")
    return fam.result()


_FAMILIES: tuple[Callable, ...] = (
    _fam_boundary,
    _fam_totality,
    _fam_hom,
    _fam_whisker_2functor,
    _fam_c1,
    _fam_c2,
    _fam_c3,
    _fam_c4,
    _fam_c5,
    _fam_c6,
    _fam_d5,
)


def check_gray_axioms(cat: GrayCategory, jobs: int | None = None) -> AxiomReport:
    """Run every family; never short-circuits, so reports can be multi-tag."""
    jobs = default_jobs() if jobs is None else max(1, jobs)
    if jobs == 1:
        parts = [fam(cat) for fam in _FAMILIES]
    else:
        # family-level chunking; merge order is fixed so output is deterministic
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(lambda fam: fam(cat), _FAMILIES))
    report = AxiomReport()
    for checked, skipped, vios in parts:
        report.checked += checked
        report.skipped += skipped
        report.violations.extend(vios)
    return report.finish()


# ---------------------------------------------------------------------------
# functor checkers


def check_gray_functor(fun: GrayFunctor) -> AxiomReport:
    """Totality, boundary preservation and strict structure preservation."""
    fam = _Fam("functor")
    src, tgt = fun.source, fun.target
    m0, m1, m2, m3 = fun.maps[0], fun.maps[1], fun.maps[2], fun.maps[3]
    for a in src.objects:
        fam.check(a in m0, [CellRef(0, a)], "object has no image", tag="gap")
        va = m0.get(a)
        if va is not None:
            fam.check(tgt.has_cell(0, va), [CellRef(0, a)],
                      f"image object {va!r} not in target", tag="boundary")
    for f, (a, b) in src._hom_of[1].items():
        fam.check(f in m1, [CellRef(1, f)], "1-cell has no image", tag="gap")
        vf = m1.get(f)
        if vf is None:
            continue
        fam.eq([CellRef(1, f)], "image 1-cell boundary",
               lambda vf=vf: tgt.hom_key(1, vf), (m0.get(a), m0.get(b)), tag="boundary")
    for x in src.all_cells(2):
        fam.check(x in m2, [CellRef(2, x)], "2-cell has no image", tag="gap")
        vx = m2.get(x)
        if vx is None:
            continue
        _, s, t = src.two_boundary(x)
        fam.eq([CellRef(2, x)], "image 2-cell boundary",
               lambda vx=vx: tgt.two_boundary(vx)[1:], (m1.get(s), m1.get(t)), tag="boundary")
    for X in src.all_cells(3):
        fam.check(X in m3, [CellRef(3, X)], "3-cell has no image", tag="gap")
        vX = m3.get(X)
        if vX is None:
            continue
        _, s, t = src.three_boundary(X)
        fam.eq([CellRef(3, X)], "image 3-cell boundary",
               lambda vX=vX: tgt.three_boundary(vX)[1:], (m2.get(s), m2.get(t)), tag="boundary")
    for a in src.objects:
        ia = src.identity1.get(a)
        if a in m0 and ia is not None and ia in m1:
            fam.eq([CellRef(0, a)], "identity 1-cell preserved",
                   m1[ia], lambda a=a: tgt.id1(m0[a]), tag="identity")
        else:
            fam.skipped += 1
    for key, h in src.homs.items():
        for f, u in h.id2.items():
            if f in m1 and u in m2:
                fam.eq([CellRef(1, f)], "identity 2-cell preserved",
                       m2[u], lambda f=f: tgt.id2(m1[f]), tag="identity")
            else:
                fam.skipped += 1
        for x, v in h.id3.items():
            if x in m2 and v in m3:
                fam.eq([CellRef(2, x)], "identity 3-cell preserved",
                       m3[v], lambda x=x: tgt.id3(m2[x]), tag="identity")
            else:
                fam.skipped += 1
        for (y, x), z in h.otimes2.items():
            if y in m2 and x in m2 and z in m2:
                fam.eq([CellRef(2, y), CellRef(2, x)], "otimes2 preserved",
                       m2[z], lambda x=x, y=y: tgt.otimes2(m2[y], m2[x]), tag="compose")
            else:
                fam.skipped += 1
        for (Y, X), Z in h.circ3.items():
            if Y in m3 and X in m3 and Z in m3:
                fam.eq([CellRef(3, Y), CellRef(3, X)], "circ3 preserved",
                       m3[Z], lambda X=X, Y=Y: tgt.circ3(m3[Y], m3[X]), tag="compose")
            else:
                fam.skipped += 1
        for (Y, X), Z in h.otimes3.items():
            if Y in m3 and X in m3 and Z in m3:
                fam.eq([CellRef(3, Y), CellRef(3, X)], "otimes3 preserved",
                       m3[Z], lambda X=X, Y=Y: tgt.otimes3(m3[Y], m3[X]), tag="compose")
            else:
                fam.skipped += 1
    for table, side in ((src.whisker_post, "post"), (src.whisker_pre, "pre")):
        for (w, d, x), z in table.items():
            md = fun.maps.get(d, {})
            if w in m1 and x in md and z in md:
                fam.eq([CellRef(1, w), CellRef(d, x)], f"{side}-whisker preserved",
                       md[z],
                       lambda side=side, w=w, d=d, x=x, md=md: tgt.whisker(side, m1[w], d, md[x]),
                       tag="whisker")
            else:
                fam.skipped += 1
    for (xi, gamma), Z in src.sigma.items():
        if xi in m2 and gamma in m2 and Z in m3:
            fam.eq([CellRef(2, xi), CellRef(2, gamma)], "interchanger preserved",
                   m3[Z], lambda xi=xi, gamma=gamma: tgt.interchanger(m2[xi], m2[gamma]),
                   tag="sigma")
        else:
            fam.skipped += 1
    rep = AxiomReport()
    rep.checked, rep.skipped, rep.violations = fam.result()
    return rep.finish()


def check_weak_functor(fun: WeakFunctor) -> AxiomReport:
    """Hom-wise strictness plus validity of all comparison data."""
    fam = _Fam("weak")
    src, tgt = fun.source, fun.target
    m0, m1, m2, m3 = fun.maps[0], fun.maps[1], fun.maps[2], fun.maps[3]
    # cell totality and boundaries (same as strict)
    for a in src.objects:
        fam.check(a in m0, [CellRef(0, a)], "object has no image", tag="gap")
        va = m0.get(a)
        if va is not None:
            fam.check(tgt.has_cell(0, va), [CellRef(0, a)],
                      f"image object {va!r} not in target", tag="boundary")
    for f, (a, b) in src._hom_of[1].items():
        fam.check(f in m1, [CellRef(1, f)], "1-cell has no image", tag="gap")
        vf = m1.get(f)
        if vf is not None:
            fam.eq([CellRef(1, f)], "image 1-cell boundary",
                   lambda vf=vf: tgt.hom_key(1, vf), (m0.get(a), m0.get(b)), tag="boundary")
    for x in src.all_cells(2):
        fam.check(x in m2, [CellRef(2, x)], "2-cell has no image", tag="gap")
        vx = m2.get(x)
        if vx is not None:
            _, s, t = src.two_boundary(x)
            fam.eq([CellRef(2, x)], "image 2-cell boundary",
                   lambda vx=vx: tgt.two_boundary(vx)[1:], (m1.get(s), m1.get(t)), tag="boundary")
    for X in src.all_cells(3):
        fam.check(X in m3, [CellRef(3, X)], "3-cell has no image", tag="gap")
        vX = m3.get(X)
        if vX is not None:
            _, s, t = src.three_boundary(X)
            fam.eq([CellRef(3, X)], "image 3-cell boundary",
                   lambda vX=vX: tgt.three_boundary(vX)[1:], (m2.get(s), m2.get(t)), tag="boundary")
    # hom-wise strictness (no id1 / tensor1 / whisker / sigma preservation here)
    for key, h in src.homs.items():
        for f, u in h.id2.items():
            if f in m1 and u in m2:
                fam.eq([CellRef(1, f)], "identity 2-cell preserved",
                       m2[u], lambda f=f: tgt.id2(m1[f]), tag="identity")
            else:
                fam.skipped += 1
        for x, v in h.id3.items():
            if x in m2 and v in m3:
                fam.eq([CellRef(2, x)], "identity 3-cell preserved",
                       m3[v], lambda x=x: tgt.id3(m2[x]), tag="identity")
            else:
                fam.skipped += 1
        for (y, x), z in h.otimes2.items():
            if y in m2 and x in m2 and z in m2:
                fam.eq([CellRef(2, y), CellRef(2, x)], "otimes2 preserved",
                       m2[z], lambda x=x, y=y: tgt.otimes2(m2[y], m2[x]), tag="compose")
            else:
                fam.skipped += 1
        for (Y, X), Z in h.circ3.items():
            if Y in m3 and X in m3 and Z in m3:
                fam.eq([CellRef(3, Y), CellRef(3, X)], "circ3 preserved",
                       m3[Z], lambda X=X, Y=Y: tgt.circ3(m3[Y], m3[X]), tag="compose")
            else:
                fam.skipped += 1
        for (Y, X), Z in h.otimes3.items():
            if Y in m3 and X in m3 and Z in m3:
                fam.eq([CellRef(3, Y), CellRef(3, X)], "otimes3 preserved",
                       m3[Z], lambda X=X, Y=Y: tgt.otimes3(m3[Y], m3[X]), tag="compose")
            else:
                fam.skipped += 1
    # chi: one adjoint equivalence per composable pair
    for g in src.all_cells(1):
        for f in src.all_cells(1):
            if src.tgt1(f) != src.src1(g):
                continue
            refs = [CellRef(1, g), CellRef(1, f)]
            ae = fun.chi.get((g, f))
            fam.check(ae is not None, refs, "no chi entry", tag="gap")
            if ae is None:
                continue
            for p in check_adjoint_equivalence(tgt, ae):
                fam.bad(refs, f"chi: {p}", tag="chi")
            fam.eq(refs, "chi.fwd boundary",
                   lambda ae=ae: tgt.two_boundary(ae.fwd)[1:],
                   lambda g=g, f=f: (tgt.tensor1(m1[g], m1[f]), m1[src.tensor1(g, f)]),
                   tag="chi")
    # iota: one adjoint equivalence per object
    for a in src.objects:
        refs = [CellRef(0, a)]
        ae = fun.iota.get(a)
        fam.check(ae is not None, refs, "no iota entry", tag="gap")
        if ae is None:
            continue
        for p in check_adjoint_equivalence(tgt, ae):
            fam.bad(refs, f"iota: {p}", tag="iota")
        fam.eq(refs, "iota.fwd boundary",
               lambda ae=ae: tgt.two_boundary(ae.fwd)[1:],
               lambda a=a: (tgt.id2(tgt.id1(m0[a]))[0:0] or (tgt.id1(m0[a]), m1[src.id1(a)])),
               tag="iota")
    # chi naturality squares, one per adjacent pair of 2-cells
    for key_hi, hhi in src.homs.items():
        for key_lo, hlo in src.homs.items():
            if key_lo[1] != key_hi[0]:
                continue
            for sg, (g0, g1) in hhi.two_cells.items():
                for th, (f0, f1) in hlo.two_cells.items():
                    refs = [CellRef(2, sg), CellRef(2, th)]
                    entry = fun.chi_nat.get((sg, th))
                    fam.check(entry is not None, refs, "no chi_nat entry", tag="gap")
                    if entry is None:
                        continue
                    X, Y = entry
                    try:
                        hi = fun.chi[(g1, f1)]
                        lo = fun.chi[(g0, f0)]
                        star_tgt = tgt.star2(m2[sg], m2[th])
                        star_src = m2[src.star2(sg, th)]
                    except (KeyError, GrayError) as err:
                        fam.bad(refs, f"chi_nat prerequisites: {err}", tag="chinat")
                        continue
                    fam.eq(refs, "chi_nat square boundary",
                           lambda X=X: tgt.three_boundary(X)[1:],
                           lambda hi=hi, lo=lo, star_tgt=star_tgt, star_src=star_src:
                               (tgt.otimes2(hi.fwd, star_tgt), tgt.otimes2(star_src, lo.fwd)),
                           tag="chinat")
                    fam.eq(refs, "chi_nat mate boundary",
                           lambda Y=Y: tgt.three_boundary(Y)[1:],
                           lambda hi=hi, lo=lo, star_tgt=star_tgt, star_src=star_src:
                               (tgt.otimes2(hi.bwd, star_src), tgt.otimes2(star_tgt, lo.bwd)),
                           tag="chinat")
                    fam.check(tgt.invert3(X) is not None, refs, "chi_nat square not invertible",
                              tag="chinat")
                    fam.check(tgt.invert3(Y) is not None, refs, "chi_nat mate not invertible",
                              tag="chinat")
    # omega: associativity comparison per composable triple
    for h in src.all_cells(1):
        for g in src.all_cells(1):
            if src.tgt1(g) != src.src1(h):
                continue
            for f in src.all_cells(1):
                if src.tgt1(f) != src.src1(g):
                    continue
                refs = [CellRef(1, h), CellRef(1, g), CellRef(1, f)]
                X = fun.omega.get((h, g, f))
                fam.check(X is not None, refs, "no omega entry", tag="gap")
                if X is None:
                    continue
                try:
                    hg = src.tensor1(h, g)
                    gf = src.tensor1(g, f)
                    lhs = tgt.otimes2(fun.chi[(hg, f)].fwd,
                                      tgt.whisker("pre", m1[f], 2, fun.chi[(h, g)].fwd))
                    rhs = tgt.otimes2(fun.chi[(h, gf)].fwd,
                                      tgt.whisker("post", m1[h], 2, fun.chi[(g, f)].fwd))
                except (KeyError, GrayError) as err:
                    fam.bad(refs, f"omega prerequisites: {err}", tag="omega")
                    continue
                fam.eq(refs, "omega boundary",
                       lambda X=X: tgt.three_boundary(X)[1:], (lhs, rhs), tag="omega")
                fam.check(tgt.invert3(X) is not None, refs, "omega not invertible", tag="omega")
    # gamma / delta: unit comparisons per 1-cell
    for f, (a, b) in src._hom_of[1].items():
        refs = [CellRef(1, f)]
        X = fun.gamma.get(f)
        fam.check(X is not None, refs, "no gamma entry", tag="gap")
        if X is not None:
            try:
                lhs = tgt.otimes2(fun.chi[(src.id1(b), f)].fwd,
                                  tgt.whisker("pre", m1[f], 2, fun.iota[b].fwd))
                rhs = tgt.id2(m1[f])
            except (KeyError, GrayError) as err:
                fam.bad(refs, f"gamma prerequisites: {err}", tag="gamma")
            else:
                fam.eq(refs, "gamma boundary",
                       lambda X=X: tgt.three_boundary(X)[1:], (lhs, rhs), tag="gamma")
                fam.check(tgt.invert3(X) is not None, refs, "gamma not invertible", tag="gamma")
        Y = fun.delta.get(f)
        fam.check(Y is not None, refs, "no delta entry", tag="gap")
        if Y is not None:
            try:
                lhs = tgt.id2(m1[f])
                rhs = tgt.otimes2(fun.chi[(f, src.id1(a))].fwd,
                                  tgt.whisker("post", m1[f], 2, fun.iota[a].fwd))
            except (KeyError, GrayError) as err:
                fam.bad(refs, f"delta prerequisites: {err}", tag="delta")
            else:
                fam.eq(refs, "delta boundary",
                       lambda Y=Y: tgt.three_boundary(Y)[1:], (lhs, rhs), tag="delta")
                fam.check(tgt.invert3(Y) is not None, refs, "delta not invertible", tag="delta")
    rep = AxiomReport()
    rep.checked, rep.skipped, rep.violations = fam.result()
    return rep.finish()
