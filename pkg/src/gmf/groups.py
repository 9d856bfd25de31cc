"""Permutations, concrete subgroups of S_n, and their action on index sequences.

Composition is function composition, (g * h)(i) = g(h(i)), and the action on a
sequence gamma is (g . gamma)_i = gamma_{g(i)}.  Under this pair of conventions
the column-selection identity L[:, g . gamma] = L @ P_g holds, and the orbit
map g -> g . gamma is constant exactly on right cosets G_gamma g, so the coset
representatives stored per orbit are one per such fiber (the paper-facing
"left coset" wording corresponds to the opposite composition convention).

Everything is brute force by design: element lists, conjugation by generators
for classes, exhaustive walks over Gamma_{m,n} for orbits.  Caps guard against
accidental blowups; the supported scale is |G| <= 8! and n**m <= ~2e7.
"""

from __future__ import annotations

import functools
import math
import re
from dataclasses import dataclass, field

import numpy as np

from .config import DEFAULT_ENUM_CAP, GROUP_ORDER_CAP
from .errors import (CycleParseError, DegreeMismatchError, EnumerationTooLargeError,
                     GroupTooLargeError)


@functools.total_ordering
class Permutation:
    """A permutation of {0, ..., n-1} stored as its image tuple."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")
        self.images = images

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(n))

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (g * h)(i) = g(h(i))
        if self.degree != other.degree:
            raise DegreeMismatchError(f"degrees {self.degree} and {other.degree} differ")
        return Permutation(tuple(self.images[j] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def sign(self) -> int:
        seen = [False] * self.degree
        sgn = 1
        for i in range(self.degree):
            if seen[i]:
                continue
            length = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = self.images[j]
                length += 1
            if length % 2 == 0:
                sgn = -sgn
        return sgn

    def cycle_type(self) -> tuple[int, ...]:
        """Cycle lengths, weakly decreasing, fixed points included."""
        seen = [False] * self.degree
        lengths = []
        for i in range(self.degree):
            if seen[i]:
                continue
            length = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = self.images[j]
                length += 1
            lengths.append(length)
        return tuple(sorted(lengths, reverse=True))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each rotated to start at its minimum, 0-based."""
        seen = [False] * self.degree
        out = []
        for i in range(self.degree):
            if seen[i] or self.images[i] == i:
                seen[i] = True
                continue
            cyc = []
            j = i
            while not seen[j]:
                seen[j] = True
                cyc.append(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        """1-based cycle notation; identity prints as "e"."""
        cycs = self.cycles()
        if not cycs:
            return "e"
        return "".join("(" + " ".join(str(i + 1) for i in cyc) + ")" for cyc in cycs)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other):
        return self.images < other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({self.cycle_string()!r}, n={self.degree})"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, n: int | None = None) -> Permutation:
    """Parse 1-based cycle notation like "(1 2 3)(4 5)"; "e" or "()" is the identity.

    Fixed points may be omitted; the degree is n when given, else the largest
    point mentioned.
    """
    s = text.strip()
    if n is not None and n < 1:
        raise CycleParseError(f"degree must be >= 1, got {n}")
    if s in ("e", "()", ""):
        if n is None:
            raise CycleParseError("identity needs an explicit degree")
        return Permutation.identity(n)
    body = _CYCLE_RE.sub("", s)
    if body.strip():
        raise CycleParseError(f"unbalanced or stray characters in {text!r}")
    cycles = []
    for grp in _CYCLE_RE.findall(s):
        pts = [p for p in re.split(r"[,\s]+", grp.strip()) if p]
        if not pts:
            continue
        try:
            cyc = [int(p) - 1 for p in pts]
        except ValueError:
            raise CycleParseError(f"non-integer point in {text!r}") from None
        if any(p < 0 for p in cyc):
            raise CycleParseError(f"points must be >= 1 in {text!r}")
        if len(set(cyc)) != len(cyc):
            raise CycleParseError(f"repeated point within a cycle in {text!r}")
        cycles.append(cyc)
    top = max((max(c) for c in cycles if c), default=-1) + 1
    degree = top if n is None else int(n)
    if top > degree:
        raise CycleParseError(f"point {top} exceeds degree {degree}")
    touched = set()
    for cyc in cycles:
        if touched & set(cyc):
            raise CycleParseError(f"cycles are not disjoint in {text!r}")
        touched |= set(cyc)
    images = list(range(degree))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            images[a] = b
    return Permutation(images)


class PermGroup:
    """A concrete subgroup of S_n with element list and conjugacy classes.

    Elements are sorted lexicographically by image tuple, so element 0 is
    always the identity.  `image_matrix` is the (|G|, n) int array of images,
    `class_of[k]` the conjugacy class index of element k, and classes are
    sorted by their lexicographically smallest member (class 0 = {e}).
    """

    def __init__(self, n: int, elements, generators, name: str | None = None):
        self.n = int(n)
        self.elements: list[Permutation] = sorted(elements)
        self.generators: list[Permutation] = list(generators)
        self.name = name
        if not self.elements or self.elements[0] != Permutation.identity(self.n):
            raise ValueError("element list must contain the identity")
        if math.factorial(self.n) % len(self.elements) != 0:
            raise ValueError("order does not divide n! (closure is broken)")
        self.index = {g.images: k for k, g in enumerate(self.elements)}
        self.image_matrix = np.array([g.images for g in self.elements], dtype=np.intp)
        self._build_classes()
        self._orbit_cache: dict = {}

    def _build_classes(self):
        order = len(self.elements)
        class_of = np.full(order, -1, dtype=np.intp)
        classes: list[list[int]] = []
        gen_idx = [self.index[g.images] for g in self.generators]
        for start in range(order):
            if class_of[start] >= 0:
                continue
            cid = len(classes)
            members = [start]
            class_of[start] = cid
            frontier = [start]
            while frontier:
                k = frontier.pop()
                gk = self.elements[k]
                for gi in gen_idx:
                    g = self.elements[gi]
                    conj = g * gk * g.inverse()
                    j = self.index[conj.images]
                    if class_of[j] < 0:
                        class_of[j] = cid
                        members.append(j)
                        frontier.append(j)
            classes.append(sorted(members))
        self.class_of = class_of
        self.classes = classes
        self.class_reps = [self.elements[c[0]] for c in classes]
        self.class_sizes = np.array([len(c) for c in classes], dtype=np.intp)

    @property
    def order(self) -> int:
        return len(self.elements)

    def identity(self) -> Permutation:
        return self.elements[0]

    def __contains__(self, g: Permutation) -> bool:
        return getattr(g, "images", None) in self.index

    def __eq__(self, other):
        return (isinstance(other, PermGroup) and self.n == other.n
                and len(self.elements) == len(other.elements)
                and self.index.keys() == other.index.keys())

    def __hash__(self):
        return hash((self.n, len(self.elements)))

    def __repr__(self):
        label = self.name or "group"
        return f"PermGroup({label}, n={self.n}, order={self.order})"

    def element_set(self) -> frozenset:
        return frozenset(self.index.keys())


def generate_group(n: int, gens, name: str | None = None,
                   max_order: int = GROUP_ORDER_CAP) -> PermGroup:
    """Breadth-first closure of the generators."""
    gens = [g if isinstance(g, Permutation) else parse_cycles(g, n) for g in gens]
    for g in gens:
        if g.degree != n:
            raise DegreeMismatchError(f"generator degree {g.degree} != {n}")
    e = Permutation.identity(n)
    seen = {e.images: e}
    frontier = [e]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                p = g * h
                if p.images not in seen:
                    if len(seen) >= max_order:
                        raise GroupTooLargeError(f"closure exceeds cap {max_order}")
                    seen[p.images] = p
                    nxt.append(p)
        frontier = nxt
    return PermGroup(n, list(seen.values()), gens, name=name)


def symmetric(n: int) -> PermGroup:
    if math.factorial(n) > GROUP_ORDER_CAP:
        raise GroupTooLargeError(f"S_{n} exceeds the order cap")
    gens = [] if n == 1 else [parse_cycles("(1 2)", n)]
    if n > 2:
        gens.append(Permutation(tuple(range(1, n)) + (0,)))
    return generate_group(n, gens, name=f"S_{n}")


def alternating(n: int) -> PermGroup:
    if math.factorial(n) // 2 > GROUP_ORDER_CAP:
        raise GroupTooLargeError(f"A_{n} exceeds the order cap")
    if n <= 2:
        return generate_group(n, [], name=f"A_{n}")
    gens = [parse_cycles(f"(1 2 {k})", n) for k in range(3, n + 1)]
    return generate_group(n, gens, name=f"A_{n}")


def cyclic(n: int) -> PermGroup:
    gens = [] if n == 1 else [Permutation(tuple(range(1, n)) + (0,))]
    return generate_group(n, gens, name=f"C_{n}")


def dihedral(n: int) -> PermGroup:
    """Symmetries of the n-gon on vertices 1..n (order 2n), n >= 3."""
    if n < 3:
        raise ValueError("dihedral group needs n >= 3")
    rot = Permutation(tuple(range(1, n)) + (0,))
    ref = Permutation(tuple(n - 1 - i for i in range(n)))
    return generate_group(n, [rot, ref], name=f"D_{n}")


def klein() -> PermGroup:
    return generate_group(4, ["(1 2)(3 4)", "(1 3)(2 4)"], name="Klein")


def young(parts) -> PermGroup:
    """Young subgroup S_p1 x S_p2 x ... embedded on consecutive blocks."""
    parts = [int(p) for p in parts]
    if any(p < 1 for p in parts):
        raise ValueError("block sizes must be >= 1")
    n = sum(parts)
    gens = []
    offset = 0
    for p in parts:
        for i in range(offset, offset + p - 1):
            images = list(range(n))
            images[i], images[i + 1] = images[i + 1], images[i]
            gens.append(Permutation(images))
        offset += p
    label = "Young:[" + ",".join(str(p) for p in parts) + "]"
    return generate_group(n, gens, name=label)


def trivial(n: int) -> PermGroup:
    return generate_group(n, [], name=f"E_{n}")


# ---------------------------------------------------------------------------
# action on sequences


def act(g: Permutation, gamma) -> tuple[int, ...]:
    """(g . gamma)_i = gamma_{g(i)}; length of gamma must equal the degree."""
    gamma = tuple(gamma)
    if len(gamma) != g.degree:
        raise DegreeMismatchError(f"degree {g.degree} vs sequence length {len(gamma)}")
    return tuple(gamma[g.images[i]] for i in range(g.degree))


def stabilizer(group: PermGroup, gamma) -> list[Permutation]:
    """All g in G with g . gamma = gamma; always contains the identity."""
    gamma = tuple(gamma)
    idx = _stabilizer_indices(group, gamma)
    return [group.elements[k] for k in idx]


def _extended_image_matrix(group: PermGroup, m: int) -> np.ndarray:
    """Images acting on positions 0..m-1, identity beyond the group degree."""
    if m == group.n:
        return group.image_matrix
    if m > group.n:
        ext = np.tile(np.arange(m, dtype=np.intp), (group.order, 1))
        ext[:, : group.n] = group.image_matrix
        return ext
    moved = np.any(group.image_matrix != np.arange(group.n), axis=0)
    if np.any(moved[m:]):
        raise DegreeMismatchError(
            f"group of degree {group.n} moves points beyond length {m}")
    return group.image_matrix[:, :m]


def _stabilizer_indices(group: PermGroup, gamma: tuple[int, ...]) -> np.ndarray:
    e = _extended_image_matrix(group, len(gamma))
    garr = np.asarray(gamma, dtype=np.intp)
    hits = np.all(garr[e] == garr, axis=1)
    return np.nonzero(hits)[0]


@dataclass
class OrbitData:
    """One orbit of G on Gamma_{m,n}, with stabilizer and fiber representatives.

    `coset_reps[k]` is the lexicographically smallest g with g . representative
    = orbit[k]; the fibers {g : g . rep = omega} are the cosets stabilizer * g,
    and g -> g . representative maps coset_reps bijectively onto the orbit.
    """
    representative: tuple[int, ...]
    orbit: list[tuple[int, ...]]
    stabilizer_indices: np.ndarray
    coset_rep_indices: np.ndarray
    group: PermGroup = field(repr=False)

    @property
    def stabilizer(self) -> list[Permutation]:
        return [self.group.elements[k] for k in self.stabilizer_indices]

    @property
    def coset_reps(self) -> list[Permutation]:
        return [self.group.elements[k] for k in self.coset_rep_indices]

    def random_coset_reps(self, rng) -> list[Permutation]:
        """One arbitrary element per fiber: s * c with s random in the stabilizer."""
        stab = self.stabilizer
        return [stab[rng.integers(len(stab))] * c for c in self.coset_reps]


def iter_orbits(group: PermGroup, m: int, alphabet: int | None = None,
                cap: int = DEFAULT_ENUM_CAP):
    """Stream the orbits of G on Gamma_{m,alphabet} in lexicographic order.

    Yields (representative, members, stabilizer_indices, coset_rep_indices)
    with members as an (orbit_size, m) int array sorted by sequence code.
    Sequences are walked by their base-`alphabet` code, so each orbit is found
    at its lexicographically smallest member.
    """
    alphabet = group.n if alphabet is None else int(alphabet)
    total = alphabet ** m
    if total > cap:
        raise EnumerationTooLargeError(f"{alphabet}**{m} = {total} exceeds cap {cap}")
    e = _extended_image_matrix(group, m)
    powers = alphabet ** np.arange(m - 1, -1, -1, dtype=np.int64)
    visited = np.zeros(total, dtype=bool)
    code = 0
    while code < total:
        if visited[code]:
            code += 1
            continue
        gamma = np.empty(m, dtype=np.intp)
        rem = code
        for i in range(m):
            gamma[i] = rem // powers[i]
            rem = rem % powers[i]
        images = gamma[e]                       # (|G|, m)
        codes = images @ powers                 # (|G|,)
        member_codes, first_idx = np.unique(codes, return_index=True)
        visited[member_codes] = True
        stab_idx = np.nonzero(codes == code)[0]
        members = images[first_idx]
        yield tuple(int(x) for x in gamma), members, stab_idx, first_idx
        code += 1


def orbit_decomposition(group: PermGroup, m: int, alphabet: int | None = None,
                        cap: int = DEFAULT_ENUM_CAP) -> list[OrbitData]:
    """Materialized orbit partition of Gamma_{m,n}; cached on the group."""
    alphabet = group.n if alphabet is None else int(alphabet)
    key = (m, alphabet)
    if key in group._orbit_cache:
        return group._orbit_cache[key]
    out = []
    for rep, members, stab_idx, coset_idx in iter_orbits(group, m, alphabet, cap):
        orbit = [tuple(int(x) for x in row) for row in members]
        out.append(OrbitData(representative=rep, orbit=orbit,
                             stabilizer_indices=stab_idx,
                             coset_rep_indices=coset_idx, group=group))
    group._orbit_cache[key] = out
    return out


def right_coset_reps_in_sn(group: PermGroup,
                           cap: int = GROUP_ORDER_CAP) -> list[Permutation]:
    """Lexicographically smallest representative of each coset G sigma in S_n.

    The identity represents G itself.  Requires n! enumerable (n <= 8).
    """
    n = group.n
    if math.factorial(n) > cap:
        raise EnumerationTooLargeError(f"{n}! exceeds cap {cap}")
    import itertools
    reps = []
    covered = set()
    for images in itertools.permutations(range(n)):
        if images in covered:
            continue
        sigma = Permutation(images)
        reps.append(sigma)
        for g in group.elements:
            covered.add((g * sigma).images)
    assert len(reps) * group.order == math.factorial(n)
    return reps


def all_subgroups(group: PermGroup) -> list[PermGroup]:
    """Every subgroup, by closing cyclic subgroups under pairwise extension.

    Exponential in principle; fine for |G| <= 120 which is all the artifact
    needs (subgroup sweeps of S_4 and S_5).
    """
    e = group.identity()
    elem_by_images = {g.images: g for g in group.elements}

    def close(seed: frozenset) -> frozenset:
        members = dict.fromkeys(seed)
        frontier = list(seed)
        gens = [elem_by_images[s] for s in seed]
        while frontier:
            h = frontier.pop()
            hp = elem_by_images[h]
            for g in gens:
                p = (g * hp).images
                if p not in members:
                    members[p] = None
                    frontier.append(p)
        return frozenset(members)

    cyclics = set()
    for g in group.elements:
        sub = [g]
        while sub[-1] != e:
            sub.append(sub[-1] * g)
        cyclics.add(frozenset(p.images for p in sub))
    known = {frozenset([e.images])} | cyclics
    worklist = list(known)
    while worklist:
        h = worklist.pop()
        for c in cyclics:
            if c <= h:
                continue
            j = close(h | c)
            if j not in known:
                known.add(j)
                worklist.append(j)
    out = []
    for members in sorted(known, key=lambda s: (len(s), sorted(s))):
        elems = [elem_by_images[imgs] for imgs in members]
        gens = [g for g in elems if g != e]
        out.append(PermGroup(group.n, elems, gens[: max(1, len(gens))],
                             name=f"subgroup<{len(elems)}>"))
    return out
