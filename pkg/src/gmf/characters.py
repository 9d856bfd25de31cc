"""Class functions on permutation groups.

Two independent sources of irreducible characters:

* the Murnaghan-Nakayama rule for S_n, one character per partition, with the
  hook-length formula cross-checking every degree;
* the Dixon-Burnside class-algebra method for arbitrary small groups, run in
  floating point: simultaneous eigenvectors of the class multiplication
  matrices are extracted from a random linear combination, values within 1e-6
  of a Gaussian integer are snapped exactly, and the finished table must pass
  first and column orthogonality at 1e-8 or the extraction is retried.

Irrational character values (golden-ratio classes of A_5, roots of unity of
C_n) stay at full float precision; snapping them onto a fixed decimal grid
would poison the orthogonality residuals.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field

import numpy as np

from .config import make_rng
from .errors import (BadPartitionError, ElementNotInGroupError, GroupMismatchError,
                     GroupTooLargeError, ValidationFailedError)
from .groups import PermGroup, Permutation, symmetric


class CharacterFn:
    """A class function chi: G -> C stored on conjugacy class representatives."""

    def __init__(self, group: PermGroup, class_values, label: str = ""):
        self.group = group
        vals = np.asarray(class_values, dtype=np.complex128)
        if vals.shape != (len(group.classes),):
            raise ValueError(
                f"need one value per class ({len(group.classes)}), got {vals.shape}")
        self.class_values = vals
        self.label = label

    @property
    def degree(self) -> complex:
        return complex(self.class_values[0])  # class 0 is {e}

    def value(self, g: Permutation) -> complex:
        if g.images not in self.group.index:
            raise ElementNotInGroupError(f"{g!r} not in {self.group!r}")
        return complex(self.class_values[self.group.class_of[self.group.index[g.images]]])

    def by_element(self) -> np.ndarray:
        """Values aligned with the group's element list."""
        return self.class_values[self.group.class_of]

    def values_by_rep(self) -> dict[str, complex]:
        return {rep.cycle_string(): complex(v)
                for rep, v in zip(self.group.class_reps, self.class_values)}

    def __repr__(self):
        return f"CharacterFn({self.label or 'chi'}, degree={self.degree.real:g})"


def trivial_character(group: PermGroup) -> CharacterFn:
    return CharacterFn(group, np.ones(len(group.classes)), label="principal")


def sign_character(group: PermGroup) -> CharacterFn:
    """Restriction of the S_n sign to G; linear since sign is multiplicative."""
    vals = [rep.sign() for rep in group.class_reps]
    return CharacterFn(group, vals, label="sign")


def character_from_function(group: PermGroup, fn, label: str = "") -> CharacterFn:
    return CharacterFn(group, [fn(rep) for rep in group.class_reps], label=label)


def _check_same_group(chi: CharacterFn, psi: CharacterFn):
    if chi.group is not psi.group and chi.group != psi.group:
        raise GroupMismatchError("characters live on different groups")


def inner_product(chi: CharacterFn, psi: CharacterFn) -> complex:
    """(chi, psi)_G = (1/|G|) sum_g conj(chi(g)) psi(g), expanded over classes."""
    _check_same_group(chi, psi)
    sizes = chi.group.class_sizes
    tot = np.sum(sizes * np.conj(chi.class_values) * psi.class_values)
    return complex(tot / chi.group.order)


def restricted_inner_with_trivial(chi: CharacterFn, subgroup_elements) -> complex:
    """(chi, 1)_H = (1/|H|) sum_{h in H} chi(h) for H a subset of G (a stabilizer)."""
    elems = list(subgroup_elements)
    if not elems:
        raise ValueError("empty element list")
    return complex(sum(chi.value(h) for h in elems) / len(elems))


def is_linear(chi: CharacterFn, seed: int = 20160314) -> bool:
    """True iff degree 1; multiplicativity is then spot-checked on 10 pairs."""
    if abs(chi.degree - 1.0) > 1e-9:
        return False
    rng = make_rng(seed)
    g = chi.group
    for _ in range(10):
        a = g.elements[int(rng.integers(g.order))]
        b = g.elements[int(rng.integers(g.order))]
        lhs = chi.value(a * b)
        rhs = chi.value(a) * chi.value(b)
        if abs(lhs - rhs) > 1e-9:
            raise ValidationFailedError(
                f"degree-1 class function is not multiplicative at ({a}, {b})")
    return True


def decompose_character(lambda_fn: CharacterFn, table: list[CharacterFn],
                        tol: float = 1e-8):
    """Multiplicities m_i = (lambda, chi_i) and the is-a-character verdict.

    Returns (coefficients, is_character) where is_character means every
    coefficient is a non-negative integer within tol.
    """
    coeffs = [inner_product(lambda_fn, chi) for chi in table]
    ok = all(abs(c.imag) <= tol and abs(c.real - round(c.real)) <= tol
             and round(c.real) >= 0 for c in coeffs)
    return coeffs, ok


# ---------------------------------------------------------------------------
# Murnaghan-Nakayama


def check_partition(parts, n: int | None = None) -> tuple[int, ...]:
    parts = tuple(int(p) for p in parts)
    if any(p < 1 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise BadPartitionError(f"not a weakly decreasing positive partition: {parts}")
    if n is not None and sum(parts) != n:
        raise BadPartitionError(f"partition {parts} does not sum to {n}")
    return parts


def hook_length_degree(parts) -> int:
    parts = check_partition(parts)
    n = sum(parts)
    conj = [sum(1 for p in parts if p > j) for j in range(parts[0])] if parts else []
    deg = math.factorial(n)
    for i, p in enumerate(parts):
        for j in range(p):
            deg //= (p - j) + (conj[j] - i) - 1
    return deg


@functools.lru_cache(maxsize=None)
def _mn_value(parts: tuple[int, ...], cycle_type: tuple[int, ...]) -> int:
    """chi_lambda on the class of cycle type mu, by border-strip removal.

    Works on the beta-set (first-column hook lengths): removing a strip of
    length k moves one beta number down by k; the sign is the parity of the
    number of beta numbers jumped over.
    """
    if not cycle_type:
        return 1
    k = cycle_type[0]
    rest = cycle_type[1:]
    ell = len(parts)
    beta = [parts[i] + (ell - 1 - i) for i in range(ell)]
    beta_set = set(beta)
    total = 0
    for pos, b in enumerate(beta):
        c = b - k
        if c < 0 or c in beta_set:
            continue
        crossings = sum(1 for x in beta if c < x < b)
        new_beta = sorted((x for x in beta if x != b), reverse=True)
        new_beta.append(c)
        new_beta.sort(reverse=True)
        new_parts = tuple(x - (len(new_beta) - 1 - i) for i, x in enumerate(new_beta))
        new_parts = tuple(p for p in new_parts if p > 0)
        total += (-1) ** crossings * _mn_value(new_parts, rest)
    return total


def sn_irreducible(parts, n: int | None = None) -> CharacterFn:
    """The S_n irreducible labelled by a partition, via Murnaghan-Nakayama."""
    parts = check_partition(parts, n)
    n = sum(parts)
    if n > 8:
        raise GroupTooLargeError("Murnaghan-Nakayama path is capped at n = 8")
    group = symmetric(n)
    # sort cycle lengths descending so long strips peel first
    vals = [_mn_value(parts, rep.cycle_type()) for rep in group.class_reps]
    if vals[0] != hook_length_degree(parts):
        raise ValidationFailedError(
            f"MN degree {vals[0]} disagrees with hook-length {hook_length_degree(parts)}")
    return CharacterFn(group, vals, label=str(list(parts)))


def partitions_of(n: int):
    """All partitions of n, lexicographically decreasing."""
    if n == 0:
        yield ()
        return

    def rec(remaining, maxpart, prefix):
        if remaining == 0:
            yield tuple(prefix)
            return
        for p in range(min(maxpart, remaining), 0, -1):
            yield from rec(remaining - p, p, prefix + [p])

    yield from rec(n, n, [])


def sn_character_table(n: int) -> list[CharacterFn]:
    return [sn_irreducible(p) for p in partitions_of(n)]


# ---------------------------------------------------------------------------
# Dixon-Burnside


def _class_matrices(group: PermGroup) -> np.ndarray:
    """Structure constants: a[i, j, k] = #{(x, y) in C_i x C_j : x y = z_k}.

    Computed as #{x in C_i : x^{-1} z_k in C_j} for one fixed z_k per class.
    """
    r = len(group.classes)
    a = np.zeros((r, r, r), dtype=np.float64)
    for i, ci in enumerate(group.classes):
        inverses = [group.elements[x].inverse() for x in ci]
        for k, zk in enumerate(group.class_reps):
            for xinv in inverses:
                j = group.class_of[group.index[(xinv * zk).images]]
                a[i, j, k] += 1.0
    return a


def _raw_dixon_values(group: PermGroup, seed: int) -> np.ndarray:
    """One row per irreducible character, unsnapped, unsorted."""
    r = len(group.classes)
    if r == 1:
        return np.ones((1, 1), dtype=np.complex128)
    a = _class_matrices(group)
    # L_i acts on the class-sum basis: (L_i)[k, j] = a[i, j, k]
    mats = [a[i].T for i in range(r)]
    rng = make_rng(seed)
    combo = sum(float(t) * m for t, m in zip(rng.standard_normal(r), mats))
    eigvals, eigvecs = np.linalg.eig(combo)
    order = np.argsort(eigvals.real, kind="stable")
    sizes = group.class_sizes.astype(np.float64)
    rows = np.empty((r, r), dtype=np.complex128)
    for col, idx in enumerate(order):
        v = eigvecs[:, idx]
        if abs(v[0]) < 1e-12:
            raise ValidationFailedError("degenerate eigenvector (retry with a new seed)")
        v = v / v[0]  # normalize so the {e} coordinate is 1
        degree_sq = group.order / np.sum(np.abs(v) ** 2 / sizes)
        degree = np.sqrt(degree_sq.real)
        rows[col] = degree * v / sizes
    return rows


def _snap(values: np.ndarray, grid_tol: float = 1e-6) -> np.ndarray:
    """Snap entries to the nearest Gaussian integer when within grid_tol."""
    out = values.copy()
    re, im = out.real, out.imag
    re_round, im_round = np.round(re), np.round(im)
    re = np.where(np.abs(re - re_round) <= grid_tol, re_round, re)
    im = np.where(np.abs(im - im_round) <= grid_tol, im_round, im)
    return re + 1j * im


def _validate_table(group: PermGroup, rows: np.ndarray, tol: float = 1e-8):
    r = rows.shape[0]
    sizes = group.class_sizes.astype(np.float64)
    order = group.order
    gram = (rows * sizes) @ rows.conj().T / order  # (chi_j, chi_i) entries
    if np.max(np.abs(gram - np.eye(r))) > tol:
        raise ValidationFailedError("row orthogonality failed")
    col = rows.conj().T @ rows  # sum_i conj(chi_i(g)) chi_i(h)
    target = np.diag(order / sizes)
    if np.max(np.abs(col - target)) > tol:
        raise ValidationFailedError("column orthogonality failed")
    degrees = rows[:, 0]
    if np.max(np.abs(degrees.imag)) > 1e-9:
        raise ValidationFailedError("complex degree")
    ints = np.round(degrees.real)
    if np.max(np.abs(degrees.real - ints)) > 1e-6 or np.any(ints < 1):
        raise ValidationFailedError("degrees are not positive integers")
    if int(np.sum(ints ** 2)) != order:
        raise ValidationFailedError("sum of squared degrees != |G|")
    mags = np.abs(rows)
    if np.any(mags > degrees.real[:, None] + 1e-9):
        raise ValidationFailedError("|chi(g)| exceeds chi(e)")


def _sort_rows(rows: np.ndarray) -> np.ndarray:
    keys = [(float(row[0].real),
             tuple((round(v.real, 9), round(v.imag, 9)) for v in row))
            for row in rows]
    order = sorted(range(len(keys)), key=lambda i: keys[i])
    rows = rows[order]
    for i in range(rows.shape[0]):
        if np.allclose(rows[i], 1.0, atol=1e-9):
            rows[[0, i]] = rows[[i, 0]]
            break
    return rows


def character_table(group: PermGroup, max_classes: int = 64,
                    _seed: int = 727) -> list[CharacterFn]:
    """Complete irreducible character table via Dixon-Burnside.

    Deterministic for a given group; retries the random combination a few
    times before giving up, and never returns an unvalidated table.
    """
    if len(group.classes) > max_classes:
        raise GroupTooLargeError(
            f"{len(group.classes)} classes exceeds the cap {max_classes}")
    last = None
    for attempt in range(5):
        try:
            rows = _raw_dixon_values(group, seed=_seed + attempt)
            rows = _snap(rows)
            rows = np.round(rows.real * 1e12) / 1e12 + 1j * (np.round(rows.imag * 1e12) / 1e12)
            _validate_table(group, rows)
            rows = _sort_rows(rows)
            prefix = (group.name or "G") + "."
            return [CharacterFn(group, row, label=f"{prefix}chi{i}")
                    for i, row in enumerate(rows)]
        except ValidationFailedError as exc:
            last = exc
    raise ValidationFailedError(f"Dixon table extraction failed: {last}")
