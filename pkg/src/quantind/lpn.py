"""The transfer map L(p, n) via the breakpoint-greedy assignment.

Given lambda < 0 (all prefix sums strictly negative, length p), the map
produces mu >= 0 of length n by water-filling an n x p matrix eta of weights
in [0, 1] under cumulative budget constraints at the breakpoint indices, and
returns -mu.  All arithmetic is exact rational.

`lpn_oracle` re-derives the result by enumerating the feasible constraint
structures (equality vs. saturated block at each breakpoint) and taking the
lexicographic maximum of the row sums; it shares no state with the greedy
path and is the validation oracle for small instances.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .vectors import DomainError, ExponentVector, strictly_dominated


@dataclass(frozen=True)
class BreakpointSequence:
    """Indices 1 <= j_1 < ... < j_m = p with strictly increasing budgets.

    budgets[s] is the cumulative cap -sum(lambda[:j_s]) active at j_s.
    """

    indices: tuple[int, ...]
    budgets: tuple[Fraction, ...]


@dataclass(frozen=True)
class EtaAssignment:
    """An n x p weight matrix witnessing an L(p,n) value."""

    eta: tuple[tuple[Fraction, ...], ...]
    block_structure: BreakpointSequence
    cases: tuple[str, ...]  # "ar2" (cumulative equality) or "ar3" (all ones)

    @property
    def mu(self) -> tuple[Fraction, ...]:
        return tuple(sum(row, Fraction(0)) for row in self.eta)


@dataclass(frozen=True)
class LpnResult:
    mu: ExponentVector
    output: ExponentVector
    witness: EtaAssignment


def breakpoints(lam: ExponentVector, p: int | None = None) -> BreakpointSequence:
    """Greatest-index minimizers of the running caps -sum(lambda[:j]).

    j_1 is the greatest index attaining the minimum of -sum(lambda[:j]) over
    j in [1, p]; each later j_{s+1} is the greatest minimizer over
    [j_s + 1, p].  The recursion always terminates with j_m = p and the
    budgets strictly increase.
    """
    p = _check_dims(lam, p)
    caps = [-s for s in lam.prefix_sums()]  # caps[j-1] = -sum(lambda[:j])
    indices: list[int] = []
    budgets: list[Fraction] = []
    lo = 0
    while lo < p:
        best = min(caps[lo:])
        j = max(i for i in range(lo, p) if caps[i] == best) + 1  # 1-based
        indices.append(j)
        budgets.append(caps[j - 1])
        lo = j
    return BreakpointSequence(tuple(indices), tuple(budgets))


def greedy_eta(lam: ExponentVector, p: int | None, n: int) -> EtaAssignment:
    """Row-major water filling of the blocks between consecutive breakpoints.

    Within a block (j_{s-1}, j_s] of width w, the remaining cumulative budget
    R is spread over rows 1, 2, ... in order, each row taking min(w, rest),
    columns filled left to right.  If the whole block at weight one sits
    strictly under budget (n*w < R) the block is saturated instead and the
    slack carries into later blocks.
    """
    p = _check_dims(lam, p)
    if n < 1:
        raise DomainError("n must be >= 1")
    bps = breakpoints(lam, p)
    eta = [[Fraction(0)] * p for _ in range(n)]
    cases: list[str] = []
    assigned = Fraction(0)
    prev = 0
    for j, budget in zip(bps.indices, bps.budgets):
        w = j - prev
        remaining = budget - assigned
        if n * w < remaining:
            for k in range(n):
                for i in range(prev, j):
                    eta[k][i] = Fraction(1)
            assigned += n * w
            cases.append("ar3")
        else:
            rest = remaining
            for k in range(n):
                if rest == 0:
                    break
                take = min(Fraction(w), rest)
                left = take
                for i in range(prev, j):
                    cell = min(Fraction(1), left)
                    eta[k][i] = cell
                    left -= cell
                    if left == 0:
                        break
                rest -= take
            assigned = budget
            cases.append("ar2")
        prev = j
    return EtaAssignment(
        tuple(tuple(row) for row in eta), bps, tuple(cases)
    )


def lpn(lam: ExponentVector, p: int | None, n: int) -> LpnResult:
    """L(p,n)(lambda) = -mu with the greedy witness attached."""
    witness = greedy_eta(lam, p, n)
    mu = ExponentVector(witness.mu)
    return LpnResult(mu=mu, output=-mu, witness=witness)


def check_assignment(lam: ExponentVector, assignment: EtaAssignment) -> bool:
    """Re-verify the witness invariants independently of how it was built.

    Checks 0 <= eta <= 1, non-increasing row sums, and that each breakpoint
    carries either the cumulative equality or a fully saturated block with
    strict inequality.
    """
    eta = assignment.eta
    p = len(lam)
    if any(len(row) != p for row in eta):
        return False
    if any(not (0 <= cell <= 1) for row in eta for cell in row):
        return False
    mu = assignment.mu
    if any(mu[k] < mu[k + 1] for k in range(len(mu) - 1)):
        return False
    caps = [-s for s in lam.prefix_sums()]
    prev = 0
    for j in assignment.block_structure.indices:
        cum = sum(
            (eta[k][i] for k in range(len(eta)) for i in range(j)), Fraction(0)
        )
        if cum == caps[j - 1]:
            pass
        elif cum < caps[j - 1] and all(
            eta[k][i] == 1 for k in range(len(eta)) for i in range(prev, j)
        ):
            pass
        else:
            return False
        prev = j
    return True


def lpn_oracle(
    lam: ExponentVector, p: int | None, n: int, max_cells: int = 16
) -> ExponentVector:
    """Lexicographic maximization of mu over all admissible constraint choices.

    Each breakpoint block independently demands either cumulative equality
    with its budget or full saturation under strict inequality; the oracle
    enumerates every combination, keeps the feasible ones, and for each one
    maximizes (mu_1, mu_2, ...) lexicographically given the implied block
    totals.  Small instances only.
    """
    p = _check_dims(lam, p)
    if n < 1:
        raise DomainError("n must be >= 1")
    if p * n > max_cells:
        raise DomainError(f"oracle limited to {max_cells} cells, got {p * n}")
    bps = breakpoints(lam, p)
    m = len(bps.indices)
    widths = [
        j - prev for prev, j in zip((0,) + bps.indices[:-1], bps.indices)
    ]
    best: tuple[Fraction, ...] | None = None
    for combo in product(("eq", "sat"), repeat=m):
        totals: list[Fraction] = []
        cum = Fraction(0)
        feasible = True
        for choice, w, budget in zip(combo, widths, bps.budgets):
            if choice == "eq":
                t = budget - cum
                if t < 0 or t > n * w:
                    feasible = False
                    break
            else:
                t = Fraction(n * w)
                if cum + t >= budget:
                    feasible = False
                    break
            totals.append(t)
            cum += t
        if not feasible:
            continue
        mu = _lex_max_rows(totals, widths, n)
        if best is None or mu > best:
            best = mu
    if best is None:
        raise DomainError("no feasible constraint structure (lambda not < 0?)")
    return ExponentVector(-v for v in best)


def _lex_max_rows(
    totals: list[Fraction], widths: list[int], n: int
) -> tuple[Fraction, ...]:
    """Largest (mu_1, ..., mu_n) in lexicographic order given per-block totals.

    Row k takes min(width, what is left) from every block; cells are capped
    at one, so a row can take at most the block width.
    """
    rest = list(totals)
    mu = []
    for _ in range(n):
        row = Fraction(0)
        for s, w in enumerate(widths):
            take = min(Fraction(w), rest[s])
            rest[s] -= take
            row += take
        mu.append(row)
    return tuple(mu)


def _check_dims(lam: ExponentVector, p: int | None) -> int:
    if p is not None and p != len(lam):
        raise DomainError(f"lambda has length {len(lam)}, expected p={p}")
    if not strictly_dominated(lam):
        raise DomainError("lambda must satisfy lambda < 0 (all prefix sums negative)")
    return len(lam)
