"""Maximally additively disjoint (MAD) pair families in Z_m.

A family of pairs (a_i, b_i) is additively disjoint when all the entries and
all the sums a_i + b_i are distinct as group elements.  Z_m admits floor(m/3)
such pairs unless m = 6 mod 12, where the maximum drops by one.

The generating idea: pick half of the pairs among the positive representatives
by walking outward from an axis near m/4 (each pair straddles the axis, so the
sums sweep fresh values just above 2*alpha while the entries sweep values
below it), take the negatives of those pairs for the other half, and finish
with one or two special pairs that mop up the extremes.  What is implemented
is the resulting closed form keyed by the residue r = m mod 12; every value is
expressed in centered representatives S = {-floor((m-1)/2), ..., floor(m/2)},
inside which all the arithmetic happens without wraparound.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import cos, pi, sin
from typing import FrozenSet, List, Optional, Sequence, Tuple

from .groups import centered, centered_range, uncentered

Pair = Tuple[int, int]


@dataclass(frozen=True)
class MadPair:
    """One additively disjoint pair in centered representatives."""

    a: int
    b: int
    sum: int


@dataclass(frozen=True)
class MadFamily:
    m: int
    mu: int
    pairs: Tuple[MadPair, ...]
    case: str

    def as_pairs(self) -> List[Pair]:
        return [(p.a, p.b) for p in self.pairs]

    def residue_pairs(self) -> List[Pair]:
        return [(p.a % self.m, p.b % self.m) for p in self.pairs]


@dataclass(frozen=True)
class DisjointnessReport:
    ok: bool
    witness: Optional[str] = None


def alpha(m: int) -> float:
    """The near-m/4 axis the pair construction is organized around.

    Integer for r = m mod 12 in 0..5 (nearest integer to m/4, ties up),
    floor(m/4) for r in {6, 7}, and the nearest half-integer to m/4 (ties up)
    for r in 8..11.
    """
    if m < 1:
        raise ValueError("modulus must be >= 1")
    r = m % 12
    quarter = m / 4
    if r in (0, 1, 2, 3, 4, 5):
        value = float(int(quarter + 0.5))
    elif r in (6, 7):
        value = float(m // 4)
    else:
        # Half-integers are odd multiples of 1/2; pick the nearest, ties up.
        value = int(quarter) + 0.5
        if quarter - int(quarter) > 0.5:
            value += 1.0
    return value


def expected_family_size(m: int) -> int:
    """floor(m/3), minus one exactly when m = 6 mod 12."""
    return m // 3 - (1 if m % 12 == 6 else 0)


def _case1(n: int) -> List[Pair]:
    # r in {0, 1}; mu = 4n.
    pos = [(2 * n - 2 * i, 2 * n + i) for i in range(1, n)]
    pos += [(2 * i - 2 * n + 1, 6 * n - i - 1) for i in range(n, 2 * n)]
    pairs = pos + [(-a, -b) for a, b in pos]
    if n >= 1:
        pairs.append((-3 * n, 6 * n))
        pairs.append((-2 * n, 2 * n))
    return pairs


def _case2(n: int) -> List[Pair]:
    # r in {2, 3, 4, 5}; mu = 4n + 1 (the r = 2 caller drops one pair).
    pos = [(2 * n - 2 * i + 2, 2 * n + i) for i in range(1, n + 1)]
    pos += [(2 * i - 2 * n - 1, 6 * n - i + 2) for i in range(n + 1, 2 * n + 1)]
    pairs = pos + [(-a, -b) for a, b in pos]
    pairs.append((-3 * n - 1, 3 * n + 1))
    return pairs


def _case3(n: int) -> List[Pair]:
    # r in {6, 7}; mu = 4n + 2 (the r = 6 caller drops the final pair).
    pos = [(2 * n - 2 * i + 2, 2 * n + i) for i in range(1, n + 1)]
    pos += [(2 * i - 2 * n - 1, 6 * n - i + 2) for i in range(n + 1, 2 * n + 1)]
    pairs = pos + [(-a, -b) for a, b in pos]
    pairs.append((-3 * n - 1, 6 * n + 2))
    pairs.append((-6 * n - 3, 6 * n + 3))
    return pairs


def _case4(n: int) -> List[Pair]:
    # r in {8, 9, 10, 11}; mu = 4n + 3 (the r = 8 caller drops one pair).
    pos = [(2 * n - 2 * i + 3, 2 * n + i + 1) for i in range(1, n + 2)]
    pos += [(2 * i - 2 * n - 2, 6 * n - i + 5) for i in range(n + 2, 2 * n + 2)]
    pairs = pos + [(-a, -b) for a, b in pos]
    pairs.append((-5 * n - 4, 5 * n + 4))
    return pairs


def mad_pairs(m: int) -> MadFamily:
    """The closed-form maximal additively disjoint family for Z_m.

    Returns floor(m/3) pairs, or floor(m/3) - 1 when m = 6 mod 12; all entries
    and sums are centered representatives and stay inside S.
    """
    if m < 1:
        raise ValueError("modulus must be >= 1")
    if m < 3:
        return MadFamily(m, m // 3, (), "empty")
    n, r = divmod(m, 12)
    if r in (0, 1):
        pairs, case = _case1(n), "case1"
    elif r in (2, 3, 4, 5):
        pairs, case = _case2(n), "case2"
        if r == 2:
            # The dropped pair's sum would collide with an existing sum mod m.
            pairs = [p for p in pairs if p != (-2 * n + 1, -4 * n - 2)]
            case = "case2-r2"
    elif r in (6, 7):
        pairs, case = _case3(n), "case3"
        if r == 6:
            # (-m/2, m/2) degenerates mod m; the family tops out at mu - 1.
            pairs = pairs[:-1]
            case = "case3-r6"
    else:
        pairs, case = _case4(n), "case4"
        if r == 8:
            case = "case4-r8"
            drop = (-2 * n, -4 * n - 4)
            if drop in pairs:
                pairs = [p for p in pairs if p != drop]
            else:
                # n = 0: the colliding pair is the final self-negative one.
                pairs = pairs[:-1]
    mad = tuple(MadPair(a, b, centered(m, a + b)) for a, b in pairs)
    family = MadFamily(m, m // 3, mad, case)
    report = verify_additively_disjoint(family.as_pairs(), m)
    if not report.ok:  # transcription errors must fail loudly
        raise RuntimeError(f"closed-form family invalid for m={m}: {report.witness}")
    if len(mad) != expected_family_size(m):
        raise RuntimeError(
            f"closed-form family for m={m} has {len(mad)} pairs, "
            f"expected {expected_family_size(m)}"
        )
    return family


def verify_additively_disjoint(pairs: Sequence[Pair], m: int) -> DisjointnessReport:
    """Check that all entries and sums are distinct elements of Z_m."""
    seen = {}
    for i, (a, b) in enumerate(pairs):
        for role, value in (("a", a), ("b", b), ("sum", a + b)):
            residue = value % m
            if residue in seen:
                j, prior_role = seen[residue]
                return DisjointnessReport(
                    ok=False,
                    witness=(
                        f"pair {i} {role}={value} collides with "
                        f"pair {j} {prior_role} (= {residue} mod {m})"
                    ),
                )
            seen[residue] = (i, role)
    return DisjointnessReport(ok=True)


def disjoint_pairs_in_set(
    allowed: FrozenSet[int] | set,
    m: int,
    target_count: int,
    node_budget: int = 200_000,
) -> Optional[List[Pair]]:
    """Find additively disjoint pairs whose entries and sums all lie in `allowed`.

    `allowed` is a set of centered representatives for Z_m.  Candidate pairs
    are tried largest-sum first with backtracking; pairs are consumed in a
    fixed order so no permutation of one family is explored twice.  Returns
    None when no family exists within the node budget.
    """
    s_range = set(centered_range(m))
    allowed = set(allowed)
    if not allowed <= s_range:
        raise ValueError("allowed set must consist of centered representatives")
    if target_count == 0:
        return []
    members = sorted(allowed)
    candidates = []
    for i, a in enumerate(members):
        for b in members[i + 1 :]:
            s = centered(m, a + b)
            if s in allowed and s != a and s != b:
                candidates.append((a, b, s))
    candidates.sort(key=lambda t: (-t[2], t[0], t[1]))

    used: set = set()
    chosen: List[Pair] = []
    budget = [node_budget]

    def extend(start: int) -> bool:
        if len(chosen) == target_count:
            return True
        for k in range(start, len(candidates)):
            if budget[0] <= 0:
                return False
            budget[0] -= 1
            a, b, s = candidates[k]
            if a in used or b in used or s in used:
                continue
            if len(candidates) - k < target_count - len(chosen):
                return False
            used.update((a, b, s))
            chosen.append((a, b))
            if extend(k + 1):
                return True
            chosen.pop()
            used.difference_update((a, b, s))
        return False

    return chosen if extend(0) else None


@dataclass(frozen=True)
class FamilySearchResult:
    status: str  # "found" | "infeasible" | "budget_exhausted"
    pairs: Optional[List[Pair]] = None
    nodes: int = 0
    certificate: Optional[str] = None


def family_search(
    m: int,
    size: int,
    node_budget: int = 5_000_000,
    use_counting_certificate: bool = True,
) -> FamilySearchResult:
    """Independent exhaustive search for an additively disjoint family of `size` pairs.

    Searches over residues 0..m-1 directly, so it shares nothing with the
    closed-form construction.  When 3*size == m every element must be consumed
    (as an entry or a sum), making the problem an exact cover by triples
    {a, b, a+b}; in that case a cheap counting certificate is tried first (for
    even m, mechanically check that every candidate triple covers an even
    number of odd residues, so an odd number of odd residues is a proof of
    infeasibility), then exact-cover DFS.  Status "infeasible" is only
    reported after a certificate or a complete exhaustion.
    """
    if size == 0:
        return FamilySearchResult("found", [], 0)
    nodes = [0]

    if 3 * size == m:
        # Every element of Z_m must then be consumed as an entry or a sum, so
        # the problem is an exact cover by triples {a, b, a+b}.  Branch on the
        # element with the fewest remaining covering triples; the free-element
        # mask fully determines a subproblem, so failed masks are memoized.
        triple_pairs = {}
        for a in range(m):
            for b in range(a + 1, m):
                s = (a + b) % m
                if s != a and s != b:
                    mask = (1 << a) | (1 << b) | (1 << s)
                    triple_pairs.setdefault(mask, (a, b))
        if use_counting_certificate and m % 2 == 0:
            odd_mask = sum(1 << x for x in range(1, m, 2))
            odd_count = bin(odd_mask).count("1")
            every_triple_even = all(
                bin(mask & odd_mask).count("1") % 2 == 0 for mask in triple_pairs
            )
            if every_triple_even and odd_count % 2 == 1:
                return FamilySearchResult(
                    "infeasible",
                    None,
                    0,
                    certificate=(
                        f"all {len(triple_pairs)} candidate triples cover an even "
                        f"number of odd residues, but {odd_count} odd residues "
                        "would need covering"
                    ),
                )
        by_element: List[List[Tuple[int, Pair]]] = [[] for _ in range(m)]
        for mask, pair in sorted(triple_pairs.items(), key=lambda kv: kv[1]):
            for e in range(m):
                if mask >> e & 1:
                    by_element[e].append((mask, pair))
        chosen: List[Pair] = []
        failed: set = set()

        def cover(free_mask: int) -> Optional[bool]:
            if free_mask == 0:
                return True
            if free_mask in failed:
                return False
            nodes[0] += 1
            if nodes[0] > node_budget:
                return None
            best_opts = None
            probe = free_mask
            while probe:
                e = (probe & -probe).bit_length() - 1
                probe &= probe - 1
                opts = [
                    (mask, pair)
                    for mask, pair in by_element[e]
                    if mask & free_mask == mask
                ]
                if not opts:
                    failed.add(free_mask)
                    return False
                if best_opts is None or len(opts) < len(best_opts):
                    best_opts = opts
            for mask, pair in best_opts:
                chosen.append(pair)
                sub = cover(free_mask & ~mask)
                if sub is not False:
                    return sub
                chosen.pop()
            failed.add(free_mask)
            return False

        outcome = cover((1 << m) - 1)
        if outcome is True:
            return FamilySearchResult("found", list(chosen), nodes[0])
        if outcome is None:
            return FamilySearchResult("budget_exhausted", None, nodes[0])
        return FamilySearchResult("infeasible", None, nodes[0])

    candidates = []
    for a in range(m):
        for b in range(a + 1, m):
            s = (a + b) % m
            if s != a and s != b:
                candidates.append((a, b, s))
    used_set: set = set()
    chosen = []

    def extend(start: int) -> Optional[bool]:
        if len(chosen) == size:
            return True
        for k in range(start, len(candidates)):
            nodes[0] += 1
            if nodes[0] > node_budget:
                return None
            a, b, s = candidates[k]
            if a in used_set or b in used_set or s in used_set:
                continue
            used_set.update((a, b, s))
            chosen.append((a, b))
            sub = extend(k + 1)
            chosen.pop()
            used_set.difference_update((a, b, s))
            if sub is not False:
                return sub
        return False

    outcome = extend(0)
    if outcome is True:
        return FamilySearchResult("found", list(chosen), nodes[0])
    if outcome is None:
        return FamilySearchResult("budget_exhausted", None, nodes[0])
    return FamilySearchResult("infeasible", None, nodes[0])


def family_to_json_dict(family: MadFamily) -> dict:
    return {
        "m": family.m,
        "mu": family.mu,
        "count": len(family.pairs),
        "pairs": [[p.a, p.b, p.sum] for p in family.pairs],
        "case": family.case,
    }


def family_to_dot(family: MadFamily) -> str:
    """Chord-diagram DOT: centered representatives on a circle, one chord pair
    per MAD pair meeting at the node of their sum (render with neato)."""
    m = family.m
    values = list(centered_range(m))
    radius = max(2.0, m / 4.0)
    lines = ["graph mad {", "  layout=neato;", "  node [shape=circle];"]
    for k, v in enumerate(values):
        angle = 2 * pi * k / m
        x, y = radius * cos(angle), radius * sin(angle)
        lines.append(f'  n{uncentered(m, v)} [label="{v}", pos="{x:.3f},{y:.3f}!"];')
    for p in family.pairs:
        a, b, s = uncentered(m, p.a), uncentered(m, p.b), uncentered(m, p.sum)
        lines.append(f"  n{a} -- n{s};")
        lines.append(f"  n{b} -- n{s};")
    lines.append("}")
    return "\n".join(lines)
