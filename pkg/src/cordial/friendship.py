"""Cordial labelings of friendship graphs F_n over cyclic groups Z_m.

A friendship labeling keeps the central vertex at 0 (label shifting makes that
free) and lists the circumferential vertex pairs (x_i, y_i) per triangle, so
triangle i contributes radial edges x_i, y_i and circumferential edge
x_i + y_i.  The constructions below cover: uniform "addable blocks" of m (m
odd) or 2m (m even) triangles; prefixes of additively disjoint pair families
up to floor(m/3); closed-form append tables up to floor(m/2); a rescaled pair
family pushing to floor(2m/3); and a shift-based scheme covering everything up
to m when 3 | m.  The parity obstruction rules out F_n exactly when m, n are
even, m | 3n and 4 does not divide n.  Every construction re-checks its output
and repairs a failing append prefix by bounded completion search, so a broken
table can never escape silently.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .graphs import CordialityReport, Labeling, friendship, is_cordial
from .groups import FiniteAbelianGroup
from .mad import expected_family_size, mad_pairs
from .search import SearchConfig, search_cordial

TrianglePair = Tuple[int, int]

DEFAULT_SEARCH_BUDGET = 4_000_000


@dataclass(frozen=True)
class FriendshipLabeling:
    """Center-0 labeling of F_n over Z_m, one residue pair per triangle."""

    m: int
    triangles: Tuple[TrianglePair, ...]

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError("modulus must be >= 1")
        object.__setattr__(
            self,
            "triangles",
            tuple((x % self.m, y % self.m) for x, y in self.triangles),
        )

    @property
    def n(self) -> int:
        return len(self.triangles)

    def group(self) -> FiniteAbelianGroup:
        return FiniteAbelianGroup.cyclic(self.m)

    def to_labeling(self) -> Labeling:
        labels = [(0,)]
        for x, y in self.triangles:
            labels.append((x,))
            labels.append((y,))
        return Labeling(friendship(self.n), self.group(), tuple(labels))

    def verify(self) -> CordialityReport:
        return is_cordial(self.to_labeling())


@dataclass(frozen=True)
class ConstructionResult:
    status: str  # "constructed" | "obstructed" | "not_cordial" | "unknown"
    labeling: Optional[FriendshipLabeling] = None
    method: Optional[str] = None
    nodes: int = 0


class FriendshipConstructionError(RuntimeError):
    """A construction produced a non-cordial labeling it could not repair."""


def epsilon(m: int) -> int:
    """1 when m = 2k+1 with k even and 3 not dividing k, else 0."""
    if m % 2 == 0:
        raise ValueError("epsilon is defined for odd m")
    k = (m - 1) // 2
    return 1 if (k % 2 == 0 and k % 3 != 0) else 0


def obstruction(m: int, n: int) -> bool:
    """True iff F_n provably has no cordial labeling over Z_m: m and n even,
    m divides 3n, and 4 does not divide n (an edge-label parity contradiction)."""
    if m < 1 or n < 0:
        raise ValueError("need m >= 1 and n >= 0")
    return m % 2 == 0 and n % 2 == 0 and (3 * n) % m == 0 and n % 4 != 0


def uniform_block_odd(m: int) -> FriendshipLabeling:
    """F_m block for odd m: pairs (0,1),(2,3),...,(m-1,0),(1,2),...,(m-2,m-1).

    Distribution: vertex 0 three times, every other element twice; every edge
    label exactly three times.  Appending this block to any cordial labeling
    keeps it cordial.
    """
    if m % 2 == 0:
        raise ValueError("block of m triangles needs odd m")
    first = [(2 * i % m, (2 * i + 1) % m) for i in range((m + 1) // 2)]
    second = [(2 * i + 1, 2 * i + 2) for i in range((m - 1) // 2)]
    return FriendshipLabeling(m, tuple(first + second))


def uniform_block_even(m: int) -> FriendshipLabeling:
    """F_{2m} block for even m: pairs (i, i+1) then (i, i) for i in [0, m).

    Distribution: vertex 0 five times, every other element four times; every
    edge label exactly six times.
    """
    if m % 2 != 0:
        raise ValueError("block of 2m triangles needs even m")
    pairs = [(i, (i + 1) % m) for i in range(m)] + [(i, i) for i in range(m)]
    return FriendshipLabeling(m, tuple(pairs))


def mad_construction(m: int, j: int) -> FriendshipLabeling:
    """F_j from the first j additively disjoint pairs: all 2j+1 vertex labels
    and all 3j edge labels are distinct, so the labeling is cordial."""
    limit = expected_family_size(m)
    if not 0 <= j <= limit:
        raise ValueError(f"j={j} outside [0, {limit}] for m={m}")
    family = mad_pairs(m)
    return FriendshipLabeling(m, tuple((p.a, p.b) for p in family.pairs[:j]))


def half_construction(m: int, variant: str = "primary") -> FriendshipLabeling:
    """F_{floor(m/2)} for odd m = 2k+1, consecutive-pair style.

    The alternate variants place their doubled edge classes exactly on
    {+-(2+4i)} (k odd) or {0} united with {+-(2+4i)} (k even), which is the
    shape the two-thirds extension consumes.
    """
    if m % 2 == 0:
        raise ValueError("half construction needs odd m")
    if variant not in ("primary", "alternate"):
        raise ValueError(f"unknown variant {variant!r}")
    k = (m - 1) // 2
    pairs: List[TrianglePair]
    if k == 0:
        pairs = []
    elif variant == "primary":
        if k % 2 == 1:
            pairs = [(2 * i + 1, 2 * i + 2) for i in range(k)]
        else:
            pairs = [(1, m - 1)] + [(2 * i, 2 * i + 1) for i in range(1, k)]
    else:
        if k % 2 == 1:
            pairs = [(1, m - 1)] + [(2 * i, 2 * i + 1) for i in range(1, k)]
        else:
            pairs = [(1, m - 1), (2, m - 2)] + [
                (2 * i + 1, 2 * i + 2) for i in range(1, k - 1)
            ]
    return FriendshipLabeling(m, tuple(pairs))


def _checked_prefix_labeling(
    m: int,
    sequence: Sequence[TrianglePair],
    j: int,
    method: str,
    completion_budget: int = 500_000,
) -> FriendshipLabeling:
    """F_j from the first j entries of an append sequence, with repair.

    If the literal prefix is not cordial (append tables are only guaranteed in
    aggregate), retreat to the longest prefix from which a bounded completion
    search reaches a cordial F_j; determinism comes from the fixed retreat
    order and search order.
    """
    candidate = FriendshipLabeling(m, tuple(sequence[:j]))
    if candidate.verify().cordial:
        return candidate
    group = FiniteAbelianGroup.cyclic(m)
    target = friendship(j)
    for keep in range(j - 1, -1, -1):
        fixed: Dict[int, Tuple[int, ...]] = {0: (0,)}
        for t, (x, y) in enumerate(sequence[:keep]):
            fixed[2 * t + 1] = (x % m,)
            fixed[2 * t + 2] = (y % m,)
        result = search_cordial(
            target,
            group,
            SearchConfig(node_budget=completion_budget, fixed_labels=fixed),
        )
        if result.status == "found":
            labels = result.labeling.vertex_labels
            pairs = tuple(
                (labels[2 * t + 1][0], labels[2 * t + 2][0]) for t in range(j)
            )
            return FriendshipLabeling(m, pairs)
    raise FriendshipConstructionError(
        f"{method}: no cordial completion found for m={m}, j={j}"
    )


def _to_half_sequence(m: int) -> Tuple[List[TrianglePair], int]:
    """Append sequence and maximal triangle count for the to-half constructions."""
    n, r = divmod(m, 12)
    if r in (4, 6, 8, 10):
        raise ValueError(f"residue {r} mod 12 is not covered by the to-half tables")
    base = [(p.a, p.b) for p in mad_pairs(m).pairs]
    if r == 0:
        run_a = [(3 * n + i, -(4 * n - i)) for i in range(1, n)]
        run_b = [(5 * n - 1 + i, -(6 * n - i)) for i in range(1, n + 1)]
        seq = base + run_a + run_b + [(-6 * n, 3 * n)]
        bound = 6 * n
    elif r == 1:
        run_a = [(3 * n + i, -(4 * n - i)) for i in range(1, n)]
        run_b = [(5 * n - 1 + i, -(6 * n - i)) for i in range(1, n + 1)]
        seq = base + [(-6 * n, 3 * n)] + run_a + run_b
        bound = 6 * n
    elif r == 2:
        run_a = [(3 * n + 1 + i, -(4 * n + 2 - i)) for i in range(1, n + 1)]
        run_b = [(5 * n + 1 + i, -(6 * n + 1 - i)) for i in range(1, n)]
        seq = base + [(-2 * n + 1, -4 * n - 2)] + run_a + run_b
        bound = 6 * n  # floor(m/2) - 1
    elif r in (3, 5, 7):
        run_a = [(3 * n + 1 + i, -(6 * n + 2 - i)) for i in range(1, n + 1)]
        run_b = [(5 * n + 1 + i, -(4 * n + 2 - i)) for i in range(1, n + 1)]
        extra: List[TrianglePair] = []
        if r == 5:
            extra = [(6 * n + 2, -(6 * n + 2))]
        elif r == 7:
            extra = [(-(6 * n + 2), 3 * n + 1)]
        seq = base + extra + run_a + run_b
        bound = {3: 6 * n + 1, 5: 6 * n + 2, 7: 6 * n + 3}[r]
    else:  # r in (9, 11)
        run_a = [(3 * n + 2 + i, -(6 * n + 5 - i)) for i in range(1, n + 1)]
        run_b = [(5 * n + 4 + i, -(4 * n + 4 - i)) for i in range(1, n + 1)]
        extra = [(6 * n + 5, -(6 * n + 5))] if r == 11 else []
        seq = base + extra + run_a + run_b + [(4 * n + 3, -(3 * n + 3))]
        bound = 6 * n + 4 if r == 9 else 6 * n + 5
    return seq, bound


def to_half_construction(m: int, j: int) -> FriendshipLabeling:
    """F_j for 0 <= j <= floor(m/2) (one less when m = 2 mod 12), by appending
    engineered triangles to the additively disjoint base; residues 4, 6, 8, 10
    mod 12 are not covered."""
    seq, bound = _to_half_sequence(m)
    if not 0 <= j <= bound:
        raise ValueError(f"j={j} outside [0, {bound}] for m={m}")
    return _checked_prefix_labeling(m, seq, j, "to_half_construction")


def two_thirds_extras(m: int) -> List[TrianglePair]:
    """The extension triangles past floor(m/2): an additively disjoint family
    rescaled by the unit 4 so that all its edge labels avoid the doubled
    classes of the alternate half construction."""
    if m % 2 == 0:
        raise ValueError("needs odd m")
    k = (m - 1) // 2
    if k % 2 == 1:
        m1 = (m + 3) // 2
        pairs = [(p.a, p.b) for p in mad_pairs(m1).pairs]
    else:
        m1 = (m + 5) // 2
        pairs = [(p.a, p.b) for p in mad_pairs(m1).pairs if (p.a + p.b) % m1 != 0]
    return [((4 * a) % m, (4 * b) % m) for a, b in pairs]


def two_thirds_construction(m: int, j: int) -> FriendshipLabeling:
    """F_j for floor(m/2) <= j <= floor(2m/3) - epsilon(m), odd m."""
    if m % 2 == 0:
        raise ValueError("needs odd m")
    k = (m - 1) // 2
    j_max = (2 * m) // 3 - epsilon(m)
    if not k <= j <= j_max:
        raise ValueError(f"j={j} outside [{k}, {j_max}] for m={m}")
    seq = list(half_construction(m, "alternate").triangles) + two_thirds_extras(m)
    if len(seq) < j_max:
        raise FriendshipConstructionError(
            f"extension list too short for m={m}: {len(seq)} < {j_max}"
        )
    return _checked_prefix_labeling(m, seq, j, "two_thirds_construction")


def shift_circumferential(
    labeling: FriendshipLabeling, i0: int
) -> FriendshipLabeling:
    """Add i0 to every circumferential label, keeping the center at 0; radial
    edges shift by i0 and circumferential edges by 2*i0."""
    m = labeling.m
    return FriendshipLabeling(
        m, tuple(((x + i0) % m, (y + i0) % m) for x, y in labeling.triangles)
    )


def add(
    left: FriendshipLabeling, right: FriendshipLabeling
) -> FriendshipLabeling:
    """Concatenate two center-0 labelings into one of F_{n1+n2}."""
    if left.m != right.m:
        raise ValueError("labelings must share one modulus")
    return FriendshipLabeling(left.m, left.triangles + right.triangles)


def _div3_alternate(m: int) -> List[TrianglePair]:
    """F_{m/3} labeling using only non-multiples of 3 as circumferential labels."""
    t = m // 3
    return [(m - 1, 1)] + [(3 * i + 2, 3 * i + 4) for i in range(t - 1)]


def div3_range_construction(m: int, j: int) -> FriendshipLabeling:
    """F_j for 2m/3 <= j <= m when m is an odd multiple of 3.

    Two shifted copies of the alternate F_{m/3} (with the (0, +-2) triangles
    traded for two copies of (2, -2)) give F_{2m/3}; original triangles are
    then appended one at a time; F_{m-1} and F_m come from the uniform block.
    """
    if m % 2 == 0 or m % 3 != 0:
        raise ValueError("needs odd m divisible by 3")
    t = m // 3
    two_thirds = 2 * t
    if not two_thirds <= j <= m:
        raise ValueError(f"j={j} outside [{two_thirds}, {m}] for m={m}")
    if j == m:
        return uniform_block_odd(m)
    if j == m - 1:
        block = list(uniform_block_odd(m).triangles)
        block.remove((0, 1 % m))
        block.remove(((m - 1) % m, 0))
        seq = block + [(1 % m, m - 1)]
        return _checked_prefix_labeling(m, seq, j, "div3_range_construction")
    alt = _div3_alternate(m)
    shifted_up = [((x + 1) % m, (y + 1) % m) for x, y in alt]
    shifted_down = [((x - 1) % m, (y - 1) % m) for x, y in alt]
    base = (
        shifted_up[1:]
        + shifted_down[1:]
        + [(2 % m, (m - 2) % m), (2 % m, (m - 2) % m)]
    )
    appendable = [] if t < 3 else [alt[0]] + alt[2 : t - 1]
    seq = base + appendable
    return _checked_prefix_labeling(m, seq, j, "div3_range_construction")


def _oracle_residual(
    m: int, j: int, budget: int
) -> Tuple[str, Optional[FriendshipLabeling], int]:
    """Search F_j over Z_m directly: seeded attempt with the disjoint-pair
    prefix fixed, then an unseeded complete search."""
    group = FiniteAbelianGroup.cyclic(m)
    target = friendship(j)
    nodes = 0
    prefix = expected_family_size(m)
    if 0 < prefix <= j:
        fixed: Dict[int, Tuple[int, ...]] = {0: (0,)}
        for idx, p in enumerate(mad_pairs(m).pairs[:prefix]):
            fixed[2 * idx + 1] = (p.a % m,)
            fixed[2 * idx + 2] = (p.b % m,)
        seeded = search_cordial(
            target, group, SearchConfig(node_budget=budget // 4, fixed_labels=fixed)
        )
        nodes += seeded.nodes
        if seeded.status == "found":
            return "constructed", _labeling_to_friendship(seeded.labeling), nodes
    full = search_cordial(
        target,
        group,
        SearchConfig(node_budget=budget - nodes, fixed_labels={0: (0,)}),
    )
    nodes += full.nodes
    if full.status == "found":
        return "constructed", _labeling_to_friendship(full.labeling), nodes
    if full.status == "infeasible":
        return "not_cordial", None, nodes
    return "unknown", None, nodes


def _labeling_to_friendship(labeling: Labeling) -> FriendshipLabeling:
    m = labeling.group.order
    labels = labeling.vertex_labels
    n = (len(labels) - 1) // 2
    pairs = tuple((labels[2 * t + 1][0], labels[2 * t + 2][0]) for t in range(n))
    return FriendshipLabeling(m, pairs)


def _label_residual(
    m: int, j: int, budget: int
) -> Tuple[str, Optional[FriendshipLabeling], Optional[str], int]:
    """Residual router: (status, labeling, method, nodes) for F_j, j < block."""
    mu_limit = expected_family_size(m)
    r12 = m % 12
    if j <= mu_limit:
        return "constructed", mad_construction(m, j), "mad-prefix", 0
    if m % 2 == 1:
        if j <= m // 2:
            return "constructed", to_half_construction(m, j), "to-half", 0
        if j <= (2 * m) // 3 - epsilon(m):
            return (
                "constructed",
                two_thirds_construction(m, j),
                "two-thirds",
                0,
            )
        if m % 3 == 0:
            return (
                "constructed",
                div3_range_construction(m, j),
                "div3-range",
                0,
            )
    else:
        half_bound = m // 2 - (1 if r12 == 2 else 0)
        if r12 in (0, 2) and j <= half_bound:
            return "constructed", to_half_construction(m, j), "to-half", 0
    status, labeling, nodes = _oracle_residual(m, j, budget)
    return status, labeling, "oracle" if status == "constructed" else None, nodes


def label_friendship(
    m: int, n: int, search_budget: int = DEFAULT_SEARCH_BUDGET
) -> ConstructionResult:
    """Label F_n over Z_m, or report the obstruction, or give up with a budget.

    Routing: check the parity obstruction; peel off uniform blocks of m (m
    odd) or 2m (m even) triangles; route the residual through the closed-form
    constructions by range; fall back to bounded oracle search.  Every
    constructed labeling is re-verified before it is returned.
    """
    if m < 1 or n < 0:
        raise ValueError("need m >= 1 and n >= 0")
    if obstruction(m, n):
        return ConstructionResult("obstructed", method="parity-obstruction")
    block = uniform_block_odd(m) if m % 2 == 1 else uniform_block_even(m)
    block_size = block.n
    blocks, j = divmod(n, block_size)
    total_nodes = 0
    for attempt in range(2):
        residual_j = j + attempt * block_size
        residual_blocks = blocks - attempt
        if residual_blocks < 0:
            break
        status, labeling, method, nodes = _label_residual(
            m, residual_j, search_budget
        )
        total_nodes += nodes
        if status == "constructed":
            assert labeling is not None
            for _ in range(residual_blocks):
                labeling = add(labeling, block)
            if not labeling.verify().cordial:
                raise FriendshipConstructionError(
                    f"assembled labeling failed verification for m={m}, n={n}"
                )
            tag = method if residual_blocks == 0 else f"{method}+{residual_blocks}-blocks"
            return ConstructionResult("constructed", labeling, tag, total_nodes)
        if status == "not_cordial" and residual_blocks == 0:
            return ConstructionResult("not_cordial", nodes=total_nodes)
        if residual_blocks == 0:
            return ConstructionResult("unknown", nodes=total_nodes)
    return ConstructionResult("unknown", nodes=total_nodes)


def friendship_to_json_dict(result: ConstructionResult, m: int, n: int) -> dict:
    from .graphs import labeling_to_json_dict

    payload: dict = {"m": m, "n": n, "status": result.status, "nodes": result.nodes}
    if result.method:
        payload["method"] = result.method
    if result.labeling is not None:
        payload["triangles"] = [list(t) for t in result.labeling.triangles]
        payload["labeling"] = labeling_to_json_dict(result.labeling.to_labeling())
    return payload
