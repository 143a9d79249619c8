"""Covering invariants of the intermediate surface from coset monodromy.

The coset table of K gives a permutation for each stabilizer generator of
the three special values 0, 1, inf of the base orbifold.  Cycle lengths of
those permutations are the local multiplicities of the degree-n branched
cover, from which genus (Riemann-Hurwitz), punctures and cone points of
the intermediate surface follow.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cosets import CosetTable
from .moebius import INF, GroupContext

VALUES = ("0", "1", "inf")


class InconsistentCovering(ValueError):
    """Permutation data does not describe a covering (internal bug guard)."""


def compose(first: tuple[int, ...], then: tuple[int, ...]) -> tuple[int, ...]:
    """Permutation applying `first`, then `then` (right-action order)."""
    return tuple(then[first[i]] for i in range(len(first)))


def cycle_lengths(perm: tuple[int, ...]) -> tuple[int, ...]:
    seen = [False] * len(perm)
    out = []
    for i in range(len(perm)):
        if seen[i]:
            continue
        n = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            n += 1
        out.append(n)
    return tuple(sorted(out, reverse=True))


@dataclass(frozen=True)
class PermutationTriple:
    """Coset actions of the loops around the values 0, 1 and inf."""

    sigma_0: tuple[int, ...]
    sigma_1: tuple[int, ...]
    sigma_inf: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.sigma_0)

    def is_transitive(self) -> bool:
        n = self.degree
        reached = {0}
        frontier = [0]
        perms = (self.sigma_0, self.sigma_1, self.sigma_inf)
        while frontier:
            i = frontier.pop()
            for p in perms:
                j = p[i]
                if j not in reached:
                    reached.add(j)
                    frontier.append(j)
        return len(reached) == n


def monodromy(table: CosetTable, ctx: GroupContext) -> PermutationTriple:
    """Actions of T, W = V^-1 T and V on the cosets.

    T stabilizes the cusp over the value 0, W the cusp over 1, and V the
    point over inf (a cusp at q = inf, the order-q elliptic point else).
    """
    needed = {"T", "V", "T^-1", "V^-1"}
    if not needed.issubset(table.action):
        raise ValueError("coset table is incomplete: generator actions missing")
    sigma_t = table.action["T"]
    sigma_v = table.action["V"]
    sigma_w = compose(table.action["V^-1"], sigma_t)
    triple = PermutationTriple(sigma_0=sigma_t, sigma_1=sigma_w, sigma_inf=sigma_v)
    if not triple.is_transitive():
        raise InconsistentCovering("monodromy action is not transitive")
    return triple


@dataclass(frozen=True)
class SurfaceInvariants:
    genus: int
    punctures: int
    cone_points: tuple[int, ...]
    profiles: dict[str, tuple[int, ...]]  # value -> sorted cycle lengths

    def to_json_dict(self) -> dict:
        return {
            "genus": self.genus,
            "punctures": self.punctures,
            "cone_points": list(self.cone_points),
            "profiles": {v: list(p) for v, p in self.profiles.items()},
        }


def surface_invariants(triple: PermutationTriple, ctx: GroupContext) -> SurfaceInvariants:
    """Genus, punctures, cone points and ramification profiles of the cover."""
    if not triple.is_transitive():
        raise InconsistentCovering("triple is not transitive")
    n = triple.degree
    profiles = {
        "0": cycle_lengths(triple.sigma_0),
        "1": cycle_lengths(triple.sigma_1),
        "inf": cycle_lengths(triple.sigma_inf),
    }
    for value, prof in profiles.items():
        if sum(prof) != n:
            raise InconsistentCovering(f"profile over {value} does not sum to degree")

    if ctx.q == INF:
        cusp_values = VALUES
        cone_points: list[int] = []
    else:
        q = int(ctx.q)
        cusp_values = ("0", "1")
        cone_points = []
        for e in profiles["inf"]:
            if q % e != 0:
                raise InconsistentCovering(f"elliptic cycle length {e} does not divide q={q}")
            if e < q:
                cone_points.append(q // e)

    punctures = sum(len(profiles[v]) for v in cusp_values)
    total_defect = sum(e - 1 for prof in profiles.values() for e in prof)
    chi = 2 * n - total_defect  # Euler characteristic of the compactification
    if chi % 2 != 0 or chi > 2:
        raise InconsistentCovering(f"Riemann-Hurwitz gives invalid characteristic {chi}")
    genus = (2 - chi) // 2

    return SurfaceInvariants(
        genus=genus,
        punctures=punctures,
        cone_points=tuple(sorted(cone_points)),
        profiles=profiles,
    )
