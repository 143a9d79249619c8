"""Breadth-first coset enumeration for the intersection subgroup.

Enumerates right cosets of K = G ∩ G^(M_p) inside either G ("base" side)
or its dilation conjugate ("conjugate" side).  Identification of cosets is
by the exact test  r2 * r1^-1 in K; with indices this small a pairwise scan
beats anything cleverer.  The resulting table stores representatives and
the permutation action of each generator, which downstream modules read as
covering monodromy.
"""

from __future__ import annotations

from dataclasses import dataclass

from .moebius import GroupContext, MoebiusMat, in_K, word_to_matrix

GENERATOR_NAMES = ("T", "V", "T^-1", "V^-1")

DEFAULT_MAX_COSETS = 4096
DEFAULT_MAX_WORD_LEN = 64


class CapExceeded(RuntimeError):
    """Enumeration failed to close within the configured resource cap."""

    def __init__(self, what: str, limit: int):
        super().__init__(f"coset enumeration exceeded {what} cap ({limit})")
        self.what = what
        self.limit = limit


@dataclass(frozen=True)
class CosetTable:
    """Representatives and generator action for the cosets of K."""

    side: str  # "base" or "conjugate"
    reps: tuple[MoebiusMat, ...]
    action: dict[str, tuple[int, ...]]

    @property
    def index(self) -> int:
        return len(self.reps)

    def to_json_dict(self) -> dict:
        return {
            "side": self.side,
            "index": self.index,
            "representatives": [[str(e) for e in r.entries()] for r in self.reps],
            "action": {name: list(perm) for name, perm in self.action.items()},
        }


def enumerate_cosets(
    ctx: GroupContext,
    side: str = "base",
    max_cosets: int = DEFAULT_MAX_COSETS,
    max_word_len: int = DEFAULT_MAX_WORD_LEN,
) -> CosetTable:
    """BFS enumeration of K-cosets; returns a table closed under all generators."""
    if max_cosets < 1:
        raise ValueError("max_cosets must be >= 1")
    if side == "base":
        gens = ctx.generators()
    elif side == "conjugate":
        gens = ctx.conjugated_generators()
    else:
        raise ValueError(f"side must be 'base' or 'conjugate', got {side!r}")

    reps: list[MoebiusMat] = [MoebiusMat.identity()]
    inverses: list[MoebiusMat] = [MoebiusMat.identity()]
    word_len = [0]
    action: dict[str, list[int]] = {name: [] for name in GENERATOR_NAMES}

    def locate(candidate: MoebiusMat) -> int:
        for j, inv in enumerate(inverses):
            if in_K(ctx, candidate * inv):
                return j
        return -1

    i = 0
    while i < len(reps):
        for name in GENERATOR_NAMES:
            candidate = reps[i] * gens[name]
            j = locate(candidate)
            if j < 0:
                if len(reps) >= max_cosets:
                    raise CapExceeded("max_cosets", max_cosets)
                if word_len[i] + 1 > max_word_len:
                    raise CapExceeded("max_word_len", max_word_len)
                reps.append(candidate)
                inverses.append(candidate.inverse())
                word_len.append(word_len[i] + 1)
                j = len(reps) - 1
            action[name].append(j)
        i += 1

    return CosetTable(
        side=side,
        reps=tuple(reps),
        action={name: tuple(perm) for name, perm in action.items()},
    )


def both_side_indices(ctx: GroupContext, max_cosets: int = DEFAULT_MAX_COSETS) -> tuple[int, int]:
    """Index of K in the base group and in the conjugate group."""
    base = enumerate_cosets(ctx, "base", max_cosets)
    conj = enumerate_cosets(ctx, "conjugate", max_cosets)
    return base.index, conj.index


@dataclass(frozen=True)
class GeneratorFixture:
    """A side-pairing element given both as a word and as explicit entries."""

    name: str
    word: str
    matrix: MoebiusMat


@dataclass(frozen=True)
class FixtureReport:
    name: str
    word_matches: bool
    in_intersection: bool
    computed: MoebiusMat
    expected: MoebiusMat

    @property
    def ok(self) -> bool:
        return self.word_matches and self.in_intersection


def verify_generators(ctx: GroupContext, fixtures) -> list[FixtureReport]:
    """Check each fixture equals its defining word and lies in K."""
    reports = []
    for fx in fixtures:
        computed = word_to_matrix(ctx, fx.word)
        reports.append(
            FixtureReport(
                name=fx.name,
                word_matches=computed == fx.matrix,
                in_intersection=in_K(ctx, fx.matrix),
                computed=computed,
                expected=fx.matrix,
            )
        )
    return reports
