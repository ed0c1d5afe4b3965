"""The dynamicity calculus.

An actor's dynamicity (dda) is the mean, over the m windows, of the
presence-weighted absolute deviation between its window centrality and its
aggregated-network centrality. From the per-actor values follow the actor
contributions (each in [0, 1/n]), the per-window averages, and two
network-level modes:

* ``eq6_literal``: ddn = 1 - dda_star + mean(dda), the closed form of summing
  the per-actor contributions. A fully static network scores 1.0 under this
  mode; that is forced by the contribution algebra, not a bug.
* ``mean_dda``: ddn = mean(dda), which scores a static network 0.

Absent actors score 0 in a window and carry a zero weight there, so their
terms vanish while the division by m stays.
"""

from __future__ import annotations

from dataclasses import dataclass

from .centrality import CentralityScores
from .errors import ConsistencyError
from .windows import AlphaWeights, PresenceMatrix

EQ6_LITERAL = "eq6_literal"
MEAN_DDA = "mean_dda"
DDN_MODES = (EQ6_LITERAL, MEAN_DDA)


@dataclass(frozen=True)
class ObservedValues:
    """Centrality scores on the aggregated network and on each window
    network. Window scores default to 0 for actors absent from that window."""

    aggregated: CentralityScores
    per_window: tuple[CentralityScores, ...]

    @property
    def m(self) -> int:
        return len(self.per_window)

    @property
    def actors(self) -> tuple[str, ...]:
        return tuple(sorted(self.aggregated.scores))

    def window_value(self, actor: str, j: int) -> float:
        return self.per_window[j - 1].get(actor)


@dataclass(frozen=True)
class ActorDynamicity:
    dda: dict[str, float]
    dda_star: float


@dataclass(frozen=True)
class WindowDynamicity:
    """Per-window average dynamicity; None marks windows with no actors
    (an empty window has no average, and 0 would fake stability)."""

    per_window: dict[int, float | None]
    w: dict[int, int]


@dataclass(frozen=True)
class NetworkDynamicity:
    ddn: float
    contributions: dict[str, float]
    mode: str


def _check_dimensions(obs: ObservedValues, alpha: AlphaWeights) -> None:
    if alpha.m != obs.m:
        raise ConsistencyError(
            f"window count mismatch: alpha has {alpha.m}, observed values {obs.m}"
        )
    if set(alpha.actors) != set(obs.aggregated.scores):
        raise ConsistencyError("actor universe mismatch between alpha and scores")


def actor_window_dynamicity(
    obs: ObservedValues, alpha: AlphaWeights
) -> dict[str, tuple[float, ...]]:
    """Per-actor, per-window weighted deviation: the summand of the dda
    formula without the sum. Rows are actors, columns windows 1..m."""
    _check_dimensions(obs, alpha)
    matrix: dict[str, tuple[float, ...]] = {}
    for actor in obs.actors:
        ov_an = obs.aggregated.get(actor)
        matrix[actor] = tuple(
            alpha.get(actor, j) * abs(ov_an - obs.window_value(actor, j))
            for j in range(1, obs.m + 1)
        )
    return matrix


def actor_dynamicity(obs: ObservedValues, alpha: AlphaWeights) -> ActorDynamicity:
    """Row means of the actor-window matrix, plus the maximum (dda_star)."""
    matrix = actor_window_dynamicity(obs, alpha)
    m = obs.m
    dda = {actor: sum(row) / m for actor, row in matrix.items()}
    return ActorDynamicity(dda=dda, dda_star=max(dda.values()))


def actor_contribution(ad: ActorDynamicity, n: int) -> dict[str, float]:
    """Each actor's share of network dynamicity: (1 - (dda_star - dda)) / n.
    The argmax actor(s) receive exactly 1/n."""
    if n < 1:
        raise ConsistencyError("actor contribution requires n >= 1")
    return {
        actor: (1.0 - (ad.dda_star - value)) / n
        for actor, value in ad.dda.items()
    }


def window_dynamicity(
    obs: ObservedValues, alpha: AlphaWeights, presence: PresenceMatrix
) -> WindowDynamicity:
    """Average weighted deviation over the actors present in each window."""
    _check_dimensions(obs, alpha)
    per_window: dict[int, float | None] = {}
    w: dict[int, int] = {}
    for j in range(1, obs.m + 1):
        members = sorted(presence.window_actors(j))
        w[j] = len(members)
        if not members:
            per_window[j] = None
            continue
        total = sum(
            alpha.get(actor, j)
            * abs(obs.aggregated.get(actor) - obs.window_value(actor, j))
            for actor in members
        )
        per_window[j] = total / len(members)
    return WindowDynamicity(per_window=per_window, w=w)


def network_dynamicity(ad: ActorDynamicity, n: int,
                       mode: str = EQ6_LITERAL) -> NetworkDynamicity:
    if n < 1:
        raise ConsistencyError("network dynamicity requires n >= 1")
    if mode not in DDN_MODES:
        raise ConsistencyError(f"unknown ddn mode: {mode!r}")
    mean = sum(ad.dda.values()) / n
    if mode == EQ6_LITERAL:
        ddn = 1.0 - ad.dda_star + mean
    else:
        ddn = mean
    return NetworkDynamicity(
        ddn=ddn, contributions=actor_contribution(ad, n), mode=mode
    )


def rank_actors(ad: ActorDynamicity, k: int) -> list[tuple[str, float]]:
    """Top-k actors by dda, descending; ties broken by actor label ascending."""
    if k < 1:
        raise ConsistencyError("top-k requires k >= 1")
    ordered = sorted(ad.dda.items(), key=lambda kv: (-kv[1], kv[0]))
    return ordered[:k]
