"""
Four-layer automaton for skew Dyck paths with the up-down-red marker t.

Layers record how a state was entered:
  F  by an Up step (and the start),
  G  by the DownBlack of a just-completed Up, DownBlack,
  H  by any other DownBlack,
  K  by a DownRed.
The transition list below is the single source of truth; a DownRed leaving G
completes up-down-red and carries the weight t.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from paths.steps import Step
from series.rings import TPOLYS, T, TPoly
from series.zseries import ZSeries

logger = logging.getLogger(__name__)


class Layer(Enum):
    F = 'F'
    G = 'G'
    H = 'H'
    K = 'K'


class CountMode(Enum):
    TRACK = 'track'
    FORBID = 'forbid'
    TOTAL = 'total'


@dataclass(frozen=True)
class Transition:
    source: Layer
    step: Step
    target: Layer
    marked: bool = False


TRANSITIONS = (
    Transition(Layer.F, Step.UP, Layer.F),
    Transition(Layer.G, Step.UP, Layer.F),
    Transition(Layer.H, Step.UP, Layer.F),
    Transition(Layer.F, Step.DOWN_BLACK, Layer.G),
    Transition(Layer.G, Step.DOWN_BLACK, Layer.H),
    Transition(Layer.H, Step.DOWN_BLACK, Layer.H),
    Transition(Layer.K, Step.DOWN_BLACK, Layer.H),
    Transition(Layer.G, Step.DOWN_RED, Layer.K, marked=True),
    Transition(Layer.H, Step.DOWN_RED, Layer.K),
    Transition(Layer.K, Step.DOWN_RED, Layer.K),
)

_OUTGOING = {
    layer: tuple(tr for tr in TRANSITIONS if tr.source is layer) for layer in Layer
}


class StateVector:
    """Sparse map (layer, level) -> TPoly weight; treated as immutable"""
    __slots__ = ('weights',)

    def __init__(self, weights=None):
        self.weights = {key: w for key, w in (weights or {}).items() if w}

    @classmethod
    def initial(cls):
        return cls({(Layer.F, 0): TPoly((1,))})

    def weight(self, layer, level):
        return self.weights.get((layer, level), TPoly())

    def at_level(self, level):
        """Sum over the four layers at one level"""
        total = TPoly()
        for layer in Layer:
            total = total + self.weight(layer, level)
        return total

    def total(self):
        total = TPoly()
        for w in self.weights.values():
            total = total + w
        return total

    def __eq__(self, other):
        if not isinstance(other, StateVector):
            return NotImplemented
        return self.weights == other.weights

    def __repr__(self):
        items = ', '.join(
            f'({layer.value},{level}): {w}'
            for (layer, level), w in sorted(self.weights.items(), key=lambda kv: (kv[0][1], kv[0][0].value))
        )
        return f'StateVector({{{items}}})'


def step(state, forbid_udr=False):
    """Apply exactly one automaton step; forbid_udr deletes the marked edge"""
    out = {}
    for (layer, level), weight in state.weights.items():
        if level < 0:
            raise ValueError(f'negative level {level} in state vector')
        for tr in _OUTGOING[layer]:
            target_level = level + tr.step.displacement
            if target_level < 0:
                continue
            if tr.marked:
                if forbid_udr:
                    continue
                contribution = weight * T
            else:
                contribution = weight
            key = (tr.target, target_level)
            out[key] = out.get(key, TPoly()) + contribution
    return StateVector(out)


@lru_cache(maxsize=32)
def _run(length, forbid_udr):
    states = [StateVector.initial()]
    for _ in range(length):
        states.append(step(states[-1], forbid_udr))
    logger.debug(f'DP ran {length} steps (forbid_udr={forbid_udr})')
    return tuple(states)


def run(length, forbid_udr=False):
    """State vectors after 0..length steps"""
    if length < 0:
        raise ValueError('length must be nonnegative')
    return list(_run(length, forbid_udr))


def _project(weight, mode):
    if mode is CountMode.TRACK:
        return weight
    if mode is CountMode.FORBID:
        return weight.constant
    return weight.total()


def count(length, end_level, mode=CountMode.TRACK):
    """Paths of ``length`` steps ending at ``end_level``: TPoly, or an int for Forbid/Total"""
    mode = CountMode(mode)
    if length < 0 or end_level < 0:
        raise ValueError('length and level must be nonnegative')
    if end_level > length or (length - end_level) % 2:
        return _project(TPoly(), mode)
    return _project(_run(length, False)[length].at_level(end_level), mode)


def count_all(length, mode=CountMode.TRACK):
    """Paths of ``length`` steps summed over every end level"""
    return _project(_run(length, False)[length].total(), CountMode(mode))


def count_forbidden_edge(length, end_level):
    """Forbid-mode count from a separate run with the G -> K edge deleted"""
    return _run(length, True)[length].at_level(end_level).constant


def layer_series(layer, level, order, forbid_udr=False):
    """sum_m weight(layer, level after m steps) z^m, mod z^order, over QQ[t]"""
    if order < 1:
        raise ValueError('order must be at least 1')
    states = _run(order - 1, forbid_udr)
    return ZSeries([s.weight(layer, level) for s in states], TPOLYS)


def level_series(level, order, forbid_udr=False):
    """All layers at one level as a series in z"""
    states = _run(order - 1, forbid_udr)
    return ZSeries([s.at_level(level) for s in states], TPOLYS)
