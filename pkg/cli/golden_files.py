"""
Vendored reference values in cli/golden/*.txt.

Lines starting with '#' are provenance; every other line is an index
followed by one or more exact coefficients (the coefficients of t^0, t^1, ...).
Indices that do not appear up to the largest one are zero.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from series.rings import RATIONALS, TPOLYS, TPoly, parse_exact
from series.zseries import ZSeries

logger = logging.getLogger(__name__)

GOLDEN_DIR = Path(__file__).resolve().parent / 'golden'


@dataclass(frozen=True)
class GoldenSeries:
    name: str
    provenance: tuple
    terms: dict

    @property
    def order(self):
        return max(self.terms) + 1 if self.terms else 0

    def values(self):
        """Dense list of TPoly, index 0 .. order-1"""
        return [self.terms.get(n, TPoly()) for n in range(self.order)]

    def as_series(self, ring=RATIONALS):
        if ring is TPOLYS:
            return ZSeries(self.values(), TPOLYS)
        return ZSeries([RATIONALS.coerce(v) for v in self.values()], RATIONALS)


@lru_cache(maxsize=None)
def load(name):
    path = GOLDEN_DIR / f'{name}.txt'
    provenance = []
    terms = {}
    with path.open(encoding='utf-8') as handle:
        for lineno, line in enumerate(handle, start=1):
            line = line.strip()
            if not line:
                continue
            if line.startswith('#'):
                provenance.append(line[1:].strip())
                continue
            index, *coefficients = line.split()
            if not coefficients:
                raise ValueError(f'{path.name}:{lineno}: index without a value')
            terms[int(index)] = TPoly(parse_exact(c) for c in coefficients)
    logger.debug(f'Loaded golden file {path.name} ({len(terms)} terms)')
    return GoldenSeries(name, tuple(provenance), terms)


def available():
    return sorted(p.stem for p in GOLDEN_DIR.glob('*.txt'))
