"""
Skew Dyck paths as step words over Up, DownBlack and DownRed.

A left step (-1,-1) of a skew Dyck path is drawn as a red down-step (1,-1).
A word is a valid path when it never goes below the axis and contains neither
Up followed by DownRed nor DownRed followed by Up (those would overlap).
The up-down-red pattern is the contiguous factor Up, DownBlack, DownRed.
"""
import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum

from django.conf import settings

from series.rings import TPoly
from skew_dyck.exceptions import SkewDyckError

logger = logging.getLogger(__name__)


class CapExceeded(SkewDyckError):
    """Requested brute-force length is beyond the configured oracle cap"""


class Step(Enum):
    UP = 'U'
    DOWN_BLACK = 'D'
    DOWN_RED = 'R'

    @property
    def displacement(self):
        return 1 if self is Step.UP else -1

    def __str__(self):
        return self.value


# Lexicographic yield order of the enumerator
STEP_ORDER = (Step.UP, Step.DOWN_BLACK, Step.DOWN_RED)

UDR = (Step.UP, Step.DOWN_BLACK, Step.DOWN_RED)


class Rule(Enum):
    BELOW_AXIS = 'BelowAxis'
    UP_RED = 'UpRed'
    RED_UP = 'RedUp'


@dataclass(frozen=True)
class Violation:
    index: int
    rule: Rule


@dataclass(frozen=True)
class ValidityReport:
    valid: bool
    violation: Violation = None

    def __bool__(self):
        return self.valid


def parse_word(text):
    """'UUDR' -> [Up, Up, DownBlack, DownRed]; whitespace ignored, case-insensitive"""
    word = []
    for position, char in enumerate(text):
        if char.isspace():
            continue
        try:
            word.append(Step(char.upper()))
        except ValueError:
            raise ValueError(f'unknown step {char!r} at position {position}, expected U, D or R')
    return word


def format_word(word):
    return ''.join(step.value for step in word)


def validate(word):
    """Check the three path rules, reporting the earliest violation"""
    level = 0
    previous = None
    for index, step in enumerate(word):
        if previous is Step.UP and step is Step.DOWN_RED:
            return ValidityReport(False, Violation(index - 1, Rule.UP_RED))
        if previous is Step.DOWN_RED and step is Step.UP:
            return ValidityReport(False, Violation(index - 1, Rule.RED_UP))
        level += step.displacement
        if level < 0:
            return ValidityReport(False, Violation(index, Rule.BELOW_AXIS))
        previous = step
    return ValidityReport(True)


def _count_udr(word):
    return sum(
        1 for i in range(len(word) - 2)
        if (word[i], word[i + 1], word[i + 2]) == UDR
    )


@dataclass(frozen=True)
class SkewPath:
    steps: tuple
    levels: tuple
    udr_count: int

    @classmethod
    def from_steps(cls, word):
        word = tuple(parse_word(word) if isinstance(word, str) else word)
        report = validate(word)
        if not report.valid:
            v = report.violation
            raise ValueError(f'{format_word(word)} is not a skew Dyck path: {v.rule.value} at {v.index}')
        levels = [0]
        for step in word:
            levels.append(levels[-1] + step.displacement)
        return cls(word, tuple(levels), _count_udr(word))

    @property
    def length(self):
        return len(self.steps)

    @property
    def end_level(self):
        return self.levels[-1]

    @property
    def height(self):
        return max(self.levels)

    def __str__(self):
        return format_word(self.steps)


def count_udr(path):
    """Number of contiguous Up, DownBlack, DownRed factors"""
    steps = path.steps if isinstance(path, SkewPath) else tuple(path)
    return _count_udr(steps)


def _check_cap(length):
    cap = getattr(settings, 'SKEW_ORACLE_CAP', 24)
    if length < 0:
        raise ValueError('length must be nonnegative')
    if length > cap:
        raise CapExceeded(f'length {length} exceeds the brute-force cap {cap}')


def enumerate_paths(length, end_level=None, forbid_udr=False):
    """
    Yield every valid path with exactly ``length`` steps, in lexicographic
    order (Up < DownBlack < DownRed). Only valid prefixes are extended.
    """
    _check_cap(length)
    if end_level is not None and (end_level < 0 or end_level > length
                                  or (length - end_level) % 2):
        return

    steps = []
    levels = [0]
    udr = [0]

    def extend():
        depth = len(steps)
        level = levels[-1]
        if depth == length:
            if end_level is None or level == end_level:
                yield SkewPath(tuple(steps), tuple(levels), udr[-1])
            return
        if end_level is not None and level - (length - depth) > end_level:
            return
        last = steps[-1] if steps else None
        for step in STEP_ORDER:
            if step is Step.UP and last is Step.DOWN_RED:
                continue
            if step is Step.DOWN_RED and last is Step.UP:
                continue
            new_level = level + step.displacement
            if new_level < 0:
                continue
            hit = step is Step.DOWN_RED and depth >= 2 and (steps[-2], last) == UDR[:2]
            if hit and forbid_udr:
                continue
            steps.append(step)
            levels.append(new_level)
            udr.append(udr[-1] + hit)
            yield from extend()
            steps.pop()
            levels.pop()
            udr.pop()

    yield from extend()


def udr_histogram(length, end_level, forbid_udr=False):
    """Occurrence histogram of up-down-red over enumerate_paths, as a TPoly"""
    tally = Counter(p.udr_count for p in enumerate_paths(length, end_level, forbid_udr))
    if not tally:
        return TPoly()
    return TPoly(tally.get(j, 0) for j in range(max(tally) + 1))


def udr_profile(max_length):
    """
    Brute-force histograms for every length up to ``max_length`` and every end
    level from a single traversal: {(length, level): TPoly}.

    Walks the same pruned search tree as enumerate_paths without building
    path objects, which keeps the length-20 oracle affordable.
    """
    _check_cap(max_length)
    tally = Counter()
    # step codes: 0 = Up, 1 = DownBlack, 2 = DownRed, -1 = none yet

    def visit(depth, level, before_last, last, udr):
        tally[depth, level, udr] += 1
        if depth == max_length:
            return
        if last != 2:
            visit(depth + 1, level + 1, last, 0, udr)
        if level:
            visit(depth + 1, level - 1, last, 1, udr)
            if last != 0:
                visit(depth + 1, level - 1, last, 2, udr + (before_last == 0 and last == 1))

    visit(0, 0, -1, -1, 0)
    logger.info(f'Brute-force profile to length {max_length}: {sum(tally.values())} paths')

    grouped = {}
    for (depth, level, udr), n in tally.items():
        grouped.setdefault((depth, level), {})[udr] = n
    return {
        key: TPoly(counts.get(j, 0) for j in range(max(counts) + 1))
        for key, counts in grouped.items()
    }
