"""
Invariant suite behind `manage.py verify`: brute force vs automaton vs kernel
method vs recurrence vs differential equation vs golden files.

Each check returns (passed, detail). Checks are independent and may run
in any order; results are always reported by index.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from django.conf import settings

from asymptotics.estimates import (
    DEFAULT_N_VALUES, constants, convergence_report, local_coefficient_from_equation,
    singular_point,
)
from automaton.layers import CountMode, Layer, count, count_forbidden_edge, layer_series
from holonomic.recurrence import INITIAL_TERMS, extend, first_failure, ode_residual, recurrence_residual
from kernel.generating_functions import (
    TRANSFORMED_KERNEL, KernelMode, boundary_constants, check_identity_total,
    kernel_equation, kernel_residual, kernel_root, layer_gf, level_gf,
    transformation_chain_residual,
)
from paths.steps import udr_profile
from series.algebraic import SOLVER_METHODS, solve_algebraic
from series.equations import A128728, A128729
from series.rings import TPOLYS, TPoly

from . import golden_files

logger = logging.getLogger(__name__)

ORACLE_LENGTH = 20
MAX_LEVEL = 6
LEVEL_LENGTH = 24
RECURRENCE_LENGTH = 200
TOLERANCE = 1e-12


@dataclass(frozen=True)
class CheckResult:
    index: int
    name: str
    passed: bool
    detail: str = ''

    def line(self):
        status = 'PASS' if self.passed else 'FAIL'
        text = f'{status} {self.index} {self.name}'
        return f'{text}: {self.detail}' if self.detail and not self.passed else text


def _first_mismatch(actual, expected):
    for n, (a, e) in enumerate(zip(actual, expected)):
        if a != e:
            return f'index {n}: got {a}, expected {e}'
    if len(actual) < len(expected):
        return f'only {len(actual)} of {len(expected)} terms'
    return ''


def _compare(actual, expected):
    mismatch = _first_mismatch(list(actual), list(expected))
    return not mismatch, mismatch


def check_half_length_display(order):
    golden = golden_files.load('half_length_series')
    s = solve_algebraic(A128729, 1, golden.order)
    return _compare(s.coeffs, golden.as_series().coeffs)


def check_oeis_a128729(order):
    golden = golden_files.load('a128729')
    s = solve_algebraic(A128729, 1, golden.order)
    return _compare(s.coeffs, golden.as_series().coeffs)


def check_solvers_agree(order):
    results = {m: solve_algebraic(A128729, 1, order, method=m) for m in SOLVER_METHODS}
    reference = results[SOLVER_METHODS[0]]
    for method, s in results.items():
        if s != reference:
            return False, f'{method} differs: {_first_mismatch(s.coeffs, reference.coeffs)}'
    return True, ''


def check_bivariate_display(order):
    golden = golden_files.load('a128728')
    s = solve_algebraic(A128728, 1, golden.order)
    return _compare(s.coeffs, golden.as_series(TPOLYS).coeffs)


def check_bivariate_collapse(order):
    tracked = solve_algebraic(A128728, 1, order)
    plain = solve_algebraic(A128729, 1, order)
    if tracked.evaluate_t(0) != plain:
        return False, 't = 0 does not reproduce the avoidance series'
    totals = [c.total() for c in tracked.coeffs[:7]]
    return _compare(totals, [1, 1, 3, 10, 36, 137, 543][:len(totals)])


def check_dp_oracle(order):
    length = min(ORACLE_LENGTH, getattr(settings, 'SKEW_ORACLE_CAP', 24))
    profile = udr_profile(length)
    for m in range(length + 1):
        for k in range(m + 1):
            expected = profile.get((m, k), TPoly())
            got = count(m, k, CountMode.TRACK)
            if got != expected:
                return False, f'length {m}, level {k}: automaton {got}, brute force {expected}'
            if count_forbidden_edge(m, k) != expected.constant:
                return False, f'length {m}, level {k}: deleted-edge automaton disagrees'
    return True, ''


def check_level_gfs(order):
    for k in range(MAX_LEVEL + 1):
        plain = level_gf(k, LEVEL_LENGTH + 1, KernelMode.UNIVARIATE)
        tracked = level_gf(k, LEVEL_LENGTH + 1, KernelMode.BIVARIATE)
        for m in range(LEVEL_LENGTH + 1):
            if plain[m] != count(m, k, CountMode.FORBID):
                return False, f'univariate level {k}, z^{m}'
            if tracked[m] != count(m, k, CountMode.TRACK):
                return False, f'bivariate level {k}, z^{m}'
    return True, ''


def check_kernel(order):
    for mode in KernelMode:
        if kernel_equation(mode) != TRANSFORMED_KERNEL[mode]:
            return False, f'{mode.value} substitution disagrees with the transformed cubic'
        root = kernel_root(max(order, 64), mode)
        if not kernel_residual(root.utilde, mode).is_zero():
            return False, f'{mode.value} kernel residual is nonzero'
    golden = golden_files.load('kernel_root')
    return _compare(kernel_root(golden.order).utilde.coeffs, golden.as_series().coeffs)


def check_identity(order):
    for mode in KernelMode:
        if not check_identity_total(order, mode):
            return False, f'{mode.value} identity fails'
    return True, ''


def check_level_zero_display(order):
    golden = golden_files.load('level0_univariate')
    total = boundary_constants(golden.order).total()
    ok, detail = _compare(total.coeffs, golden.as_series().coeffs)
    if not ok:
        return ok, f'univariate {detail}'
    golden = golden_files.load('level0_bivariate')
    total = boundary_constants(golden.order, KernelMode.BIVARIATE).total()
    ok, detail = _compare(total.coeffs, golden.as_series(TPOLYS).coeffs)
    return ok, f'bivariate {detail}' if detail else ''


def check_half_length_collapse(order):
    plain = level_gf(0, 2 * order, KernelMode.UNIVARIATE).compress(2)
    if plain != solve_algebraic(A128729, 1, order):
        return False, 'univariate level 0 does not match the avoidance cubic'
    tracked = level_gf(0, 2 * order, KernelMode.BIVARIATE).compress(2)
    if tracked != solve_algebraic(A128728, 1, order):
        return False, 'bivariate level 0 does not match the marked cubic'
    return True, ''


def check_transformation_chain(order):
    residual = transformation_chain_residual(max(order, 30))
    return residual.is_zero(), '' if residual.is_zero() else f'first nonzero at Z^{residual.valuation()}'


def check_layers(order):
    for mode, forbid in ((KernelMode.UNIVARIATE, True), (KernelMode.BIVARIATE, False)):
        for k in range(4):
            for layer in Layer:
                closed = layer_gf(layer, k, order, mode)
                automaton = layer_series(layer, k, order, forbid_udr=forbid)
                if mode is KernelMode.UNIVARIATE:
                    automaton = automaton.evaluate_t(0)
                if closed != automaton:
                    return False, f'{mode.value} layer {layer.value} level {k}'
    return True, ''


def check_recurrence(order):
    terms = extend(INITIAL_TERMS, RECURRENCE_LENGTH)
    solved = solve_algebraic(A128729, 1, RECURRENCE_LENGTH + 1)
    ok, detail = _compare(terms, solved.coeffs)
    if not ok:
        return ok, detail
    failing = first_failure(recurrence_residual(list(solved.coeffs)))
    return failing is None, '' if failing is None else f'residual nonzero at n={failing}'


def check_ode(order):
    s = solve_algebraic(A128729, 1, max(order, 30))
    residual = ode_residual(s)
    return residual.is_zero(), '' if residual.is_zero() else f'first nonzero at z^{residual.valuation()}'


def check_asymptotic_constants(order):
    consts = constants()
    if abs(singular_point() - consts.z0) > TOLERANCE:
        return False, 'bisection and closed form z0 disagree'
    if abs(consts.growth * consts.z0 - 1) > TOLERANCE:
        return False, 'growth is not 1/z0'
    if abs(local_coefficient_from_equation(consts.z0, consts.S0) - consts.local_coefficient) > TOLERANCE:
        return False, 'local coefficient does not match the equation'
    return True, ''


def check_asymptotic_convergence(order):
    rows = convergence_report(DEFAULT_N_VALUES)
    deviations = [row.deviation for row in rows]
    for previous, current, row in zip(deviations, deviations[1:], rows[1:]):
        if not current < previous:
            return False, f'deviation grew at n={row.n}'
    return True, ''


CHECKS = (
    ('half-length-series', check_half_length_display),
    ('oeis-a128729', check_oeis_a128729),
    ('solvers-agree', check_solvers_agree),
    ('bivariate-display', check_bivariate_display),
    ('bivariate-collapse', check_bivariate_collapse),
    ('dp-vs-brute-force', check_dp_oracle),
    ('level-gf-vs-dp', check_level_gfs),
    ('kernel-root', check_kernel),
    ('identity-total', check_identity),
    ('level0-display', check_level_zero_display),
    ('half-length-collapse', check_half_length_collapse),
    ('transformation-chain', check_transformation_chain),
    ('layer-gf-vs-dp', check_layers),
    ('recurrence', check_recurrence),
    ('ode', check_ode),
    ('asymptotic-constants', check_asymptotic_constants),
    ('asymptotic-convergence', check_asymptotic_convergence),
)


def _run_one(index, name, check, order):
    try:
        passed, detail = check(order)
    except Exception as e:
        logger.exception(f'Check {name} raised')
        passed, detail = False, f'{type(e).__name__}: {e}'
    logger.info(f'Check {index} {name}: {"pass" if passed else "fail"}')
    return CheckResult(index, name, bool(passed), detail)


def run_checks(order, jobs=None, names=None):
    """Run the suite with ``jobs`` worker threads; results come back in index order"""
    jobs = jobs or getattr(settings, 'SKEW_VERIFY_JOBS', 4)
    selected = [
        (index, name, check)
        for index, (name, check) in enumerate(CHECKS, start=1)
        if not names or name in names
    ]
    with ThreadPoolExecutor(max_workers=max(1, jobs)) as pool:
        futures = [pool.submit(_run_one, index, name, check, order) for index, name, check in selected]
        return [future.result() for future in futures]
