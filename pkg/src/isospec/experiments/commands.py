"""/src/isospec/experiments/commands.py

The four experiments behind the command line. Each returns its report and
writes it under cfg.out; the caller turns report.ok into the exit code.
"""

import itertools
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import numpy as np

from isospec import config
from isospec.algebra import (
    check_isospectral,
    commutant_dimension,
    equivalence_invariant,
    nonequivalence_certificate,
    zero_skew_pair,
    zero_sym_pair,
)
from isospec.errors import ConfigError, EmptySupportError
from isospec.geometry import (
    AdmissibleForm,
    gram_matrices,
    random_surface_points,
    support_contains,
    tangent_frames,
)
from isospec.spectral import (
    ConjugationWitnessProvider,
    build_basis,
    compare_spectra,
    compute_spectrum,
    exact_symmetry_order,
    form_order_kind,
    pooled_eigenvalues,
    radial_order,
    random_weight_polynomials,
    rayleigh_identity_check,
    round_sphere_spectrum,
    surface_volume,
    verify_star,
    weight_box,
    write_report_csv,
    write_report_json,
)

from .config_file import resolve_pairs
from .models import (
    BumpReport,
    ExperimentConfig,
    InvariantsReport,
    InvariantsRow,
    IsospectralCheck,
    PairComparison,
    PairResiduals,
    RoundCheck,
    SpectrumExperimentReport,
    VerifyReport,
    WeightResidual,
)

logger = logging.getLogger(__name__)

ROUND_TOL = 1e-8
GAP_NOISE_FLOOR = 1e-10
GENERIC_COS_TOL = 1e-12


def _json_path(cfg: ExperimentConfig, suffix: str = "json") -> Path:
    return Path(cfg.out) / f"{cfg.command}_{cfg.label}.{suffix}"


def _write_json(cfg: ExperimentConfig, report, has_csv: bool = False) -> None:
    """JSON report; commands without a CSV layout write JSON whatever the format."""
    if cfg.format in ("json", "both") or not has_csv:
        write_report_json(report, _json_path(cfg))


def _expected_generic(cfg: ExperimentConfig) -> list[bool | None]:
    if cfg.example == "s5-pair":
        return [True, True]
    if cfg.example == "s7-family":
        return [abs(math.cos(t)) > GENERIC_COS_TOL for t in cfg.t_values]
    return [None] * (2 if cfg.pair_b else 1)


# isospec invariants
def cmd_invariants(cfg: ExperimentConfig) -> InvariantsReport:
    """Equivalence invariants, commutant dimensions and isospectrality certificates.

    The pattern is reproduced when every pair is isospectral to the first,
    some pair is separated by the invariant, and genericity matches the
    expectation of the example.
    """
    pairs = resolve_pairs(cfg)
    rows = [
        InvariantsRow(
            label=label,
            invariant=equivalence_invariant(pair),
            commutant_dimension=commutant_dimension(pair),
            generic=commutant_dimension(pair) == 0,
            expected_generic=expected,
        )
        for (label, pair), expected in zip(pairs, _expected_generic(cfg))
    ]
    checks = []
    for (label_a, pair_a), (label_b, pair_b) in itertools.combinations(pairs, 2):
        certificate = check_isospectral(pair_a, pair_b)
        separation = nonequivalence_certificate(pair_a, pair_b)
        checks.append(
            IsospectralCheck(
                label_a=label_a,
                label_b=label_b,
                ok=certificate.ok,
                max_coeff_gap=certificate.max_coeff_gap,
                separated=separation.separated,
            )
        )
    isospectral_ok = all(check.ok for check in checks)
    separation_present = any(check.separated for check in checks)
    genericity_ok = all(row.expected_generic is None or row.generic == row.expected_generic for row in rows)
    report = InvariantsReport(
        example=cfg.example,
        seed=cfg.seed,
        rows=rows,
        checks=checks,
        isospectral_ok=isospectral_ok,
        separation_present=separation_present,
        genericity_ok=genericity_ok,
        ok=isospectral_ok and separation_present and genericity_ok,
    )
    if not separation_present:
        logger.warning("separation absent: no pair is distinguished by the equivalence invariant")
    _write_json(cfg, report)
    return report


def _quad_orders(cfg: ExperimentConfig, forms: list[AdmissibleForm]) -> list[int]:
    if cfg.quad_orders:
        return list(cfg.quad_orders)
    N = cfg.degree
    exact = max(exact_symmetry_order(N, form_order_kind(form)) for form in forms)
    return sorted({2 * N + 3, exact})


def _round_check(m: int, eigenvalues: list[float], N: int) -> RoundCheck:
    expected = round_sphere_spectrum(m, N)
    target = np.repeat([value for value, _ in expected], [count for _, count in expected])
    if len(target) != len(eigenvalues):
        return RoundCheck(expected=expected, max_deviation=math.inf, ok=False)
    deviation = float(np.max(np.abs(np.array(eigenvalues) - target)))
    return RoundCheck(expected=expected, max_deviation=deviation, ok=deviation <= ROUND_TOL)


def _monotone(comparisons: list[PairComparison], orders: list[int]) -> bool:
    by_pair: dict[tuple[str, str], dict[int, float]] = {}
    for item in comparisons:
        by_pair.setdefault((item.label_a, item.label_b), {})[item.K] = item.verdict.max_gap
    for gaps in by_pair.values():
        sequence = [gaps[K] for K in orders]
        for coarse, fine in zip(sequence, sequence[1:]):
            if fine > coarse and fine > GAP_NOISE_FLOOR:
                return False
    return True


# isospec spectrum
def cmd_spectrum(cfg: ExperimentConfig) -> SpectrumExperimentReport:
    """Galerkin spectra of every configured metric at every quadrature level."""
    surface = cfg.target_surface()
    pairs = resolve_pairs(cfg)
    forms = [(label, AdmissibleForm(pair=pair)) for label, pair in pairs]
    orders = _quad_orders(cfg, [form for _, form in forms])
    N = cfg.degree
    radial = radial_order(N, forms[0][1].m)

    reports = []
    comparisons = []
    for K in orders:
        level = [
            compute_spectrum(form, N, K, surface=surface, radial=radial, label=label, seed=cfg.seed)
            for label, form in forms
        ]
        for report_a, report_b in itertools.combinations(level, 2):
            verdict = compare_spectra(report_a, report_b, cfg.tol)
            comparisons.append(PairComparison(K=K, label_a=report_a.label, label_b=report_b.label, verdict=verdict))
            logger.info("K=%d %s vs %s: max gap %.3e", K, report_a.label, report_b.label, verdict.max_gap)
        reports.extend(level)

    finest = [item for item in comparisons if item.K == orders[-1]]
    monotone = _monotone(comparisons, orders)
    round_check = None
    if len(forms) == 1 and forms[0][1].is_zero() and surface.kind == "sphere":
        round_check = _round_check(forms[0][1].m, pooled_eigenvalues(reports[-1]), N)
    ok = all(item.verdict.ok for item in finest) and monotone and (round_check is None or round_check.ok)

    report = SpectrumExperimentReport(
        example=cfg.example,
        seed=cfg.seed,
        N=N,
        quad_orders=orders,
        reports=reports,
        comparisons=comparisons,
        monotone=monotone,
        round_check=round_check,
        ok=ok,
    )
    _write_json(cfg, report, has_csv=True)
    if cfg.format in ("csv", "both"):
        final = reports[-len(forms) :]
        if len(final) == 1:
            write_report_csv(final[0], None, _json_path(cfg, "csv"))
        for i, j in itertools.combinations(range(len(final)), 2):
            name = f"{cfg.command}_{cfg.label}.csv" if len(final) == 2 else f"{cfg.command}_{cfg.label}_{i}_{j}.csv"
            write_report_csv(final[i], final[j], Path(cfg.out) / name)
    return report


def _pair_residuals(cfg: ExperimentConfig, first, second, rng: np.random.Generator) -> PairResiduals:
    (label_a, pair_a), (label_b, pair_b) = first, second
    surface = cfg.target_surface()
    form_a, form_b = AdmissibleForm(pair=pair_a), AdmissibleForm(pair=pair_b)
    provider = ConjugationWitnessProvider(pair_a, pair_b)
    weights = weight_box(cfg.weight_bound)
    star = [
        WeightResidual(weight=mu.as_tuple(), residual=verify_star(form_a, form_b, mu, provider, cfg.samples, rng, surface))
        for mu in weights
    ]
    basis = build_basis(form_a.m, cfg.degree)
    slices = basis.weight_slices()
    rayleigh = []
    for mu in weights:
        if mu.as_tuple() not in slices:
            continue
        polynomials = random_weight_polynomials(basis, mu, cfg.test_polynomials, rng)
        residual = rayleigh_identity_check(form_a, form_b, mu, provider, polynomials, cfg.points, rng, surface)
        rayleigh.append(WeightResidual(weight=mu.as_tuple(), residual=residual))
    return PairResiduals(
        label_a=label_a,
        label_b=label_b,
        star=star,
        rayleigh=rayleigh,
        max_star=max(item.residual for item in star),
        max_rayleigh=max((item.residual for item in rayleigh), default=0.0),
    )


# isospec verify
def cmd_verify(cfg: ExperimentConfig) -> VerifyReport:
    """Condition (*) over the weight box and the Rayleigh identity, first metric against each other one."""
    pairs = resolve_pairs(cfg)
    if len(pairs) < 2:
        pairs = pairs * 2
    # one child generator per compared pair keeps the results independent of the thread count
    children = np.random.SeedSequence(cfg.seed).spawn(len(pairs) - 1)
    work = [(pairs[0], other, np.random.default_rng(child)) for other, child in zip(pairs[1:], children)]
    with ThreadPoolExecutor(max_workers=config.ISOSPEC_THREADS) as executor:
        results = list(executor.map(lambda item: _pair_residuals(cfg, *item), work))
    max_residual = max(max(r.max_star, r.max_rayleigh) for r in results)
    report = VerifyReport(
        example=cfg.example,
        seed=cfg.seed,
        surface=cfg.target_surface().label(),
        weight_bound=cfg.weight_bound,
        samples=cfg.samples,
        pairs=results,
        max_residual=max_residual,
        tol=cfg.verify_tol,
        ok=max_residual <= cfg.verify_tol,
    )
    _write_json(cfg, report)
    return report


def _zero_form(form: AdmissibleForm) -> AdmissibleForm:
    """Form whose metric is g_0."""
    pair = zero_skew_pair(form.m) if form.kind == "su" else zero_sym_pair()
    return AdmissibleForm(pair=pair)


# isospec bump
def cmd_bump(cfg: ExperimentConfig) -> BumpReport:
    """Support volume of the bump, metric deviation off the support, and (*) for the bumped pair.

    Raises:
        EmptySupportError: if the support misses the sphere
    """
    surface = cfg.target_surface()
    if surface.kind != "sphere":
        raise ConfigError("the bump experiment runs on the sphere")
    profile = cfg.bump_profile()
    if not profile.meets_sphere():
        raise EmptySupportError(f"bump support {profile.center} +- {profile.radii} misses the sphere")
    pairs = resolve_pairs(cfg)
    if len(pairs) < 2:
        pairs = pairs * 2
    (_, pair_a), (_, pair_b) = pairs[0], pairs[1]
    form_a = AdmissibleForm(pair=pair_a, bump=profile)
    form_b = AdmissibleForm(pair=pair_b, bump=profile)
    m = form_a.m
    volume = surface_volume(m, surface)
    eps = cfg.eps or 0.01 * volume
    rng = np.random.default_rng(cfg.seed)

    points = random_surface_points(m, surface, cfg.mc_samples, rng)
    s = np.sum(points[:, :-2] ** 2, axis=1)
    u = np.sum(points[:, -2:] ** 2, axis=1)
    inside = support_contains(profile, s, u)
    fraction = float(np.mean(inside))
    support_volume = fraction * volume
    standard_error = volume * math.sqrt(fraction * (1.0 - fraction) / cfg.mc_samples)

    outside = points[~inside][: cfg.samples]
    frames = tangent_frames(outside, surface)
    bumped = gram_matrices(form_a, outside, frames)
    round_metric = gram_matrices(_zero_form(form_a), outside, frames)
    deviation = float(np.max(np.abs(bumped - round_metric))) if len(outside) else 0.0

    provider = ConjugationWitnessProvider(pair_a, pair_b)
    star = max(verify_star(form_a, form_b, mu, provider, cfg.samples, rng, surface) for mu in weight_box(cfg.weight_bound))

    volume_ok = support_volume + 3 * standard_error < eps
    report = BumpReport(
        example=cfg.example,
        seed=cfg.seed,
        profile=profile,
        surface_volume=volume,
        mc_samples=cfg.mc_samples,
        support_volume=support_volume,
        standard_error=standard_error,
        eps=eps,
        volume_ok=volume_ok,
        off_support_points=len(outside),
        off_support_deviation=deviation,
        star_max_residual=star,
        tol=cfg.verify_tol,
        ok=volume_ok and deviation == 0.0 and star <= cfg.verify_tol,
    )
    _write_json(cfg, report)
    return report
