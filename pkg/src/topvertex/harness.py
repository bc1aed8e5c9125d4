"""Verification sweeps, self-checks and value tables.

A sweep walks every tuple of partitions up to a total size for each
framing, evaluates the bosonic side (the framed vertex) and the fermionic
side (determinant formulas and, when the cutoff allows, the direct
expansion), and records exact verdicts.  Work is split into chunks that a
process pool evaluates independently; chunks are reassembled in their
submission order, so report bodies do not depend on the job count.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import logging
import os
import random
import tempfile
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from fractions import Fraction
from functools import lru_cache
from itertools import product
from pathlib import Path as FsPath
from typing import Callable, Iterator, Sequence

from .fermion import coeffs as _coeffs
from .fermion.coeffs import BogoliubovCoeffs
from .fermion.determinants import (
    DEFAULT_VARIANT,
    THREE_LEG_VARIANTS,
    ThreeLegVariant,
    det_leg1,
    det_leg2,
    det_leg3,
)
from .fermion.expand import fock_expand
from .fermion.fock import FockState, apply_psi, apply_psi_star
from .linalg import det
from .partitions import (
    Partition,
    conjugate,
    contents,
    enumerate_partitions,
    from_frobenius,
    kappa,
    partitions_up_to,
    to_frobenius,
)
from .qseries import EXACT, PointField, QRat
from .specialize import (
    NEG_RHO,
    RHO,
    elem_and_homog_at,
    power_sum_at_rho,
    schur_at,
    schur_at_rho,
    schur_hook_determinant,
)
from .vertex import Framing, Path, check_two_leg_reduction, check_wtt, two_leg_coefficient, w_framed

log = logging.getLogger(__name__)

CACHE_ENV = "TOPVERTEX_CACHE_DIR"
MODES = ("exact", "sampled")
ALL_VARIANTS = "all"


class ConfigError(ValueError):
    """Invalid sweep or table configuration."""


class SweepAborted(RuntimeError):
    """A worker failed; ``report`` holds the records finished before the failure."""

    def __init__(self, message: str, report: VerifyReport):
        super().__init__(message)
        self.report = report


def artifact_version() -> str:
    try:
        from importlib.metadata import version

        return version("artifact")
    except Exception:
        return "0+unknown"


# configuration ------------------------------------------------------------


@dataclass(frozen=True)
class SweepConfig:
    legs: int = 1
    max_total_size: int = 4
    framings: tuple[tuple[int, ...], ...] = ((0,),)
    mode: str = "exact"
    sample_points: int = 3
    expansion_cutoff: int | None = None
    use_expansion: bool = True
    jobs: int = 1
    sign_variant: str = DEFAULT_VARIANT.name
    output_path: str | None = None
    max_leg_size: int | None = None
    seed: int = 0

    @property
    def leg_bound(self) -> int:
        if self.max_leg_size is None:
            return self.max_total_size
        return min(self.max_leg_size, self.max_total_size)

    @property
    def required_cutoff(self) -> int:
        """Largest Frobenius coordinate of a partition in range."""
        return max(self.leg_bound - 1, 0)

    @property
    def cutoff(self) -> int | None:
        if not self.use_expansion:
            return None
        return self.required_cutoff if self.expansion_cutoff is None else self.expansion_cutoff

    def padded_framings(self) -> list[Framing]:
        return [Framing.of(f) for f in self.framings]

    def variants(self) -> list[ThreeLegVariant]:
        if self.sign_variant == ALL_VARIANTS:
            return list(THREE_LEG_VARIANTS)
        return [ThreeLegVariant.parse(self.sign_variant)]

    def validate(self) -> SweepConfig:
        if self.legs not in (1, 2, 3):
            raise ConfigError("legs must be 1, 2 or 3")
        for name in ("max_total_size", "sample_points", "jobs", "seed"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool):
                raise ConfigError(f"{name} must be an integer")
        if self.max_total_size < 0:
            raise ConfigError("max_total_size must be nonnegative")
        if self.max_leg_size is not None and self.max_leg_size < 0:
            raise ConfigError("max_leg_size must be nonnegative")
        if self.mode not in MODES:
            raise ConfigError(f"mode must be one of {MODES}")
        if self.mode == "sampled" and self.sample_points < 1:
            raise ConfigError("sampled mode needs at least one sample point")
        if self.jobs < 1:
            raise ConfigError("jobs must be at least 1")
        if not self.framings:
            raise ConfigError("at least one framing is required")
        for f in self.framings:
            if not 1 <= len(f) <= self.legs:
                raise ConfigError(f"framing {f} must have between 1 and {self.legs} entries")
            if any(not isinstance(a, int) or isinstance(a, bool) for a in f):
                raise ConfigError(f"framing {f} must be integers")
        if self.expansion_cutoff is not None and self.use_expansion:
            if self.expansion_cutoff < self.required_cutoff:
                raise ConfigError(
                    f"expansion cutoff {self.expansion_cutoff} is below the largest "
                    f"Frobenius coordinate in range ({self.required_cutoff})"
                )
        if self.sign_variant != ALL_VARIANTS:
            try:
                ThreeLegVariant.parse(self.sign_variant)
            except ValueError as exc:
                raise ConfigError(str(exc)) from None
        return self

    def echo(self) -> dict:
        """Configuration fields that determine the report body."""
        d = asdict(self)
        d.pop("jobs")
        d.pop("output_path")
        d["framings"] = [list(f) for f in self.framings]
        return d

    @classmethod
    def from_mapping(cls, data: dict) -> SweepConfig:
        known = {f for f in cls.__dataclass_fields__}
        extra = set(data) - known
        if extra:
            raise ConfigError(f"unknown configuration keys: {sorted(extra)}")
        data = dict(data)
        if "framings" in data:
            data["framings"] = parse_framings(data["framings"])
        try:
            return cls(**data)
        except TypeError as exc:
            raise ConfigError(str(exc)) from None


def parse_framings(value) -> tuple[tuple[int, ...], ...]:
    """Accept ``"0,1;1,-1"`` or a list of integer lists."""
    if isinstance(value, str):
        out = []
        for chunk in value.split(";"):
            chunk = chunk.strip()
            if not chunk:
                continue
            try:
                out.append(tuple(int(x) for x in chunk.split(",")))
            except ValueError:
                raise ConfigError(f"cannot parse framing {chunk!r}") from None
        return tuple(out)
    try:
        return tuple(tuple(int(a) for a in f) for f in value)
    except (TypeError, ValueError):
        raise ConfigError(f"cannot parse framings {value!r}") from None


def load_config_file(path: str | os.PathLike) -> dict:
    """Key-value configuration from a TOML or JSON file."""
    p = FsPath(path)
    try:
        raw = p.read_bytes()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {p}: {exc}") from None
    if p.suffix == ".json":
        try:
            data = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"bad JSON in {p}: {exc}") from None
    else:
        try:
            import tomllib
        except ModuleNotFoundError:
            import tomli as tomllib
        try:
            data = tomllib.loads(raw.decode())
        except (tomllib.TOMLDecodeError, UnicodeDecodeError) as exc:
            raise ConfigError(f"bad TOML in {p}: {exc}") from None
    if not isinstance(data, dict):
        raise ConfigError("configuration must be a table of keys")
    return data


# enumeration --------------------------------------------------------------


def _compositions(total: int, parts: int, cap: int) -> Iterator[tuple[int, ...]]:
    """Size vectors summing to ``total``, each entry ``<= cap``, in reverse-lex order."""
    if parts == 1:
        if total <= cap:
            yield (total,)
        return
    for first in range(min(total, cap), -1, -1):
        for rest in _compositions(total - first, parts - 1, cap):
            yield (first,) + rest


def partition_tuples(legs: int, max_total: int, max_leg: int | None = None) -> list[tuple[Partition, ...]]:
    """All tuples in report order: by total size, then size vector, then partitions.

    Size vectors and partitions are each taken in reverse-lexicographic order.
    """
    cap = max_total if max_leg is None else max_leg
    out = []
    for total in range(max_total + 1):
        for sizes in _compositions(total, legs, cap):
            out.extend(product(*(enumerate_partitions(s) for s in sizes)))
    return out


# evaluation ---------------------------------------------------------------


def sample_points(cfg: SweepConfig) -> list[Fraction]:
    rng = random.Random(cfg.seed)
    pts: list[Fraction] = []
    while len(pts) < cfg.sample_points:
        t0 = Fraction(rng.randint(2, 97), rng.randint(1, 97))
        if rng.random() < 0.5:
            t0 = -t0
        if abs(t0) != 1 and t0 not in pts:
            pts.append(t0)
    return pts


def _pad(mus: Sequence[Partition]) -> tuple[Partition, Partition, Partition]:
    return tuple(mus) + ((),) * (3 - len(mus))


def _cache_file(key: str) -> FsPath | None:
    root = os.environ.get(CACHE_ENV)
    if not root:
        return None
    digest = hashlib.sha256(key.encode()).hexdigest()[:32]
    return FsPath(root) / f"expansion-{digest}.json"


@lru_cache(maxsize=64)
def _expansion(legs: int, framing: Framing, cutoff: int, leg_cap: int, total_cap: int, field) -> dict:
    """Charge-zero part of the truncated expansion, read through the disk cache."""
    path = None
    if field is EXACT:
        key = json.dumps([artifact_version(), legs, framing.as_tuple(), cutoff, leg_cap, total_cap])
        path = _cache_file(key)
        if path is not None and path.exists():
            try:
                state = FockState.from_json(json.loads(path.read_text()))
                if state.legs == legs or not state.terms:
                    return FockState(legs, state.terms).charge_zero()
            except (OSError, ValueError, KeyError):
                log.warning("ignoring unreadable cache entry %s", path)
    coeffs = BogoliubovCoeffs(framing, legs, field)
    state = fock_expand(coeffs, legs, cutoff=cutoff, max_leg_size=leg_cap, max_total_size=total_cap)
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            json.dump(state.to_json(), fh)
        os.replace(tmp, path)
    return state.charge_zero()


def _values(cfg: SweepConfig, framing: Framing, mus: tuple[Partition, ...], field) -> tuple:
    """(bosonic value, {fermionic path name: value}) in ``field``."""
    a = framing.as_tuple()
    bos = w_framed(*_pad(mus), framing, field)
    ferm: dict[str, object] = {}
    if cfg.legs == 1:
        ferm[Path.FERMION_DET.value] = det_leg1(mus[0], a[0], field)
    elif cfg.legs == 2:
        ferm[Path.FERMION_DET.value] = det_leg2(mus[0], mus[1], a[0], a[1], field)
    else:
        for v in cfg.variants():
            ferm[f"{Path.FERMION_DET.value}[{v.name}]"] = det_leg3(*mus, framing, v, field)
    cutoff = cfg.cutoff
    if cutoff is not None:
        cz = _expansion(cfg.legs, framing, cutoff, cfg.leg_bound, cfg.max_total_size, field)
        ferm[Path.FERMION_EXPANSION.value] = cz.get(tuple(mus), field.zero)
    return bos, ferm


def _primary_name(cfg: SweepConfig) -> str:
    if cfg.legs < 3:
        return Path.FERMION_DET.value
    if cfg.sign_variant == ALL_VARIANTS:
        return f"{Path.FERMION_DET.value}[{DEFAULT_VARIANT.name}]"
    return f"{Path.FERMION_DET.value}[{cfg.variants()[0].name}]"


def _verdict(cfg: SweepConfig, bos, ferm: dict) -> tuple[bool, dict]:
    primary = ferm[_primary_name(cfg)]
    expansion = ferm.get(Path.FERMION_EXPANSION.value)
    ok = primary == bos and (expansion is None or expansion == primary)
    detail = {}
    if cfg.legs == 3:
        for name, val in ferm.items():
            if name == Path.FERMION_EXPANSION.value:
                continue
            detail[name] = {
                "expansion": None if expansion is None else val == expansion,
                "bosonic": val == bos,
            }
    return ok, detail


def _evaluate_chunk(cfg: SweepConfig, framing: Framing, tuples: list, points: list) -> list[dict]:
    records = []
    for mus in tuples:
        rec: dict = {"partitions": [list(m) for m in mus], "framing": list(framing.as_tuple()[: cfg.legs])}
        if points:
            agree = True
            for t0 in points:
                pf = PointField(t0)
                bos_p, ferm_p = _values(cfg, framing, mus, pf)
                agree = agree and _verdict(cfg, bos_p, ferm_p)[0]
            rec["sampled_agree"] = agree
        bos, ferm = _values(cfg, framing, mus, EXACT)
        ok, detail = _verdict(cfg, bos, ferm)
        rec["bosonic_value"] = bos.to_json()
        keep = (_primary_name(cfg), Path.FERMION_EXPANSION.value)
        rec["fermionic_values"] = {k: _as_qrat(v).to_json() for k, v in ferm.items() if k in keep}
        rec["paths"] = [Path.SKEW_SCHUR_FORMULA.value] + sorted(
            {Path.FERMION_DET.value} | ({Path.FERMION_EXPANSION.value} if cfg.cutoff is not None else set())
        )
        if detail:
            rec["variants"] = detail
        rec["match"] = ok
        records.append(rec)
    return records


def _as_qrat(v) -> QRat:
    return v if isinstance(v, QRat) else QRat(v)


# reports ------------------------------------------------------------------


@dataclass
class VerifyReport:
    records: list[dict]
    summary: dict
    timing: dict = field(default_factory=dict)
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.error is None and self.summary.get("mismatches", 0) == 0

    def exit_code(self) -> int:
        if self.error is not None:
            return 2
        return 0 if self.ok else 1

    def body(self) -> dict:
        out = {"records": self.records, "summary": self.summary}
        if self.error is not None:
            out["error"] = self.error
        return out

    def body_json(self) -> str:
        return json.dumps(self.body(), sort_keys=True, indent=1)

    def to_json(self) -> dict:
        out = self.body()
        out["timing"] = self.timing
        return out

    def write(self, path: str | os.PathLike) -> None:
        text = json.dumps(self.to_json(), sort_keys=True, indent=1) + "\n"
        FsPath(path).write_text(text)


def _summarise(cfg: SweepConfig, records: list[dict]) -> dict:
    matches = sum(1 for r in records if r["match"])
    summary = {
        "total": len(records),
        "matches": matches,
        "mismatches": len(records) - matches,
        "config": cfg.echo(),
        "version": artifact_version(),
    }
    if cfg.mode == "sampled":
        summary["sampled_disagreements"] = sum(1 for r in records if not r.get("sampled_agree", True))
    if cfg.legs == 3:
        table: dict[str, dict[str, int]] = {}
        for r in records:
            for name, d in r.get("variants", {}).items():
                row = table.setdefault(name, {"agree_expansion": 0, "agree_bosonic": 0})
                row["agree_expansion"] += bool(d["expansion"])
                row["agree_bosonic"] += bool(d["bosonic"])
        summary["variants"] = table
        if cfg.cutoff is not None:
            consistent = sorted(
                n[len(Path.FERMION_DET.value) + 1 : -1]
                for n, row in table.items()
                if row["agree_expansion"] == len(records)
            )
            summary["consistent_variants"] = consistent
            summary["surviving_variant"] = consistent[0] if len(consistent) == 1 else None
    return summary


def _chunks(items: list, size: int) -> Iterator[list]:
    for i in range(0, len(items), size):
        yield items[i : i + size]


def run_sweep(cfg: SweepConfig) -> VerifyReport:
    """Evaluate every tuple and framing in range and compare the two sides exactly."""
    cfg.validate()
    start = time.perf_counter()
    tuples = partition_tuples(cfg.legs, cfg.max_total_size, cfg.max_leg_size)
    points = sample_points(cfg) if cfg.mode == "sampled" else []
    # few chunks per framing: each chunk rebuilds that framing's expansion
    per_framing = max(1, -(-cfg.jobs // len(cfg.framings)))
    size = max(1, -(-len(tuples) // per_framing))
    tasks = [(cfg, f, chunk, points) for f in cfg.padded_framings() for chunk in _chunks(tuples, size)]
    records: list[dict] = []
    error = None
    if cfg.jobs == 1:
        for task in tasks:
            try:
                records.extend(_evaluate_chunk(*task))
            except Exception as exc:
                error = f"{type(exc).__name__}: {exc}"
                break
    else:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            futures = [pool.submit(_evaluate_chunk, *task) for task in tasks]
            for fut in futures:
                try:
                    records.extend(fut.result())
                except Exception as exc:
                    error = f"{type(exc).__name__}: {exc}"
                    for rest in futures:
                        rest.cancel()
                    break
    report = VerifyReport(
        records,
        _summarise(cfg, records),
        {"elapsed_seconds": round(time.perf_counter() - start, 3), "jobs": cfg.jobs},
        error,
    )
    if cfg.output_path:
        report.write(cfg.output_path)
    if error is not None:
        raise SweepAborted(error, report)
    return report


# self-checks ---------------------------------------------------------------


def _suite_kappa() -> tuple[int, list[str]]:
    bad, n = [], 0
    for mu in partitions_up_to(12):
        n += 1
        fc = to_frobenius(mu)
        by_frobenius = sum(m * (m + 1) - k * (k + 1) for m, k in zip(fc.m, fc.n))
        if not kappa(mu) == 2 * sum(contents(mu)) == by_frobenius == -kappa(conjugate(mu)):
            bad.append(str(mu))
        if from_frobenius(fc) != mu:
            bad.append(f"round trip {mu}")
    return n, bad


def _suite_schur_paths() -> tuple[int, list[str]]:
    bad, n = [], 0
    for mu in partitions_up_to(8):
        n += 1
        hook = schur_at_rho(mu)
        if not hook == schur_at(mu) == schur_hook_determinant(mu):
            bad.append(str(mu))
        if schur_at(mu, NEG_RHO) != hook.invert_q():
            bad.append(f"inversion {mu}")
    return n, bad


def _suite_newton() -> tuple[int, list[str]]:
    bad = []
    for n in range(1, 9):
        h = [elem_and_homog_at(RHO, k)[1] for k in range(n + 1)]
        e = [elem_and_homog_at(RHO, k)[0] for k in range(n + 1)]
        p = [None] + [power_sum_at_rho(k) for k in range(1, n + 1)]
        hs = sum((p[k] * h[n - k] for k in range(1, n + 1)), QRat(0))
        es = sum((p[k] * e[n - k] * (-1 if (k - 1) & 1 else 1) for k in range(1, n + 1)), QRat(0))
        if hs != h[n] * n or es != e[n] * n:
            bad.append(f"n={n}")
    return 8, bad


def _suite_wtt() -> tuple[int, list[str]]:
    bad, n = [], 0
    for mu, nu in partition_tuples(2, 6):
        n += 1
        if not check_wtt(mu, nu):
            bad.append(f"Wtt {mu} {nu}")
        if not check_two_leg_reduction(mu, nu):
            bad.append(f"reduction {mu} {nu}")
    return n, bad


def _small_states(codes_up: int, codes_down: int) -> list:
    from .fermion.fock import FockBasisState

    out = []
    ups = range(codes_up)
    downs = range(-1, -codes_down - 1, -1)
    for a in range(1 << codes_up):
        added = tuple(x for x in reversed(ups) if a >> x & 1)
        for b in range(1 << codes_down):
            removed = tuple(x for x in downs if b >> (-x - 1) & 1)
            out.append(FockBasisState(added, removed))
    return out


def _suite_anticommutation() -> tuple[int, list[str]]:
    bad, n = [], 0
    modes = [Fraction(2 * k + 1, 2) for k in range(-5, 5)]  # |r| <= 9/2
    one_leg = _small_states(4, 4)
    ops = [(False, False), (True, True), (False, True)]
    for s in one_leg[::3]:
        v = FockState(1, {(s,): QRat(1)})
        for r in modes:
            for x in modes:
                for star_r, star_x in ops:
                    n += 1
                    lhs = v.apply(0, x, star_x).apply(0, r, star_r) + v.apply(0, r, star_r).apply(0, x, star_x)
                    expect = v if (star_r != star_x and r == x) else FockState(1)
                    if lhs != expect:
                        bad.append(f"{s} r={r} s={x}")
    two = _small_states(2, 2)
    for s1 in two:
        for s2 in two[::2]:
            v = FockState(2, {(s1, s2): QRat(1)})
            for r in modes[3:7]:
                for x in modes[3:7]:
                    for star_r, star_x in ops:
                        n += 1
                        lhs = v.apply(1, x, star_x).apply(0, r, star_r) + v.apply(0, r, star_r).apply(1, x, star_x)
                        if lhs != FockState(2):
                            bad.append(f"cross {s1},{s2} r={r} s={x}")
    return n, bad


def _psi_string(A: Sequence[int], B: Sequence[int], state: FockState) -> FockState:
    """Apply ``prod_i psi_{a_i+1/2} psi*_{-b_i-1/2}`` with the first factor leftmost."""
    for a, b in reversed(list(zip(A, B))):
        state = apply_psi_star(Fraction(-2 * b - 1, 2), state)
        state = apply_psi(Fraction(2 * a + 1, 2), state)
    return state


def _suite_fermion_split() -> tuple[int, list[str]]:
    from itertools import combinations

    bad, n = [], 0
    eps = _coeffs.epsilon_sign  # looked up at call time
    vac = FockState.vacuum(1)
    for mu in partitions_up_to(6):
        fc = to_frobenius(mu)
        whole = _psi_string(fc.m, fc.n, vac)
        for r in range(fc.rank + 1):
            for A in combinations(fc.m, r):
                MA = tuple(x for x in fc.m if x not in A)
                for B in combinations(fc.n, r):
                    NB = tuple(x for x in fc.n if x not in B)
                    n += 1
                    lhs = _psi_string(A, B, _psi_string(MA, NB, vac))
                    sign = eps(fc.m, A) * eps(fc.n, B)
                    if lhs != whole.scale(QRat(sign)):
                        bad.append(f"{mu} A={A} B={B}")
    return n, bad


def _suite_det_blocks() -> tuple[int, list[str]]:
    """Diagonal block determinants against hook Schur determinants."""
    bad, n = [], 0
    for a in (-1, 0, 2):
        coeffs = BogoliubovCoeffs(Framing(a), 1)
        for mu in partitions_up_to(8):
            n += 1
            fc = to_frobenius(mu)
            lhs = det([[coeffs(1, 1, m, k) for k in fc.n] for m in fc.m])
            rhs = schur_hook_determinant(mu) * QRat.monomial(12 * a * kappa(mu))
            if lhs != (rhs if sum(fc.n) % 2 == 0 else -rhs):
                bad.append(f"a={a} {mu}")
    return n, bad


def _suite_two_leg() -> tuple[int, list[str]]:
    bad, n = [], 0
    for a1, a2 in product((-1, 0, 1), repeat=2):
        for mu, nu in partition_tuples(2, 5):
            n += 1
            if det_leg2(mu, nu, a1, a2) != two_leg_coefficient(mu, nu, a1, a2):
                bad.append(f"({a1},{a2}) {mu} {nu}")
    return n, bad


SUITES: dict[str, Callable[[], tuple[int, list[str]]]] = {
    "kappa_and_frobenius": _suite_kappa,
    "schur_specialization_paths": _suite_schur_paths,
    "newton_identities": _suite_newton,
    "wtt_and_reduction": _suite_wtt,
    "anticommutation": _suite_anticommutation,
    "fermion_split_signs": _suite_fermion_split,
    "diagonal_block_determinants": _suite_det_blocks,
    "two_leg_sweep": _suite_two_leg,
}


def run_selfcheck(suites: Sequence[str] | None = None) -> VerifyReport:
    """Run the invariant suites; each record reports one suite."""
    start = time.perf_counter()
    names = list(SUITES) if suites is None else list(suites)
    records = []
    for name in names:
        t = time.perf_counter()
        try:
            checked, bad = SUITES[name]()
            error = None
        except Exception as exc:
            checked, bad, error = 0, [], f"{type(exc).__name__}: {exc}"
        rec = {"suite": name, "checked": checked, "failures": bad[:20], "match": not bad and error is None}
        if error:
            rec["error"] = error
        rec["seconds"] = round(time.perf_counter() - t, 3)
        records.append(rec)
    matches = sum(r["match"] for r in records)
    summary = {
        "total": len(records),
        "matches": matches,
        "mismatches": len(records) - matches,
        "version": artifact_version(),
    }
    return VerifyReport(records, summary, {"elapsed_seconds": round(time.perf_counter() - start, 3)})


# tables -------------------------------------------------------------------


@dataclass(frozen=True)
class TableConfig:
    legs: int = 1
    max_size: int = 3
    framing: tuple[int, ...] = (0,)
    format: str = "csv"
    output_path: str | None = None
    min_size: int = 0

    def validate(self) -> TableConfig:
        if self.legs not in (1, 2, 3):
            raise ConfigError("legs must be 1, 2 or 3")
        if self.format not in ("csv", "json"):
            raise ConfigError("format must be csv or json")
        if not 1 <= len(self.framing) <= self.legs:
            raise ConfigError(f"framing must have between 1 and {self.legs} entries")
        if self.max_size < 0 or self.min_size < 0:
            raise ConfigError("sizes must be nonnegative")
        return self


def table_rows(cfg: TableConfig) -> list[dict]:
    cfg.validate()
    f = Framing.of(cfg.framing)
    rows = []
    for mus in partition_tuples(cfg.legs, cfg.max_size):
        if sum(map(sum, mus)) < cfg.min_size:
            continue
        value = w_framed(*_pad(mus), f)
        row = {f"mu{i + 1}": " ".join(map(str, m)) for i, m in enumerate(mus)}
        row["framing"] = ",".join(map(str, f.as_tuple()[: cfg.legs]))
        row["value"] = str(value)
        row["value_json"] = json.dumps(value.to_json(), sort_keys=True, separators=(",", ":"))
        rows.append(row)
    return rows


def emit_table(cfg: TableConfig) -> str:
    """Write the framed vertex values for the configured range; returns the text."""
    rows = table_rows(cfg)
    header = [f"mu{i + 1}" for i in range(cfg.legs)] + ["framing", "value", "value_json"]
    if cfg.format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=header, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        text = buf.getvalue()
    else:
        for r in rows:
            r["value_json"] = json.loads(r["value_json"])
        text = json.dumps(rows, sort_keys=True, indent=1) + "\n"
    if cfg.output_path:
        try:
            with open(cfg.output_path, "w", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            raise ConfigError(f"cannot write {cfg.output_path}: {exc}") from None
    return text


def with_overrides(cfg, **changes):
    """Copy of a frozen config with the non-None entries of ``changes`` applied."""
    return replace(cfg, **{k: v for k, v in changes.items() if v is not None})
