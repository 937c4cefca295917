"""Run configurations, parameter sweeps and CSV output."""
from __future__ import annotations

import ast
import csv
import io
import math
import operator
from dataclasses import dataclass, field
from pathlib import Path

from .dynamics import BathParams, Regime
from .grid import Grid1D, Grid2D
from .hermite import OscillatorParams
from . import ho, moshinsky
from .info import InfoRecord, check_bounds

SCHEMA_VERSION = 1
MODELS = ("ho", "moshinsky")


class ConfigError(ValueError):
    pass


_BINOPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul, ast.Div: operator.truediv}


def parse_number(text) -> float:
    """Parse a float, allowing ``pi`` and simple arithmetic (``pi/2``, ``4*pi``)."""
    if isinstance(text, (int, float)):
        return float(text)
    src = str(text).strip().lower()
    if src.endswith("pi") and src[:-2] and src[-3:-2].isdigit():
        src = src[:-2] + "*pi"

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
            return float(node.value)
        if isinstance(node, ast.Name) and node.id == "pi":
            return math.pi
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            return _BINOPS[type(node.op)](ev(node.left), ev(node.right))
        raise ConfigError(f"cannot parse number {text!r}")

    try:
        return ev(ast.parse(src, mode="eval"))
    except (SyntaxError, ZeroDivisionError) as exc:
        raise ConfigError(f"cannot parse number {text!r}") from exc


def parse_list(text) -> tuple[float, ...]:
    if isinstance(text, (list, tuple)):
        return tuple(parse_number(v) for v in text)
    items = [s for s in str(text).replace(";", ",").split(",") if s.strip()]
    return tuple(parse_number(s) for s in items)


@dataclass(frozen=True)
class RunConfig:
    """Everything needed to reproduce a sweep.

    ``lambdas`` is ignored for the harmonic oscillator. ``times`` overrides
    the ``t_start/t_stop/t_step`` grid when given.
    """

    model: str = "ho"
    regime: Regime = Regime.PURE_DEPHASING
    omega: float = 1.0
    gammas: tuple = (0.15,)
    lambdas: tuple = (0.0,)
    t_start: float = 0.0
    t_stop: float = 4 * math.pi
    t_step: float = math.pi / 100
    times: tuple | None = None
    grid_half_width: float = 8.0
    grid_points: int = 2001
    grid_points_2d: int = 401
    space: str = "x"
    out: str | None = None

    def __post_init__(self):
        if self.model not in MODELS:
            raise ConfigError(f"model must be one of {MODELS}, got {self.model!r}")
        try:
            object.__setattr__(self, "regime", Regime.parse(self.regime))
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
        if not self.omega > 0:
            raise ConfigError("omega must be > 0")
        if not self.t_step > 0:
            raise ConfigError("t_step must be > 0")
        if self.t_stop < self.t_start or self.t_start < 0:
            raise ConfigError("need 0 <= t_start <= t_stop")
        if not self.gammas or not self.lambdas:
            raise ConfigError("gamma and lambda lists must be non-empty")
        if any(g < 0 for g in self.gammas):
            raise ConfigError("gamma values must be >= 0")
        limit = 0.5 * self.omega**2
        if any(not 0 <= lam < limit for lam in self.lambdas):
            raise ConfigError(f"lambda values must lie in [0, {limit!r}) for omega={self.omega!r}")
        if self.times is not None and (not self.times or min(self.times) < 0):
            raise ConfigError("times must be a non-empty list of values >= 0")
        if self.space not in ("x", "p"):
            raise ConfigError("space must be 'x' or 'p'")
        try:
            self.grid1d, self.grid2d
        except ValueError as exc:
            raise ConfigError(str(exc)) from None

    @property
    def grid1d(self) -> Grid1D:
        return Grid1D(self.grid_half_width, self.grid_points)

    @property
    def grid2d(self) -> Grid2D:
        return Grid2D.square(self.grid_half_width, self.grid_points_2d)

    def time_grid(self) -> tuple[float, ...]:
        if self.times is not None:
            return tuple(self.times)
        count = int(math.floor((self.t_stop - self.t_start) / self.t_step + 1e-9)) + 1
        return tuple(self.t_start + k * self.t_step for k in range(count))

    def bath(self, gamma: float) -> BathParams:
        return BathParams(gamma, self.regime)


def default_lambda_grid(omega: float = 1.0, points: int = 19) -> tuple[float, ...]:
    """Evenly spaced values on ``[0, 0.9 * omega**2 / 2]``, clear of the unbound threshold."""
    top = 0.45 * omega**2
    return tuple(top * k / (points - 1) for k in range(points))


_KEYS = {
    "model": ("model", str),
    "regime": ("regime", str),
    "omega": ("omega", parse_number),
    "gamma": ("gammas", parse_list),
    "gammas": ("gammas", parse_list),
    "lambda": ("lambdas", parse_list),
    "lambdas": ("lambdas", parse_list),
    "t_start": ("t_start", parse_number),
    "t_stop": ("t_stop", parse_number),
    "t_step": ("t_step", parse_number),
    "times": ("times", parse_list),
    "grid_half_width": ("grid_half_width", parse_number),
    "grid_points": ("grid_points", int),
    "grid_points_2d": ("grid_points_2d", int),
    "space": ("space", str),
    "out": ("out", str),
}


def config_values(pairs: dict) -> dict:
    """Map raw ``key -> text`` pairs onto :class:`RunConfig` field values."""
    values = {}
    for raw_key, raw in pairs.items():
        key = raw_key.strip().lower().replace("-", "_")
        if key not in _KEYS:
            raise ConfigError(f"unknown config key {raw_key!r}")
        name, conv = _KEYS[key]
        try:
            values[name] = conv(raw.strip() if isinstance(raw, str) else raw)
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"bad value for {raw_key!r}: {raw!r}") from exc
    if "model" in values:
        values["model"] = values["model"].lower()
    return values


def read_config_file(path) -> dict:
    """Read a flat ``key = value`` file; ``#`` starts a comment."""
    pairs = {}
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value'")
        key, value = line.split("=", 1)
        pairs[key.strip()] = value.strip()
    return config_values(pairs)


def load_config(path=None, default_lambda_sweep: bool = False, **overrides) -> RunConfig:
    """Config from an optional file with keyword overrides on top.

    With ``default_lambda_sweep`` an unset lambda list becomes
    :func:`default_lambda_grid` for the configured ``omega``.
    """
    values = read_config_file(path) if path else {}
    values.update(config_values({k: v for k, v in overrides.items() if v is not None}))
    if default_lambda_sweep and "lambdas" not in values:
        values["lambdas"] = default_lambda_grid(values.get("omega", 1.0))
    try:
        return RunConfig(**values)
    except TypeError as exc:
        raise ConfigError(str(exc)) from None


# -- sweeps ------------------------------------------------------------------

TIME_COLUMNS = (
    ("model", ""), ("regime", ""), ("gamma", "a.u."), ("lambda", "a.u."), ("t", "a.u."),
    ("s_x", "nats"), ("s_p", "nats"), ("s_t", "nats"),
    ("s_x2", "nats"), ("s_p2", "nats"), ("s_T", "nats"),
    ("I_x", "nats"), ("I_p", "nats"), ("I_t", "nats"),
    ("margin_1p", "nats"), ("margin_2p", "nats"), ("bound_ok", ""),
)

LAMBDA_COLUMNS = (
    ("regime", ""), ("gamma", "a.u."), ("t", "a.u."), ("lambda", "a.u."),
    ("s_t", "nats"), ("s_T", "nats"), ("margin_1p", "nats"), ("margin_2p", "nats"), ("bound_ok", ""),
)


@dataclass
class SweepResult:
    """Rows of one sweep plus whether any row violated an entropic bound."""

    kind: str
    columns: tuple
    rows: list = field(default_factory=list)
    violations: int = 0

    def to_csv(self) -> str:
        return write_csv(self.kind, self.columns, self.rows)


def _series(config: RunConfig, gamma: float, lam: float, times, basis_cache: dict) -> list[InfoRecord]:
    bath = config.bath(gamma)
    if config.model == "ho":
        model = ho.HOModel(OscillatorParams(config.omega), bath)
        grid = config.grid1d
        return [ho.info_record(t, model, grid) for t in times]
    params = moshinsky.MoshinskyParams(config.omega, lam, bath)
    basis = basis_cache.get(lam)
    if basis is None:
        basis = basis_cache[lam] = moshinsky.MoshinskyBasis(params, config.grid1d, config.grid2d)
    return [basis.record(t, params.rho(t)) for t in times]


def _flatten(record: InfoRecord) -> dict:
    report = check_bounds(record)
    return {
        "t": record.t,
        "s_x": record.s_x, "s_p": record.s_p, "s_t": record.s_t,
        "s_x2": record.s_x2, "s_p2": record.s_p2, "s_T": record.s_T,
        "I_x": record.I_x, "I_p": record.I_p, "I_t": record.I_t,
        "margin_1p": report.margin_1p, "margin_2p": report.margin_2p,
        "bound_ok": int(report.ok),
    }


def run_time_sweep(config: RunConfig) -> SweepResult:
    """Information measures for every time in the grid and every ``(gamma, lambda)``.

    Rows are ordered by time, then gamma, then lambda, in the order given.
    """
    times = config.time_grid()
    lambdas = config.lambdas if config.model == "moshinsky" else (0.0,)
    cache: dict = {}
    series = {}
    for gamma in config.gammas:
        for lam in lambdas:
            series[gamma, lam] = _series(config, gamma, lam, times, cache)
    result = SweepResult("time-sweep", TIME_COLUMNS)
    for i, _ in enumerate(times):
        for gamma in config.gammas:
            for lam in lambdas:
                row = _flatten(series[gamma, lam][i])
                row.update(model=config.model, regime=config.regime.value, gamma=gamma,
                           **{"lambda": lam if config.model == "moshinsky" else None})
                result.violations += 1 - row["bound_ok"]
                result.rows.append(row)
    return result


def run_lambda_sweep(config: RunConfig, times=None) -> SweepResult:
    """Entropy sums as functions of ``lambda`` at fixed instants (Moshinsky only)."""
    if config.model != "moshinsky":
        raise ConfigError("lambda-sweep needs model = moshinsky")
    times = tuple(times) if times is not None else config.time_grid()
    cache: dict = {}
    series = {(g, lam): _series(config, g, lam, times, cache) for g in config.gammas for lam in config.lambdas}
    result = SweepResult("lambda-sweep", LAMBDA_COLUMNS)
    for gamma in config.gammas:
        for i, t in enumerate(times):
            for lam in config.lambdas:
                full = _flatten(series[gamma, lam][i])
                row = {k: full[k] for k in ("t", "s_t", "s_T", "margin_1p", "margin_2p", "bound_ok")}
                row.update(regime=config.regime.value, gamma=gamma, **{"lambda": lam})
                result.violations += 1 - row["bound_ok"]
                result.rows.append(row)
    return result


def emit_density_snapshots(config: RunConfig, times=None) -> SweepResult:
    """Sampled one-particle densities, one column per ``(gamma, lambda, t)``.

    For the Moshinsky atom the reduced density of one particle is emitted.
    ``config.space`` selects position or momentum.
    """
    times = tuple(times) if times is not None else config.time_grid()
    lambdas = config.lambdas if config.model == "moshinsky" else (0.0,)
    grid = config.grid1d
    axis = config.space
    columns = [(axis, "a.u.")]
    data = []
    for gamma in config.gammas:
        bath = config.bath(gamma)
        for lam in lambdas:
            if config.model == "ho":
                model = ho.HOModel(OscillatorParams(config.omega), bath)
                field_at = ho.position_field if axis == "x" else ho.momentum_field
                fields = [field_at(t, model, grid) for t in times]
            else:
                params = moshinsky.MoshinskyParams(config.omega, lam, bath)
                basis = moshinsky.MoshinskyBasis(params, grid)
                field_at = basis.reduced_field_x if axis == "x" else basis.reduced_field_p
                fields = [field_at(params.rho(t)) for t in times]
            for t, fld in zip(times, fields):
                label = f"n_{axis}(gamma={_fmt(gamma)};lambda={_fmt(lam)};t={_fmt(t)})"
                columns.append((label, "1/a.u."))
                data.append(fld.values)
    result = SweepResult("density", tuple(columns))
    for i, u in enumerate(grid.nodes):
        row = {axis: float(u)}
        for (name, _), values in zip(columns[1:], data):
            row[name] = float(values[i])
        result.rows.append(row)
    return result


# -- CSV -----------------------------------------------------------------------

def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(int(value))
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if math.isnan(value):
            return ""
        text = format(value, ".15g")
        return "0" if text == "-0" else text
    return str(value)


def write_csv(kind: str, columns, rows) -> str:
    """RFC 4180 text: a version comment line, a header with units, then rows."""
    buf = io.StringIO()
    buf.write(f"# oqsinfo {kind} schema v{SCHEMA_VERSION}; atomic units (hbar = m = 1), entropies in nats\r\n")
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow([f"{name} [{unit}]" if unit else name for name, unit in columns])
    for row in rows:
        writer.writerow([_fmt(row.get(name)) for name, _ in columns])
    return buf.getvalue()


def read_csv(text: str) -> list[dict]:
    """Parse text from :func:`write_csv` back into dicts keyed by bare column name."""
    lines = [ln for ln in text.splitlines() if not ln.startswith("#")]
    reader = csv.reader(lines)
    header = [h.split(" [", 1)[0] for h in next(reader)]
    return [dict(zip(header, row)) for row in reader]
