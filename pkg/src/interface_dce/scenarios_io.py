"""
Scenario files, CSV output and a small SVG line plot.

Scenario files are UTF-8, one ``key = value`` per line, ``#`` starts a
comment.  Keys::

    name        = fig3
    slab_L      = 0.31415926535897931      # or: slab_L_pi = 0.1  (units of pi)
    reflection  = -0.988                   # repeatable; or: reflection = mirror
    media       = constant 1.0 0.0 constant 165.667 0.0   # repeatable
    y_min       = 0.01
    y_max       = 1.0
    y_count     = 200
    method      = quadrature | closed_form | expansion | mirror_limit
    quad_order  = 32                       # optional
    profile     = sharp | exponential      # optional

``reflection`` and ``media`` lines each define one curve, in file order.
A medium is ``constant <eta> <kappa>`` or ``lorentz <resonance> <plasma> <damping>``.
"""
from __future__ import annotations

import dataclasses
import math
import os
import sys
import tempfile
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Tuple
from xml.sax.saxutils import escape

import numpy as np

from .dispersion import ConstantComplex, ConstantReal, LorentzOscillator
from .errors import DceError, ScenarioFileError
from .spectrum import (
    DEFAULT_QUAD_ORDER,
    FixedReflection,
    MediaPair,
    PerfectMirror,
    Scenario,
)

BUNDLED = ("fig3", "fig4")

_SCALAR_KEYS = ("name", "slab_L", "slab_L_pi", "y_min", "y_max", "y_count",
                "method", "quad_order", "profile")


@dataclass(frozen=True)
class ScenarioFile:
    name: str
    slab_L: float
    reflections: Tuple[object, ...]
    y_min: float
    y_max: float
    y_count: int
    method: str = "quadrature"
    quad_order: int = DEFAULT_QUAD_ORDER
    profile: str = "sharp"

    def __post_init__(self):
        object.__setattr__(self, "reflections", tuple(self.reflections))
        if not self.name:
            raise ScenarioFileError("name must not be empty", field="name")
        if not self.reflections:
            raise ScenarioFileError("at least one reflection or media line is required", field="reflection")
        if not 0.0 < self.y_min < self.y_max <= 1.0:
            raise ScenarioFileError(
                f"need 0 < y_min < y_max <= 1, got y_min={self.y_min}, y_max={self.y_max}", field="y_min")
        if self.y_count < 1:
            raise ScenarioFileError(f"y_count must be >= 1, got {self.y_count}", field="y_count")
        # builds (and thereby validates) every curve
        self.scenarios()

    def grid(self):
        return tuple(np.linspace(self.y_min, self.y_max, self.y_count).tolist())

    def scenarios(self):
        """One Scenario per reflection entry, all sharing the grid."""
        grid = self.grid()
        out = []
        for refl in self.reflections:
            try:
                out.append(Scenario(
                    slab_L=self.slab_L, reflection=refl, y_grid=grid, method=self.method,
                    quad_order=self.quad_order, profile=self.profile,
                ))
            except DceError as exc:
                raise ScenarioFileError(f"{refl.label}: {exc}") from exc
        return out

    def with_overrides(self, method=None, quad_order=None):
        changes = {}
        if method is not None:
            changes["method"] = method
        if quad_order is not None:
            changes["quad_order"] = quad_order
        return dataclasses.replace(self, **changes)


# ------------------------------------------------------------------ parsing

def _parse_float(text, key, line):
    try:
        value = float(text)
    except ValueError:
        raise ScenarioFileError(f"expected a number, got {text!r}", line=line, field=key) from None
    if not math.isfinite(value):
        raise ScenarioFileError(f"expected a finite number, got {text!r}", line=line, field=key)
    return value


def _parse_int(text, key, line):
    try:
        return int(text)
    except ValueError:
        raise ScenarioFileError(f"expected an integer, got {text!r}", line=line, field=key) from None


def _parse_medium(tokens, line):
    kind = tokens[0]
    nums = [_parse_float(t, "media", line) for t in tokens[1:]]
    try:
        if kind == "constant":
            if len(nums) == 1:
                nums.append(0.0)
            if len(nums) != 2:
                raise ScenarioFileError("constant medium takes <eta> [<kappa>]", line=line, field="media")
            return ConstantReal(nums[0]) if nums[1] == 0.0 else ConstantComplex(*nums)
        if kind == "lorentz":
            if len(nums) != 3:
                raise ScenarioFileError("lorentz medium takes <resonance> <plasma> <damping>",
                                        line=line, field="media")
            return LorentzOscillator(*nums)
    except ScenarioFileError:
        raise
    except DceError as exc:
        raise ScenarioFileError(str(exc), line=line, field="media") from exc
    raise ScenarioFileError(f"unknown medium type {kind!r}", line=line, field="media")


def _parse_media(value, line):
    tokens = value.split()
    # split "<kind> args... <kind> args..." at the second kind keyword
    starts = [i for i, t in enumerate(tokens) if t in ("constant", "lorentz")]
    if len(starts) != 2 or starts[0] != 0:
        raise ScenarioFileError("expected two media, e.g. 'constant 1.0 0.0 constant 3.0 0.0'",
                                line=line, field="media")
    return MediaPair(_parse_medium(tokens[:starts[1]], line), _parse_medium(tokens[starts[1]:], line))


def _parse_reflection(value, line):
    if value == "mirror":
        return PerfectMirror()
    r = _parse_float(value, "reflection", line)
    try:
        return FixedReflection(r)
    except DceError as exc:
        raise ScenarioFileError(str(exc), line=line, field="reflection") from exc


def parse_scenario_file(text: str) -> ScenarioFile:
    """Parse and validate scenario-file text. Raises ScenarioFileError."""
    scalars = {}
    reflections = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if not content:
            continue
        if "=" not in content:
            raise ScenarioFileError(f"expected 'key = value', got {content!r}", line=lineno)
        key, value = (part.strip() for part in content.split("=", 1))
        if not value:
            raise ScenarioFileError("missing value", line=lineno, field=key)
        if key == "reflection":
            reflections.append(_parse_reflection(value, lineno))
        elif key == "media":
            reflections.append(_parse_media(value, lineno))
        elif key in _SCALAR_KEYS:
            if key in scalars:
                raise ScenarioFileError("duplicate key", line=lineno, field=key)
            scalars[key] = (value, lineno)
        else:
            raise ScenarioFileError("unknown key", line=lineno, field=key)

    if "slab_L" in scalars and "slab_L_pi" in scalars:
        raise ScenarioFileError("give either slab_L or slab_L_pi, not both",
                                line=scalars["slab_L_pi"][1], field="slab_L_pi")
    for key in ("name", "y_min", "y_max", "y_count", "method"):
        if key not in scalars:
            raise ScenarioFileError("missing required key", field=key)
    if "slab_L" in scalars:
        slab = _parse_float(scalars["slab_L"][0], "slab_L", scalars["slab_L"][1])
        slab_key = "slab_L"
    elif "slab_L_pi" in scalars:
        slab = math.pi * _parse_float(scalars["slab_L_pi"][0], "slab_L_pi", scalars["slab_L_pi"][1])
        slab_key = "slab_L_pi"
    else:
        raise ScenarioFileError("missing required key", field="slab_L")
    if not slab > 0:
        raise ScenarioFileError(f"must be positive, got {slab}", line=scalars[slab_key][1], field=slab_key)

    def number(key, parse=_parse_float):
        value, lineno = scalars[key]
        return parse(value, key, lineno)

    fields = dict(
        name=scalars["name"][0],
        slab_L=slab,
        reflections=reflections,
        y_min=number("y_min"),
        y_max=number("y_max"),
        y_count=number("y_count", _parse_int),
        method=scalars["method"][0],
    )
    if "quad_order" in scalars:
        fields["quad_order"] = number("quad_order", _parse_int)
    if "profile" in scalars:
        fields["profile"] = scalars["profile"][0]
    return ScenarioFile(**fields)


def _format_medium(m):
    if isinstance(m, ConstantReal):
        return f"constant {m.eta!r} 0.0"
    if isinstance(m, ConstantComplex):
        return f"constant {m.eta!r} {m.kappa!r}"
    return f"lorentz {m.resonance_y!r} {m.plasma_y!r} {m.damping_y!r}"


def format_scenario_file(sf: ScenarioFile) -> str:
    """Serialize `sf`; ``parse_scenario_file(format_scenario_file(sf)) == sf``."""
    lines = [f"name = {sf.name}", f"slab_L = {sf.slab_L!r}"]
    for refl in sf.reflections:
        if isinstance(refl, FixedReflection):
            lines.append(f"reflection = {refl.r_left!r}")
        elif isinstance(refl, PerfectMirror):
            lines.append("reflection = mirror")
        else:
            lines.append(f"media = {_format_medium(refl.medium1)} {_format_medium(refl.medium2)}")
    lines += [
        f"y_min = {sf.y_min!r}",
        f"y_max = {sf.y_max!r}",
        f"y_count = {sf.y_count}",
        f"method = {sf.method}",
        f"quad_order = {sf.quad_order}",
        f"profile = {sf.profile}",
    ]
    return "\n".join(lines) + "\n"


def bundled_scenario_text(name: str) -> str:
    return resources.files("interface_dce").joinpath("scenarios", f"{name}.cfg").read_text(encoding="utf-8")


def load_scenario(source: str) -> ScenarioFile:
    """Load a scenario from a file path, or one of the bundled names ``fig3``/``fig4``."""
    path = Path(source)
    if path.is_file():
        text = path.read_text(encoding="utf-8")
    elif source in BUNDLED:
        text = bundled_scenario_text(source)
    else:
        raise FileNotFoundError(f"no such file and no bundled scenario named {source!r}")
    return parse_scenario_file(text)


# ------------------------------------------------------------------ output

def _atomic_write(destination, text):
    if destination == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    if hasattr(destination, "write"):
        destination.write(text)
        return
    path = Path(destination)
    fd, tmp = tempfile.mkstemp(dir=path.parent if str(path.parent) else ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _num(value):
    # 17 significant digits; + 0.0 turns -0.0 into 0.0
    return format(float(value) + 0.0, ".16e")


def format_csv(results) -> str:
    results = list(results)
    if not results:
        raise ValueError("no results to write")
    grid = results[0].y
    for res in results[1:]:
        if res.y.shape != grid.shape or not np.array_equal(res.y, grid):
            raise ValueError(f"result {res.label!r} does not share the frequency grid")
    rows = [",".join(["y"] + [res.label for res in results])]
    for i, y in enumerate(grid):
        rows.append(",".join([_num(y)] + [_num(res.density[i]) for res in results]))
    return "\n".join(rows) + "\n"


def write_csv(results, destination) -> None:
    """
    Write spectra as CSV: header ``y,<label-1>,...``, one row per grid point.

    `destination` is a path, an open text stream, or ``"-"`` for stdout.
    Nothing is written if the grids differ.
    """
    _atomic_write(destination, format_csv(results))


_LINE_STYLES = ("6,4", "1.5,3", None)  # dashed, dotted, solid


def format_svg(results, title="") -> str:
    results = list(results)
    if not results:
        raise ValueError("need at least one result to plot")
    width, height = 640, 420
    left, right, top, bottom = 80, 20, 30, 50
    pw, ph = width - left - right, height - top - bottom

    values = np.concatenate([res.density for res in results])
    lo = min(0.0, float(values.min())) if values.size else 0.0
    hi = max(0.0, float(values.max())) if values.size else 1.0
    if hi == lo:
        hi = lo + 1.0

    def sx(y):
        return left + pw * y

    def sy(v):
        return top + ph * (hi - v) / (hi - lo)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        f'<g stroke="black" stroke-width="1" fill="none">'
        f'<line x1="{left}" y1="{top + ph}" x2="{left + pw}" y2="{top + ph}"/>'
        f'<line x1="{left}" y1="{top}" x2="{left}" y2="{top + ph}"/></g>',
    ]
    ticks = ['<g font-family="sans-serif" font-size="11" fill="black">']
    for t in np.linspace(0.0, 1.0, 6):
        x = sx(t)
        ticks.append(f'<line x1="{x:.2f}" y1="{top + ph}" x2="{x:.2f}" y2="{top + ph + 4}" stroke="black"/>')
        ticks.append(f'<text x="{x:.2f}" y="{top + ph + 16}" text-anchor="middle">{t:.1f}</text>')
    for v in np.linspace(lo, hi, 5):
        yv = sy(v)
        ticks.append(f'<line x1="{left - 4}" y1="{yv:.2f}" x2="{left}" y2="{yv:.2f}" stroke="black"/>')
        ticks.append(f'<text x="{left - 6}" y="{yv + 4:.2f}" text-anchor="end">{v:.3g}</text>')
    ticks.append(f'<text x="{left + pw / 2}" y="{height - 12}" text-anchor="middle">y = omega/omega_0</text>')
    ticks.append(f'<text x="14" y="{top + ph / 2}" text-anchor="middle" '
                 f'transform="rotate(-90 14 {top + ph / 2})">dN/dy (reduced units)</text>')
    if title:
        ticks.append(f'<text x="{left + pw / 2}" y="18" text-anchor="middle">{escape(title)}</text>')
    ticks.append("</g>")
    out += ticks

    for k, res in enumerate(results):
        dash = _LINE_STYLES[k % len(_LINE_STYLES)]
        dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
        pts = " ".join(f"{sx(y):.3f},{sy(v):.3f}" for y, v in zip(res.y, res.density))
        out.append(f'<polyline fill="none" stroke="black" stroke-width="1.5"{dash_attr} points="{pts}"/>')
        if res.y.size == 1:
            out.append(f'<circle cx="{sx(res.y[0]):.3f}" cy="{sy(res.density[0]):.3f}" r="3" fill="black"/>')
        ly = top + 14 + 16 * k
        lx = left + pw - 170
        out.append(f'<line x1="{lx}" y1="{ly}" x2="{lx + 30}" y2="{ly}" stroke="black" '
                   f'stroke-width="1.5"{dash_attr}/>')
        out.append(f'<text x="{lx + 36}" y="{ly + 4}" font-family="sans-serif" font-size="11">'
                   f'{escape(res.label)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_svg(results, destination, title="") -> None:
    """Line plot of one or more spectra (dashed, dotted, solid, repeating)."""
    _atomic_write(destination, format_svg(results, title=title))
