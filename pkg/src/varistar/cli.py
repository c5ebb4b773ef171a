"""Command-line front end.

Subcommands: disc, a2, construct, sweep, verify, plot. Exit codes: 0 on
success/pass, 1 on verification failure, 2 on usage or domain errors.
All randomized outputs embed the seed and RNG algorithm name.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import verify as verify_mod
from .cseries import TruncatedSeries
from .regions import (
    a2_closed_form,
    disc_exact,
    disc_miller72,
    disc_miller80,
    disc_theorem2,
    expected_tangency_offset,
    tangency_check,
)
from .schwarz import RNG_ALGORITHM, SchwarzCoeffs, sample_schwarz_arrays
from .sigma_star import PoleParams, c1_from_pair, construct_from_omega, w0_from_c1

_COMPLEX_FLAGS = {"--w0", "--c1", "--c2", "--c"}


def parse_complex(text: str) -> complex:
    """Parse `a`, `a+bi`, `a-bi`, `bi` (decimal reals, no whitespace)."""
    s = text.strip()
    if any(ch.isspace() for ch in s):
        raise ValueError(f"malformed complex literal: {text!r}")
    try:
        if not s.endswith("i"):
            return complex(float(s), 0.0)
        body = s[:-1]
        split = 0
        for j in range(len(body) - 1, 0, -1):
            if body[j] in "+-" and body[j - 1] not in "eE":
                split = j
                break
        re_part, im_part = body[:split], body[split:]
        if im_part in ("", "+"):
            im = 1.0
        elif im_part == "-":
            im = -1.0
        else:
            im = float(im_part)
        return complex(float(re_part) if re_part else 0.0, im)
    except ValueError:
        raise ValueError(f"malformed complex literal: {text!r}") from None


def fmt_complex(z: complex) -> str:
    re, im = z.real, z.imag
    return f"{re:.12g}{im:+.12g}i"


def _preprocess(argv):
    """Join complex flags with negative-looking values so argparse accepts them."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _COMPLEX_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="varistar",
        description="Variability discs for the second coefficient of "
        "meromorphic starlike functions.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(sp, *, fmt=True, out=True):
        if fmt:
            sp.add_argument("--format", choices=["text", "csv", "json"], default="text")
        if out:
            sp.add_argument("--out", default=None, help="write output to this path")

    sp = sub.add_parser("disc", help="print the four discs for a (p, w0) pair")
    sp.add_argument("--p", type=float, required=True)
    sp.add_argument("--w0", type=parse_complex, required=True)
    add_common(sp)

    sp = sub.add_parser("a2", help="closed-form a2 for a Schwarz pair")
    sp.add_argument("--p", type=float, required=True)
    sp.add_argument("--c1", type=parse_complex, required=True)
    sp.add_argument("--c2", type=parse_complex, default=0j)
    add_common(sp)

    sp = sub.add_parser("construct", help="Taylor coefficients of a class member")
    sp.add_argument("--p", type=float, required=True)
    sp.add_argument("--w0", type=parse_complex, default=None)
    sp.add_argument("--c1", type=parse_complex, default=None)
    sp.add_argument("--c2", type=parse_complex, default=0j)
    sp.add_argument("--trunc", type=int, default=16)
    add_common(sp)

    sp = sub.add_parser("sweep", help="boundary sweep of the exact disc")
    sp.add_argument("--p", type=float, required=True)
    sp.add_argument("--w0", type=parse_complex, required=True)
    sp.add_argument("--k", type=int, default=360)
    sp.add_argument("--trunc", type=int, default=16)
    add_common(sp)

    sp = sub.add_parser("verify", help="run a certification suite")
    sp.add_argument(
        "target",
        choices=["region", "tangency", "boundary", "positivity", "all"],
    )
    sp.add_argument("--p", type=float, default=0.5)
    sp.add_argument("--w0", type=parse_complex, default=None)
    sp.add_argument("--samples", type=int, default=100000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--k", type=int, default=360)
    add_common(sp)

    sp = sub.add_parser("plot", help="SVG figure of the discs and sampled a2 values")
    sp.add_argument("--p", type=float, required=True)
    sp.add_argument("--w0", type=parse_complex, required=True)
    sp.add_argument("--samples", type=int, default=2000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out", required=True)

    return parser


def _check_p(p: float):
    if not 0.001 <= p <= 0.999:
        raise ValueError(f"p must lie in [0.001, 0.999], got {p}")


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _discs_table(p: float, w0: complex):
    params = PoleParams(p, w0)
    return [
        ("miller72", disc_miller72(params)),
        ("miller80", disc_miller80(params)),
        ("exact", disc_exact(params)),
        ("theorem2", disc_theorem2(p)),
    ]


def _cmd_disc(args) -> int:
    _check_p(args.p)
    table = _discs_table(args.p, args.w0)
    if args.format == "csv":
        lines = ["disc,center_re,center_im,radius"]
        lines += [
            f"{name},{d.center.real!r},{d.center.imag!r},{d.radius!r}"
            for name, d in table
        ]
        text = "\n".join(lines) + "\n"
    elif args.format == "json":
        text = json.dumps(
            {
                name: {
                    "center_re": d.center.real,
                    "center_im": d.center.imag,
                    "radius": d.radius,
                }
                for name, d in table
            },
            indent=2,
            sort_keys=True,
        ) + "\n"
    else:
        text = "".join(
            f"{name}: center = {fmt_complex(d.center)}, radius = {d.radius:.12g}\n"
            for name, d in table
        )
    _emit(text, args.out)
    return 0


def _cmd_a2(args) -> int:
    _check_p(args.p)
    rep = a2_closed_form(args.p, SchwarzCoeffs(args.c1, args.c2))
    if args.format == "json":
        text = json.dumps(
            {
                "a2_re": rep.a2.real,
                "a2_im": rep.a2.imag,
                "M_re": rep.M.real,
                "M_im": rep.M.imag,
                "route": rep.route,
            },
            indent=2,
            sort_keys=True,
        ) + "\n"
    elif args.format == "csv":
        text = (
            "a2_re,a2_im,M_re,M_im\n"
            f"{rep.a2.real!r},{rep.a2.imag!r},{rep.M.real!r},{rep.M.imag!r}\n"
        )
    else:
        text = f"a2 = {fmt_complex(rep.a2)}, M = {fmt_complex(rep.M)}\n"
    _emit(text, args.out)
    return 0


def _cmd_construct(args) -> int:
    _check_p(args.p)
    if args.w0 is not None and args.c1 is not None:
        raise ValueError("give either --w0 or --c1/--c2, not both")
    if args.w0 is not None:
        c1 = c1_from_pair(PoleParams(args.p, args.w0))
        c2 = 0j
    else:
        c1 = args.c1 if args.c1 is not None else 0j
        c2 = args.c2
    omega = TruncatedSeries.from_coeffs([0.0, c1, c2], args.trunc)
    f, params = construct_from_omega(args.p, omega, args.trunc)
    if args.format == "csv":
        lines = ["n,a_re,a_im"]
        lines += [f"{k},{f[k].real!r},{f[k].imag!r}" for k in range(f.order + 1)]
        text = "\n".join(lines) + "\n"
    elif args.format == "json":
        text = json.dumps(
            {
                "p": params.p,
                "w0_re": params.w0.real,
                "w0_im": params.w0.imag,
                "coeffs": [[f[k].real, f[k].imag] for k in range(f.order + 1)],
            },
            indent=2,
            sort_keys=True,
        ) + "\n"
    else:
        lines = [f"w0 = {fmt_complex(params.w0)}"]
        lines += [f"a_{k} = {fmt_complex(f[k])}" for k in range(f.order + 1)]
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0


def _cmd_sweep(args) -> int:
    _check_p(args.p)
    params = PoleParams(args.p, args.w0)
    points = verify_mod.sweep_boundary(params, args.k, args.trunc)
    disc = disc_exact(params)
    rows = []
    for k, a2 in enumerate(points):
        c = complex(np.exp(2j * np.pi * k / args.k))
        rows.append((k, c, complex(a2), float(abs(a2 - disc.center))))
    if args.format == "json":
        text = json.dumps(
            [
                {
                    "k": k,
                    "c_re": c.real,
                    "c_im": c.imag,
                    "a2_re": a2.real,
                    "a2_im": a2.imag,
                    "dist_to_center": dist,
                }
                for k, c, a2, dist in rows
            ],
            indent=2,
        ) + "\n"
    elif args.format == "text":
        text = "".join(
            f"k={k} c={fmt_complex(c)} a2={fmt_complex(a2)} dist={dist:.12g}\n"
            for k, c, a2, dist in rows
        )
    else:
        lines = ["k,c_re,c_im,a2_re,a2_im,dist_to_center"]
        lines += [
            f"{k},{c.real!r},{c.imag!r},{a2.real!r},{a2.imag!r},{dist!r}"
            for k, c, a2, dist in rows
        ]
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0


def _verify_region(args) -> tuple[bool, str]:
    stats = verify_mod.monte_carlo_region(args.p, args.seed, args.samples)
    ok = stats.violations == 0
    if args.format == "csv":
        text = (
            "seed,n,violations,max_excess,sup_attained\n"
            f"{stats.seed},{stats.n_samples},{stats.violations},"
            f"{stats.max_radial_excess!r},{stats.sup_attained!r}\n"
        )
    elif args.format == "json":
        text = json.dumps(
            {
                "seed": stats.seed,
                "rng": stats.rng_algorithm,
                "n": stats.n_samples,
                "violations": stats.violations,
                "max_excess": stats.max_radial_excess,
                "sup_attained": stats.sup_attained,
            },
            indent=2,
            sort_keys=True,
        ) + "\n"
    else:
        text = (
            f"p: {args.p:.12g}\nseed: {stats.seed} ({stats.rng_algorithm})\n"
            f"samples: {stats.n_samples}\nviolations: {stats.violations}\n"
            f"max_excess: {stats.max_radial_excess:.3e}\n"
            f"sup_attained: {stats.sup_attained:.12g}\n"
        )
    return ok, text


def _verify_tangency(args) -> tuple[bool, str]:
    rng = np.random.default_rng(args.seed)
    n = min(args.samples, 10000)
    worst = 0.0
    ok = True
    for _ in range(n):
        p = rng.uniform(0.05, 0.95)
        c1 = rng.uniform(-1, 1) + 1j * rng.uniform(-1, 1)
        if abs(c1) > 1:
            continue
        params = PoleParams(p, w0_from_c1(p, c1))
        inner = disc_exact(params)
        offset = expected_tangency_offset(params)
        for outer in (disc_miller72(params), disc_miller80(params)):
            rep = tangency_check(inner, outer)
            err = max(abs(rep.delta_center - offset), abs(rep.radius_gap - offset))
            worst = max(worst, err)
            ok = ok and rep.internally_tangent
    text = (
        f"seed: {args.seed} ({RNG_ALGORITHM})\npairs: {n}\n"
        f"max identity error: {worst:.3e}\ninternally tangent: {ok}\n"
    )
    return ok and worst <= 1e-12, text


def _verify_boundary(args) -> tuple[bool, str]:
    w0 = args.w0 if args.w0 is not None else w0_from_c1(args.p, 0)
    params = PoleParams(args.p, w0)
    points = verify_mod.sweep_boundary(params, args.k)
    disc = disc_exact(params)
    dev = max(abs(abs(a2 - disc.center) - disc.radius) for a2 in points)
    ok = dev <= 1e-9
    text = f"K: {args.k}\nmax radial deviation: {dev:.3e}\npass: {ok}\n"
    return ok, text


def _verify_positivity(args) -> tuple[bool, str]:
    grid = [round(0.01 * k, 2) for k in range(1, 100)]
    try:
        rows = verify_mod.positivity_sweep(grid, seed=args.seed, samples=2000)
    except verify_mod.VerificationError as exc:
        return False, f"positivity FAILED: {exc}\n"
    min_bound = min(b for _, b in rows)
    return True, (
        f"p grid: 0.01..0.99 step 0.01\nmin lower bound 1/p - p: {min_bound:.12g}\n"
        f"all positive: True\n"
    )


def _cmd_verify(args) -> int:
    _check_p(args.p)
    runners = {
        "region": _verify_region,
        "tangency": _verify_tangency,
        "boundary": _verify_boundary,
        "positivity": _verify_positivity,
    }
    targets = list(runners) if args.target == "all" else [args.target]
    all_ok = True
    chunks = []
    for name in targets:
        ok, text = runners[name](args)
        all_ok = all_ok and ok
        if len(targets) > 1:
            chunks.append(f"[{name}] {'PASS' if ok else 'FAIL'}\n{text}")
        else:
            chunks.append(text)
    _emit("".join(chunks), args.out)
    return 0 if all_ok else 1


def _cmd_plot(args) -> int:
    _check_p(args.p)
    params = PoleParams(args.p, args.w0)
    table = _discs_table(args.p, args.w0)
    c1, c2 = sample_schwarz_arrays(args.seed, args.samples)
    pts = np.array(
        [a2_closed_form(args.p, SchwarzCoeffs(z1, z2)).a2 for z1, z2 in zip(c1, c2)]
    )
    # keep only samples matching this w0's c1? No: show the fixed-p cloud plus discs.
    xs = [d.center.real for _, d in table]
    ys = [d.center.imag for _, d in table]
    rs = [d.radius for _, d in table]
    lo_x = min(x - r for x, r in zip(xs, rs)) - 0.1
    hi_x = max(x + r for x, r in zip(xs, rs)) + 0.1
    lo_y = min(y - r for y, r in zip(ys, rs)) - 0.1
    hi_y = max(y + r for y, r in zip(ys, rs)) + 0.1
    span = max(hi_x - lo_x, hi_y - lo_y)
    cx, cy = (lo_x + hi_x) / 2, (lo_y + hi_y) / 2

    def to_px(z):
        x = 400 + (z.real - cx) / span * 760
        y = 400 - (z.imag - cy) / span * 760
        return x, y

    scale = 760 / span
    colors = {"miller72": "#1f77b4", "miller80": "#2ca02c", "exact": "#d62728",
              "theorem2": "#9467bd"}
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        'viewBox="0 0 800 800" width="800" height="800">',
        '<rect width="800" height="800" fill="white"/>',
        f"<!-- p={args.p!r} w0={fmt_complex(args.w0)} seed={args.seed} "
        f"rng={RNG_ALGORITHM} samples={args.samples} -->",
    ]
    for z in pts:
        x, y = to_px(z)
        lines.append(
            f'<circle cx="{x:.3f}" cy="{y:.3f}" r="1.2" fill="#999999" '
            'fill-opacity="0.5"/>'
        )
    for name, d in table:
        x, y = to_px(d.center)
        lines.append(
            f'<circle cx="{x:.3f}" cy="{y:.3f}" r="{d.radius * scale:.3f}" '
            f'fill="none" stroke="{colors[name]}" stroke-width="2"/>'
        )
        lines.append(
            f'<text x="{x:.3f}" y="{y - d.radius * scale - 6:.3f}" '
            f'font-family="monospace" font-size="14" fill="{colors[name]}" '
            f'text-anchor="middle">{name}</text>'
        )
    lines.append("</svg>")
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")
    return 0


_COMMANDS = {
    "disc": _cmd_disc,
    "a2": _cmd_a2,
    "construct": _cmd_construct,
    "sweep": _cmd_sweep,
    "verify": _cmd_verify,
    "plot": _cmd_plot,
}


def run_cli(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(_preprocess(list(argv)))
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help; pass both through.
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.subcommand](args)
    except (ValueError, ZeroDivisionError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
