#!/usr/bin/env python3
"""Regenerates src/exact_flow_fields.cpp.

Symbolically differentiates the closed-form benchmark flow fields (vortex on
the unit square, Kovasznay flow) and emits C++ for the field values, their
gradients, the forcing terms of every governing-equation variant, and the
forcing gradients needed by the residual-based stabilization terms.

Run from the repository root:  python3 tools/gen_exact_flow_fields.py
"""

import sympy as sp

x, y, mu, nu, lam = sp.symbols("x y mu nu lam", real=True)


def grad(expr):
    return [sp.diff(expr, x), sp.diff(expr, y)]


def laplacian(expr):
    return sp.diff(expr, x, 2) + sp.diff(expr, y, 2)


def make_fields(ux, uy, p):
    """Common derived quantities for a divergence-free exact flow."""
    omega = sp.diff(uy, x) - sp.diff(ux, y)
    P = p + (ux**2 + uy**2) / 2
    return {
        "u0": ux,
        "u1": uy,
        "du0_dx": sp.diff(ux, x),
        "du0_dy": sp.diff(ux, y),
        "du1_dx": sp.diff(uy, x),
        "du1_dy": sp.diff(uy, y),
        "lap_u0": laplacian(ux),
        "lap_u1": laplacian(uy),
        "p": p,
        "dp_dx": sp.diff(p, x),
        "dp_dy": sp.diff(p, y),
        "omega": omega,
        "domega_dx": sp.diff(omega, x),
        "domega_dy": sp.diff(omega, y),
        "Ptot": P,
        "dPtot_dx": sp.diff(P, x),
        "dPtot_dy": sp.diff(P, y),
    }


def forcings(ux, uy, p):
    """Forcing of each governing-equation variant, f = L{exact fields}."""
    omega = sp.diff(uy, x) - sp.diff(ux, y)
    P = p + (ux**2 + uy**2) / 2
    conv = [ux * sp.diff(ux, x) + uy * sp.diff(ux, y),
            ux * sp.diff(uy, x) + uy * sp.diff(uy, y)]
    perp_omega = [sp.diff(omega, y), -sp.diff(omega, x)]
    # omega k x u = omega * (-uy, ux)
    rot_conv = [-omega * uy, omega * ux]
    return {
        "stokes_vp": [-mu * laplacian(ux) + sp.diff(p, x),
                      -mu * laplacian(uy) + sp.diff(p, y)],
        "stokes_rot": [mu * perp_omega[0] + sp.diff(p, x),
                       mu * perp_omega[1] + sp.diff(p, y)],
        "ns_vp": [-nu * laplacian(ux) + conv[0] + sp.diff(p, x),
                  -nu * laplacian(uy) + conv[1] + sp.diff(p, y)],
        "ns_rot": [nu * perp_omega[0] + rot_conv[0] + sp.diff(P, x),
                   nu * perp_omega[1] + rot_conv[1] + sp.diff(P, y)],
    }


def emit_exprs(pairs, indent="    "):
    """CSE a list of (lhs, expr) pairs and return C++ statement lines."""
    lhss = [lhs for lhs, _ in pairs]
    exprs = [sp.simplify(e) if e == 0 else e for _, e in pairs]
    repl, reduced = sp.cse(exprs, optimizations="basic")
    lines = []
    for sym, sub in repl:
        lines.append(f"{indent}const double {sym} = {sp.ccode(sub)};")
    for lhs, red in zip(lhss, reduced):
        lines.append(f"{indent}{lhs} = {sp.ccode(red)};")
    return "\n".join(lines)


def emit_fields_fn(name, fields, extra_args=""):
    pairs = [
        ("out.u[0]", fields["u0"]),
        ("out.u[1]", fields["u1"]),
        ("out.grad_u[0][0]", fields["du0_dx"]),
        ("out.grad_u[0][1]", fields["du0_dy"]),
        ("out.grad_u[1][0]", fields["du1_dx"]),
        ("out.grad_u[1][1]", fields["du1_dy"]),
        ("out.lap_u[0]", fields["lap_u0"]),
        ("out.lap_u[1]", fields["lap_u1"]),
        ("out.p", fields["p"]),
        ("out.grad_p[0]", fields["dp_dx"]),
        ("out.grad_p[1]", fields["dp_dy"]),
        ("out.omega", fields["omega"]),
        ("out.grad_omega[0]", fields["domega_dx"]),
        ("out.grad_omega[1]", fields["domega_dy"]),
        ("out.p_total", fields["Ptot"]),
        ("out.grad_p_total[0]", fields["dPtot_dx"]),
        ("out.grad_p_total[1]", fields["dPtot_dy"]),
    ]
    sig = f"void {name}(double x, double y{extra_args}, flow_point& out)"
    return f"{sig} {{\n{emit_exprs(pairs)}\n}}\n"


def emit_forcing_fn(name, f, extra_args):
    pairs = [
        ("f[0]", f[0]),
        ("f[1]", f[1]),
        ("grad_f[0][0]", sp.diff(f[0], x)),
        ("grad_f[0][1]", sp.diff(f[0], y)),
        ("grad_f[1][0]", sp.diff(f[1], x)),
        ("grad_f[1][1]", sp.diff(f[1], y)),
    ]
    sig = (f"void {name}(double x, double y{extra_args}, "
           "double f[2], double grad_f[2][2])")
    return f"{sig} {{\n{emit_exprs(pairs)}\n}}\n"


def main():
    # Vortex on the unit square: velocity vanishes on the whole boundary.
    vx = 2 * sp.exp(x) * (-1 + x) ** 2 * x**2 * (y**2 - y) * (-1 + 2 * y)
    vy = -sp.exp(x) * (-1 + x) * x * (-2 + x * (3 + x)) * (-1 + y) ** 2 * y**2
    Y = y**2 - y
    vp = (-424 + 156 * sp.E
          + Y * (-456 + sp.exp(x) * (456
                                     + x**2 * (228 - 5 * Y)
                                     + 2 * x * (-228 + Y)
                                     + 2 * x**3 * (-36 + Y)
                                     + x**4 * (12 + Y))))

    div = sp.simplify(sp.diff(vx, x) + sp.diff(vy, y))
    assert div == 0, f"vortex velocity is not solenoidal: {div}"

    # Kovasznay flow; lam is a runtime parameter tied to the Reynolds number.
    kx = 1 - sp.exp(lam * x) * sp.cos(2 * sp.pi * y)
    ky = lam / (2 * sp.pi) * sp.exp(lam * x) * sp.sin(2 * sp.pi * y)
    kp = (1 - sp.exp(lam * x)) / 2

    div = sp.simplify(sp.diff(kx, x) + sp.diff(ky, y))
    assert div == 0, f"kovasznay velocity is not solenoidal: {div}"

    chunks = [
        "// Generated by tools/gen_exact_flow_fields.py -- do not edit.\n"
        '#include "spcol/exact_flow_fields.hpp"\n\n'
        "#include <cmath>\n\n"
        "namespace spcol::exact {\n"
    ]
    chunks.append(emit_fields_fn("vortex_fields", make_fields(vx, vy, vp)))
    vf = forcings(vx, vy, vp)
    chunks.append(emit_forcing_fn("vortex_forcing_stokes_vp", vf["stokes_vp"],
                                  ", double mu"))
    chunks.append(emit_forcing_fn("vortex_forcing_stokes_rot", vf["stokes_rot"],
                                  ", double mu"))
    chunks.append(emit_forcing_fn("vortex_forcing_ns_vp", vf["ns_vp"],
                                  ", double nu"))
    chunks.append(emit_forcing_fn("vortex_forcing_ns_rot", vf["ns_rot"],
                                  ", double nu"))

    chunks.append(emit_fields_fn("kovasznay_fields", make_fields(kx, ky, kp),
                                 ", double lam"))
    kf = forcings(kx, ky, kp)
    chunks.append(emit_forcing_fn("kovasznay_forcing_ns_vp", kf["ns_vp"],
                                  ", double lam, double nu"))
    chunks.append(emit_forcing_fn("kovasznay_forcing_ns_rot", kf["ns_rot"],
                                  ", double lam, double nu"))
    chunks.append("}  // namespace spcol::exact\n")

    out = "\n".join(chunks)
    with open("src/exact_flow_fields.cpp", "w") as fh:
        fh.write(out)
    print(f"wrote src/exact_flow_fields.cpp ({len(out)} bytes)")


if __name__ == "__main__":
    main()
