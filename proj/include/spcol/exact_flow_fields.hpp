#pragma once

// Closed-form benchmark flow fields and forcings. Implementations are
// generated by tools/gen_exact_flow_fields.py.

namespace spcol::exact {

// Exact fields and first derivatives at one point. grad_u[i][j] = du_i/dx_j.
struct flow_point {
    double u[2];
    double grad_u[2][2];
    double lap_u[2];
    double p;             // kinematic pressure
    double grad_p[2];
    double omega;         // scalar vorticity
    double grad_omega[2];
    double p_total;       // p + |u|^2 / 2
    double grad_p_total[2];
};

// Vortex with velocity vanishing on the boundary of the unit square.
void vortex_fields(double x, double y, flow_point& out);
void vortex_forcing_stokes_vp(double x, double y, double mu, double f[2], double grad_f[2][2]);
void vortex_forcing_stokes_rot(double x, double y, double mu, double f[2], double grad_f[2][2]);
void vortex_forcing_ns_vp(double x, double y, double nu, double f[2], double grad_f[2][2]);
void vortex_forcing_ns_rot(double x, double y, double nu, double f[2], double grad_f[2][2]);

// Kovasznay wake flow; lam couples to the Reynolds number through
// lam = Re/2 - sqrt(Re^2/4 + 4 pi^2).
void kovasznay_fields(double x, double y, double lam, flow_point& out);
void kovasznay_forcing_ns_vp(double x, double y, double lam, double nu,
                             double f[2], double grad_f[2][2]);
void kovasznay_forcing_ns_rot(double x, double y, double lam, double nu,
                              double f[2], double grad_f[2][2]);

}  // namespace spcol::exact
