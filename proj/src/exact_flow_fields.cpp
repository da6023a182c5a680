// Generated by tools/gen_exact_flow_fields.py -- do not edit.
#include "spcol/exact_flow_fields.hpp"

#include <cmath>

namespace spcol::exact {

void vortex_fields(double x, double y, flow_point& out) {
    const double x0 = pow(x, 2);
    const double x1 = x - 1;
    const double x2 = pow(x1, 2);
    const double x3 = x0*x2;
    const double x4 = exp(x);
    const double x5 = 2*y;
    const double x6 = x5 - 1;
    const double x7 = y - 1;
    const double x8 = x5*x7;
    const double x9 = x4*x6*x8;
    const double x10 = x*(x + 3);
    const double x11 = x10 - 2;
    const double x12 = x*x1;
    const double x13 = x11*x12;
    const double x14 = pow(y, 2);
    const double x15 = pow(x7, 2);
    const double x16 = x14*x15;
    const double x17 = x16*x4;
    const double x18 = 4*x;
    const double x19 = pow(x6, 2);
    const double x20 = 2*x0;
    const double x21 = x2*x20;
    const double x22 = x*x11;
    const double x23 = 2*x;
    const double x24 = x23 + 3;
    const double x25 = x12*x24;
    const double x26 = x1*x11;
    const double x27 = 6*x3;
    const double x28 = x18*x2;
    const double x29 = x0*x1;
    const double x30 = 4*x29;
    const double x31 = x7*y;
    const double x32 = 2*x4;
    const double x33 = 4*x31;
    const double x34 = x23*x24;
    const double x35 = x1*x24;
    const double x36 = -5*x14 + 5*y + 228;
    const double x37 = pow(x, 4);
    const double x38 = x14 - y + 12;
    const double x39 = -x14 + y;
    const double x40 = pow(x, 3);
    const double x41 = x39 + 36;
    const double x42 = x0*x36 - x23*(x39 + 228) + x37*x38 - 2*x40*x41;
    const double x43 = x4*(x42 + 456) - 456;
    const double x44 = x31*x43 - 424 + 156*M_E;
    const double x45 = 2*x14;
    const double x46 = -6*x0*x41 + x23*x36 + 4*x38*x40 + x42 + x45 - x5;
    const double x47 = x31*x4;
    const double x48 = x*x47*(-5*x + x20 + x40 + 2);
    const double x49 = x13*x16 + x19*x21 + x3*x33;
    const double x50 = x15*x45;
    const double x51 = 8*x31;
    const double x52 = x*x2;
    const double x53 = x15*y;
    const double x54 = x14*x7;
    const double x55 = exp(x23);
    const double x56 = x55*pow(x7, 4);
    const double x57 = pow(x11, 2);
    const double x58 = x57*pow(y, 4);
    const double x59 = pow(x1, 4);
    const double x60 = x19*x59;
    const double x61 = x37*x60;
    const double x62 = pow(y, 3);
    const double x63 = x57*x62;
    const double x64 = pow(x7, 3);
    const double x65 = x4*x64;
    const double x66 = x63*x65;
    const double x67 = 8*x47;
    const double x68 = x37*x55*x59;
    out.u[0] = x3*x9;
    out.u[1] = -x13*x17;
    out.grad_u[0][0] = x12*x9*(x12 + x18 - 2);
    out.grad_u[0][1] = x21*x4*(x19 + x8);
    out.grad_u[1][0] = -x17*(x13 + x22 + x25 + x26);
    out.grad_u[1][1] = -x13*x9;
    out.lap_u[0] = x32*x6*(x27 + x31*(8*x12 + 2*x2 + x20 + x28 + x3 + x30));
    out.lap_u[1] = -x4*(2*x13*(x14 + x15 + x33) + x16*(2*x10 + 2*x12 + x13 + 2*x22 + 2*x25 + 2*x26 + x34 + 2*x35 - 4));
    out.p = x44;
    out.grad_p[0] = x46*x47;
    out.grad_p[1] = x6*(x43 + x48);
    out.omega = -x4*(x16*x22 + x16*x25 + x16*x26 + x49);
    out.grad_omega[0] = -x4*(x11*x50 + x12*x50 + x16*x34 + x19*x28 + x19*x30 + x22*x50 + x25*x50 + x26*x50 + x29*x51 + x35*x50 + x49 + x51*x52);
    out.grad_omega[1] = -x32*(x13*x53 + x13*x54 + x22*x53 + x22*x54 + x25*x53 + x25*x54 + x26*x53 + x26*x54 + x27*x6);
    out.p_total = (1.0/2.0)*x3*x56*x58 + x44 + x50*x55*x61;
    out.grad_p_total[0] = x47*(pow(x1, 3)*x19*x37*x67 + x11*x24*x3*x62*x65 + x29*x66 + x3*x66 + x33*x4*x61 + x40*x60*x67 + x46 + x52*x66);
    out.grad_p_total[1] = 8*x16*x6*x68 + x21*x55*x58*x64 + x21*x56*x63 + x33*pow(x6, 3)*x68 + x43*x6 + x48*x6;
}

void vortex_forcing_stokes_vp(double x, double y, double mu, double f[2], double grad_f[2][2]) {
    const double x0 = exp(x);
    const double x1 = pow(x, 2);
    const double x2 = x - 1;
    const double x3 = pow(x2, 2);
    const double x4 = x1*x3;
    const double x5 = x*x3;
    const double x6 = x1*x2;
    const double x7 = 2*x1;
    const double x8 = x*x2;
    const double x9 = 2*x3 + x7 + 8*x8;
    const double x10 = x4 + 4*x5 + 4*x6 + x9;
    const double x11 = y - 1;
    const double x12 = x11*y;
    const double x13 = x10*x12 + 6*x4;
    const double x14 = 2*y;
    const double x15 = x14 - 1;
    const double x16 = 2*mu;
    const double x17 = x15*x16;
    const double x18 = pow(y, 2);
    const double x19 = -x18 + y;
    const double x20 = x19 + 36;
    const double x21 = x1*x20;
    const double x22 = -5*x18 + 5*y + 228;
    const double x23 = 2*x;
    const double x24 = x18 - y + 12;
    const double x25 = pow(x, 3);
    const double x26 = x24*x25;
    const double x27 = 2*x25;
    const double x28 = pow(x, 4)*x24 + x1*x22 - x20*x27 - x23*(x19 + 228);
    const double x29 = -x14 + 2*x18 - 6*x21 + x22*x23 + 4*x26 + x28;
    const double x30 = 5*x;
    const double x31 = x25 - x30 + x7 + 2;
    const double x32 = x*x15;
    const double x33 = x31*x32;
    const double x34 = x12*x33;
    const double x35 = x0*(x28 + 456) - 456;
    const double x36 = pow(x11, 2);
    const double x37 = 4*y;
    const double x38 = x11*x37 + x18 + x36;
    const double x39 = x*(x + 3);
    const double x40 = x39 - 2;
    const double x41 = x2*x40;
    const double x42 = x2*x23;
    const double x43 = x23 + 3;
    const double x44 = x23*x40;
    const double x45 = x2*x43;
    const double x46 = x42*x43;
    const double x47 = 2*x41;
    const double x48 = x*x40;
    const double x49 = x2*x48;
    const double x50 = x23*x43 + 2*x39 + x42 + x44 + 2*x45 + x46 + x47 + x49 - 4;
    const double x51 = x18*x36;
    const double x52 = x23*x38*x41 + x50*x51;
    const double x53 = mu*x0;
    const double x54 = 12*x;
    const double x55 = x11*x14;
    const double x56 = 4*x;
    const double x57 = x1*x15;
    const double x58 = x15*x29;
    const double x59 = x10*x15;
    const double x60 = x*x0*x31;
    f[0] = x0*(x11*x29*y - x13*x17);
    f[1] = x0*x34 + x15*x35 + x52*x53;
    grad_f[0][0] = x0*(x11*y*(12*x1*x24 - 6*x18 - x20*x54 - 12*x21 + x22*x56 + 8*x26 + x28 + 6*y) - x17*(x13 + x3*x54 + x55*(x5 + x54 + x6 + x9 - 6) + 12*x6));
    grad_f[0][1] = x0*(x12*(4*x15*x25 - 10*x32 + x33 + x37 + 6*x57 - 2) - x16*(x10*x55 + x11*x59 + 12*x4 + x59*y) + x58);
    grad_f[1][0] = x0*(mu*(x38*x44 + x38*x46 + x38*x47 + x51*(24*x + 4*x39 + x41 + x43*x56 + x43*x8 + 4*x45 + x48 + 4*x8 + 4) + x52) + x34 + x55*(x15*x27 - x15*x30 + x15 + 3*x57) + x58);
    grad_f[1][1] = 2*x12*x60 + 2*pow(x15, 2)*x60 + 2*x35 + 2*x53*(x11*x18*x50 + 6*x15*x49 + x36*x50*y);
}

void vortex_forcing_stokes_rot(double x, double y, double mu, double f[2], double grad_f[2][2]) {
    const double x0 = exp(x);
    const double x1 = y - 1;
    const double x2 = 2*y;
    const double x3 = pow(y, 2);
    const double x4 = 2*x3;
    const double x5 = pow(x, 2);
    const double x6 = -x3 + y;
    const double x7 = x6 + 36;
    const double x8 = x5*x7;
    const double x9 = -5*x3 + 5*y + 228;
    const double x10 = 2*x;
    const double x11 = x3 - y + 12;
    const double x12 = pow(x, 3);
    const double x13 = x11*x12;
    const double x14 = 2*x12;
    const double x15 = pow(x, 4)*x11 - x10*(x6 + 228) - x14*x7 + x5*x9;
    const double x16 = x10*x9 + 4*x13 + x15 - x2 + x4 - 6*x8;
    const double x17 = pow(x1, 2);
    const double x18 = x*(x + 3) - 2;
    const double x19 = x*x18;
    const double x20 = x17*x19;
    const double x21 = x20*y;
    const double x22 = x19*x3;
    const double x23 = x1*x22;
    const double x24 = x - 1;
    const double x25 = x18*x24;
    const double x26 = x17*x25;
    const double x27 = x25*x3;
    const double x28 = x*x24;
    const double x29 = x10 + 3;
    const double x30 = x17*x29;
    const double x31 = x28*x30;
    const double x32 = x29*x3;
    const double x33 = x28*x32;
    const double x34 = pow(x24, 2);
    const double x35 = x2 - 1;
    const double x36 = x35*x5;
    const double x37 = 6*x36;
    const double x38 = x21*x24 + x23*x24 + x34*x37;
    const double x39 = 2*mu;
    const double x40 = x1*y;
    const double x41 = 5*x;
    const double x42 = 2*x5;
    const double x43 = x12 - x41 + x42 + 2;
    const double x44 = x*x35;
    const double x45 = x43*x44;
    const double x46 = x40*x45;
    const double x47 = x0*(x15 + 456) - 456;
    const double x48 = x17*x18;
    const double x49 = 4*x;
    const double x50 = pow(x35, 2);
    const double x51 = x34*x50;
    const double x52 = 4*x50;
    const double x53 = x5*x52;
    const double x54 = x10*x3;
    const double x55 = x24*x54;
    const double x56 = x10*x32;
    const double x57 = x17*x56;
    const double x58 = x24*x30;
    const double x59 = 8*x;
    const double x60 = x34*x40;
    const double x61 = 8*x40;
    const double x62 = x5*x61;
    const double x63 = 4*y;
    const double x64 = x1*x63;
    const double x65 = x22*x24;
    const double x66 = x17*x65 + x34*x5*x64 + x42*x51;
    const double x67 = mu*x0;
    const double x68 = 6*x3;
    const double x69 = 12*x;
    const double x70 = 12*x5;
    const double x71 = x1*x18;
    const double x72 = x1*x56;
    const double x73 = x1*x4;
    const double x74 = x*x2*x30 + x1*x55 + x17*x2*x28 + x2*x20 + x2*x26 + x2*x31 + x2*x48 + x2*x58 + x24*x29*x73 + x24*x35*x70 + x24*x72 + x25*x73 + x34*x35*x69 + x38 + x4*x71 + x54*x71 + x72;
    const double x75 = x16*x35;
    const double x76 = x19*x64;
    const double x77 = x17*x68;
    const double x78 = x30*x68;
    const double x79 = x24*x5;
    const double x80 = 3*x17;
    const double x81 = x*x0*x43;
    f[0] = x0*(x1*x16*y - x39*(x1*x27 + x1*x33 + x21 + x23 + x26*y + x31*y + x38));
    f[1] = x0*x46 + x35*x47 + x67*(x17*x55 + x24*x53 + x24*x57 + x24*x62 + x26*x4 + x4*x48 + x4*x58 + x48*x54 + x49*x51 + x57 + x59*x60 + x66);
    grad_f[0][0] = x0*(x1*y*(x11*x70 + 8*x13 + x15 + x49*x9 - x68 - x69*x7 - 12*x8 + 6*y) - x39*x74);
    grad_f[0][1] = x0*(-x39*(x20*x24 + x20 + x22 + x24*x76 + x25*x64 + x26 + x27 + x28*x29*x64 + x31 + x33 + x34*x70 + x65 + x76) + x40*(4*x12*x35 + x37 - 10*x44 + x45 + x63 - 2) + x75);
    grad_f[1][0] = x0*(mu*(16*x*x60 + x*x77 + x*x78 + x22*x80 + x24*x77 + x24*x78 + x27*x80 + 32*x28*x40 + 16*x28*x50 + x28*x77 + x33*x80 + x34*x52 + x34*x61 + 16*x40*x79 + x48*x68 + 8*x50*x79 + x51*x59 + x53 + x62 + x66 + x78) + x1*x2*(x14*x35 - x35*x41 + x35 + 3*x36) + x46 + x75);
    grad_f[1][1] = 2*x40*x81 + 2*x47 + 2*x50*x81 + 2*x67*x74;
}

void vortex_forcing_ns_vp(double x, double y, double nu, double f[2], double grad_f[2][2]) {
    const double x0 = exp(x);
    const double x1 = y - 1;
    const double x2 = 2*y;
    const double x3 = pow(y, 2);
    const double x4 = 2*x3;
    const double x5 = pow(x, 2);
    const double x6 = -x3 + y;
    const double x7 = x6 + 36;
    const double x8 = x5*x7;
    const double x9 = -5*x3 + 5*y + 228;
    const double x10 = 2*x;
    const double x11 = x3 - y + 12;
    const double x12 = pow(x, 3);
    const double x13 = x11*x12;
    const double x14 = 2*x12;
    const double x15 = pow(x, 4)*x11 - x10*(x6 + 228) - x14*x7 + x5*x9;
    const double x16 = x10*x9 + 4*x13 + x15 - x2 + x4 - 6*x8;
    const double x17 = x - 1;
    const double x18 = pow(x17, 2);
    const double x19 = x18*x5;
    const double x20 = 4*x;
    const double x21 = x18*x20;
    const double x22 = x17*x5;
    const double x23 = 4*x22;
    const double x24 = 2*x5;
    const double x25 = 2*x18;
    const double x26 = x*x17;
    const double x27 = x24 + x25 + 8*x26;
    const double x28 = x19 + x21 + x23 + x27;
    const double x29 = x1*y;
    const double x30 = 6*x19 + x28*x29;
    const double x31 = x2 - 1;
    const double x32 = 2*nu;
    const double x33 = x31*x32;
    const double x34 = pow(x17, 3);
    const double x35 = pow(x1, 2);
    const double x36 = pow(x31, 2);
    const double x37 = x20 + x26 - 2;
    const double x38 = x12*x34;
    const double x39 = x1*x2;
    const double x40 = x36 + x39;
    const double x41 = x35*x4;
    const double x42 = x*(x + 3);
    const double x43 = x42 - 2;
    const double x44 = x0*x43;
    const double x45 = x41*x44;
    const double x46 = x40*x45;
    const double x47 = -4*x0*x12*x3*x34*x35*x36*x37 + x38*x46;
    const double x48 = 5*x;
    const double x49 = x12 + x24 - x48 + 2;
    const double x50 = x*x31;
    const double x51 = x49*x50;
    const double x52 = x29*x51;
    const double x53 = exp(x10);
    const double x54 = pow(x43, 2);
    const double x55 = x53*x54;
    const double x56 = pow(y, 3);
    const double x57 = pow(x1, 3);
    const double x58 = x56*x57;
    const double x59 = x24*x58;
    const double x60 = x18*x59;
    const double x61 = x31*x60;
    const double x62 = x0*(x15 + 456) - 456;
    const double x63 = x26*x43;
    const double x64 = x*x43;
    const double x65 = x17*x43;
    const double x66 = x10 + 3;
    const double x67 = x26*x66;
    const double x68 = x64 + x65 + x67;
    const double x69 = x63 + x68;
    const double x70 = x53*x69;
    const double x71 = x60*x70;
    const double x72 = 4*y;
    const double x73 = x1*x72;
    const double x74 = x3 + x35 + x73;
    const double x75 = 2*x26;
    const double x76 = x43*x75;
    const double x77 = x10*x43;
    const double x78 = 2*x17;
    const double x79 = x66*x75;
    const double x80 = 2*x65;
    const double x81 = x10*x66 + 2*x42 + x63 + x66*x78 + x75 + x77 + x79 + x80 - 4;
    const double x82 = x3*x35;
    const double x83 = x74*x76 + x81*x82;
    const double x84 = nu*x0;
    const double x85 = 12*x;
    const double x86 = x10*x36 + x17*x73 + x20*x29 + x26*x36 + x26*x39 + x36*x78;
    const double x87 = x38*x40;
    const double x88 = x31*x38;
    const double x89 = x0*x73;
    const double x90 = x1*x3;
    const double x91 = 4*x12;
    const double x92 = x31*x5;
    const double x93 = x16*x31;
    const double x94 = x28*x31;
    const double x95 = x0*x58;
    const double x96 = x0*x61;
    const double x97 = x0*x69;
    const double x98 = x31*x58*x97;
    const double x99 = x1*x63 + x1*x64 + x1*x65 + x1*x67 + x63*y + x64*y + x65*y + x67*y;
    const double x100 = x*x49;
    const double x101 = x19*x82;
    const double x102 = x19*x31;
    f[0] = x0*(x1*x16*y - x30*x33 - x47);
    f[1] = x0*x52 + x31*x62 - x31*x71 + x55*x61 + x83*x84;
    grad_f[0][0] = x0*(8*x0*x12*x18*x3*x35*x36*x37 + 4*x0*x18*x28*x3*x35*x36*x5 + 8*x0*x3*x34*x35*x36*x37*x5 - x0*x41*x66*x87 + x1*y*(12*x11*x5 + 8*x13 + x15 + x20*x9 - 6*x3 - x7*x85 - 12*x8 + 6*y) - x12*x18*x46 - x19*x45*x86 - x33*(x18*x85 + 12*x22 + x30 + x39*(x*x18 + x22 + x27 + x85 - 6)) - x34*x46*x5 - x47);
    grad_f[0][1] = x0*(8*x0*x37*x82*x88 + x29*(x31*x91 - 10*x50 + x51 + x72 + 6*x92 - 2) + pow(x31, 3)*x37*x38*x89 - x32*(x1*x94 + 12*x19 + x28*x39 + x94*y) - x34*x40*x44*x90*x91 - x35*x44*x72*x87 - 12*x44*x82*x88 + x86*x88*x89 + x93);
    grad_f[1][0] = x0*(nu*(x74*x77 + x74*x79 + x74*x80 + x82*(24*x + x17*x20 + 4*x17*x66 + x20*x66 + 4*x42 + x68 + 4) + x83) + x0*x17*x31*x54*x59 - x21*x98 - x23*x98 + x25*x50*x54*x95 + x39*(x14*x31 - x31*x48 + x31 + 3*x92) + x44*x61*x66 + x52 + x54*x96 - x61*x97 + x76*x95*x99 - x81*x96 + x93);
    grad_f[1][1] = 2*x0*x100*x29 + 2*x0*x100*x36 - 2*x101*x36*x70 + 2*x101*x55*x74 + 2*x102*x4*x55*x57 - 2*x102*x41*x53*x99 + 2*x18*x24*x31*x35*x55*x56 + 2*x62 - 2*x71 + 2*x84*(6*x31*x63 + x35*x81*y + x81*x90);
}

void vortex_forcing_ns_rot(double x, double y, double nu, double f[2], double grad_f[2][2]) {
    const double x0 = exp(x);
    const double x1 = x*x0;
    const double x2 = x - 1;
    const double x3 = pow(x2, 2);
    const double x4 = pow(y, 4);
    const double x5 = y - 1;
    const double x6 = pow(x5, 4);
    const double x7 = x*(x + 3) - 2;
    const double x8 = pow(x7, 2);
    const double x9 = x6*x8;
    const double x10 = x4*x9;
    const double x11 = x10*x3;
    const double x12 = pow(x, 2);
    const double x13 = x12*x2;
    const double x14 = x0*x10;
    const double x15 = x13*x14;
    const double x16 = 2*y;
    const double x17 = x16 - 1;
    const double x18 = pow(x17, 2);
    const double x19 = 8*x18;
    const double x20 = pow(y, 2);
    const double x21 = pow(x5, 2);
    const double x22 = x20*x21;
    const double x23 = x0*x22;
    const double x24 = x19*x23;
    const double x25 = pow(x, 3);
    const double x26 = pow(x2, 4);
    const double x27 = x25*x26;
    const double x28 = pow(x, 4);
    const double x29 = pow(x2, 3);
    const double x30 = x28*x29;
    const double x31 = 4*x18;
    const double x32 = x26*x28;
    const double x33 = x23*x32;
    const double x34 = x12*x3;
    const double x35 = x0*x4;
    const double x36 = x35*x6;
    const double x37 = x34*x36;
    const double x38 = 2*x;
    const double x39 = x38 + 3;
    const double x40 = x39*x7;
    const double x41 = x37*x40;
    const double x42 = 2*x20;
    const double x43 = -x20 + y;
    const double x44 = x43 + 36;
    const double x45 = x12*x44;
    const double x46 = -5*x20 + 5*y + 228;
    const double x47 = x20 - y + 12;
    const double x48 = x25*x47;
    const double x49 = 2*x25;
    const double x50 = x12*x46 + x28*x47 - x38*(x43 + 228) - x44*x49;
    const double x51 = -x16 + x38*x46 + x42 - 6*x45 + 4*x48 + x50;
    const double x52 = x5*y;
    const double x53 = x*x7;
    const double x54 = x20*x53;
    const double x55 = x21*x54;
    const double x56 = x2*x55;
    const double x57 = x2*x7;
    const double x58 = x20*x57;
    const double x59 = x21*x58;
    const double x60 = x*x2;
    const double x61 = x20*x39;
    const double x62 = x60*x61;
    const double x63 = x21*x62;
    const double x64 = 2*x12;
    const double x65 = x18*x3;
    const double x66 = 4*y;
    const double x67 = x5*x66;
    const double x68 = x34*x67 + x56 + x64*x65;
    const double x69 = x55 + x59 + x63 + x68;
    const double x70 = x0*x69;
    const double x71 = -x56*x70;
    const double x72 = x21*x53;
    const double x73 = x72*y;
    const double x74 = x5*x54;
    const double x75 = x21*x57;
    const double x76 = x5*x58;
    const double x77 = x21*x39;
    const double x78 = x60*x77;
    const double x79 = x12*x17;
    const double x80 = 6*x79;
    const double x81 = x2*x73 + x2*x74 + x3*x80;
    const double x82 = x5*x62 + x73 + x74 + x75*y + x76 + x78*y + x81;
    const double x83 = 2*nu;
    const double x84 = pow(x17, 3);
    const double x85 = exp(x38);
    const double x86 = x32*x85;
    const double x87 = 5*x;
    const double x88 = x25 + x64 - x87 + 2;
    const double x89 = x*x17;
    const double x90 = x88*x89;
    const double x91 = x52*x90;
    const double x92 = 8*x22*x86;
    const double x93 = pow(y, 3);
    const double x94 = x9*x93;
    const double x95 = x3*x64;
    const double x96 = x85*x95;
    const double x97 = pow(x5, 3);
    const double x98 = x8*x97;
    const double x99 = x0*(x50 + 456) - 456;
    const double x100 = x16*x5;
    const double x101 = x69*x85;
    const double x102 = x100*x101;
    const double x103 = x3*x79;
    const double x104 = x21*x7;
    const double x105 = 4*x;
    const double x106 = x12*x31;
    const double x107 = x20*x38;
    const double x108 = x107*x2;
    const double x109 = x38*x61;
    const double x110 = x109*x21;
    const double x111 = x2*x77;
    const double x112 = 8*x;
    const double x113 = x3*x52;
    const double x114 = 8*x52;
    const double x115 = x114*x12;
    const double x116 = x104*x107 + x104*x42 + x105*x65 + x106*x2 + x108*x21 + x110*x2 + x110 + x111*x42 + x112*x113 + x115*x2 + x42*x75 + x68;
    const double x117 = nu*x0;
    const double x118 = x0*x12;
    const double x119 = x0*x11;
    const double x120 = x18*x23;
    const double x121 = 32*x120;
    const double x122 = x105*x3;
    const double x123 = 4*x6;
    const double x124 = 6*x20;
    const double x125 = 12*x;
    const double x126 = 12*x12;
    const double x127 = x0*x116;
    const double x128 = x5*x7;
    const double x129 = x109*x5;
    const double x130 = x42*x5;
    const double x131 = x*x16*x77 + x104*x16 + x107*x128 + x108*x5 + x111*x16 + x125*x17*x3 + x126*x17*x2 + x128*x42 + x129*x2 + x129 + x130*x2*x39 + x130*x57 + x16*x21*x60 + x16*x72 + x16*x75 + x16*x78 + x81;
    const double x132 = x53*x67;
    const double x133 = x2*x72;
    const double x134 = x17*x25;
    const double x135 = x0*x94;
    const double x136 = x35*x98;
    const double x137 = 4*x135;
    const double x138 = 4*x136;
    const double x139 = x0*x84;
    const double x140 = 16*x52;
    const double x141 = x139*x140;
    const double x142 = 32*x23;
    const double x143 = x34*x40;
    const double x144 = x0*x123*x143*x93 + x114*x139*x32 + x122*x135 + x122*x136 + x13*x137 + x13*x138 + x134*x142*x26 + x137*x34 + x138*x34 + x141*x27 + x141*x30 + x142*x17*x30 + 4*x143*x35*x97 + 16*x17*x33 + x17*x51;
    const double x145 = x124*x21;
    const double x146 = x124*x77;
    const double x147 = x67*x70;
    const double x148 = x100*x103;
    const double x149 = x1*x88;
    const double x150 = x34*x85;
    const double x151 = 3*x150;
    f[0] = x0*(x1*x11 + x14*x34 + x15 + x24*x27 + x24*x30 + x31*x33 + x41 + x51*x52 + x71 - x82*x83);
    f[1] = x0*x91 - x102*x103 + x116*x117 + x17*x92 + x17*x99 + x4*x96*x98 + x67*x84*x86 + x94*x96;
    grad_f[0][0] = x0*(x10*x118 + x105*x119 + x105*x14*x2 + x118*x123*x39*x4*x57 + 24*x118*x18*x22*x26 + x119*x64 + x119 + 64*x120*x25*x29 + x121*x27 + x121*x30 + x122*x36*x40 - x127*x56 - x131*x83 + 4*x15 + x19*x33 + 24*x23*x28*x65 + x36*x7*x95 + x37*pow(x39, 2) + 4*x41 + x52*(x105*x46 - x124 - x125*x44 + x126*x47 - 12*x45 + 8*x48 + x50 + 6*y) - x55*x70 - x59*x70 - x63*x70 + x71);
    grad_f[0][1] = x0*(-x0*x38*x59*x82 - x133*x16*x70 + x144 - x38*x70*x76 + x52*(4*x134 + x66 + x80 - 10*x89 + x90 - 2) - x83*(x126*x3 + x132*x2 + x132 + x133 + x2*x54 + x39*x60*x67 + x54 + x57*x67 + x58 + x62 + x72 + x75 + x78));
    grad_f[1][0] = x0*(nu*(16*x*x113 + x*x145 + x*x146 + x104*x124 + x106 + x112*x65 + x114*x3 + x115 + x13*x140 + x13*x19 + x145*x2 + x145*x60 + x146*x2 + x146 + 16*x18*x60 + x3*x31 + 32*x52*x60 + 3*x55 + 3*x59 + 3*x63 + x68) + x100*(x17*x49 - x17*x87 + x17 + 3*x79) - x127*x148 + x144 - x147*x2*x79 - x147*x3*x89 - x148*x70 + x91);
    grad_f[1][1] = -2*x101*x12*x65 - 2*x102*x34 + 2*x117*x131 - 2*x148*x82*x85 + 2*x149*x18 + 2*x149*x52 + 16*x150*x93*x98 + 2*x151*x20*x9 + 2*x151*x21*x4*x8 + 4*pow(x17, 4)*x86 + 40*x18*x52*x86 + 2*x92 + 2*x99;
}

void kovasznay_fields(double x, double y, double lam, flow_point& out) {
    const double x0 = lam*x;
    const double x1 = exp(x0);
    const double x2 = 2*M_PI;
    const double x3 = x2*y;
    const double x4 = cos(x3);
    const double x5 = x1*x4;
    const double x6 = x5 - 1;
    const double x7 = (1.0/2.0)/M_PI;
    const double x8 = sin(x3);
    const double x9 = lam*x1;
    const double x10 = x8*x9;
    const double x11 = lam*x5;
    const double x12 = x1*x8;
    const double x13 = pow(lam, 2);
    const double x14 = x13*x7;
    const double x15 = pow(M_PI, 2);
    const double x16 = x13 - 4*x15;
    const double x17 = x14 - x2;
    const double x18 = x10*x17;
    const double x19 = x13*pow(x8, 2)/x15;
    out.u[0] = -x6;
    out.u[1] = x10*x7;
    out.grad_u[0][0] = -x11;
    out.grad_u[0][1] = x12*x2;
    out.grad_u[1][0] = x12*x14;
    out.grad_u[1][1] = x11;
    out.lap_u[0] = -x16*x5;
    out.lap_u[1] = x18;
    out.p = 1.0/2.0 - 1.0/2.0*x1;
    out.grad_p[0] = -1.0/2.0*x9;
    out.grad_p[1] = 0;
    out.omega = x12*x17;
    out.grad_omega[0] = x18;
    out.grad_omega[1] = x16*x5;
    out.p_total = -1.0/2.0*x1 + (1.0/8.0)*x19*exp(2*x0) + (1.0/2.0)*pow(x6, 2) + 1.0/2.0;
    out.grad_p_total[0] = x9*((1.0/4.0)*x1*x19 + x4*x6 - 1.0/2.0);
    out.grad_p_total[1] = x12*(x14*x5 - x2*x6);
}

void kovasznay_forcing_ns_vp(double x, double y, double lam, double nu, double f[2], double grad_f[2][2]) {
    const double x0 = exp(lam*x);
    const double x1 = 2*M_PI;
    const double x2 = x1*y;
    const double x3 = sin(x2);
    const double x4 = lam*x0;
    const double x5 = pow(x3, 2)*x4;
    const double x6 = (1.0/2.0)*lam;
    const double x7 = cos(x2);
    const double x8 = x0*x7;
    const double x9 = lam*(x8 - 1);
    const double x10 = pow(lam, 2);
    const double x11 = nu*(x10 - 4*pow(M_PI, 2));
    const double x12 = x11*x7 - x6 + x7*x9;
    const double x13 = M_1_PI;
    const double x14 = x0*x3;
    const double x15 = x14*(lam*x0*x13*x7 - nu*(x10*x13 - 4*M_PI) - x13*x9);
    const double x16 = lam*x0*x7 - x11 - x9;
    f[0] = x0*(x12 + x5);
    f[1] = x15*x6;
    grad_f[0][0] = x4*(x12 + x4*pow(x7, 2) + 2*x5);
    grad_f[0][1] = x1*x14*x16;
    grad_f[1][0] = (1.0/2.0)*x10*x15;
    grad_f[1][1] = lam*x16*x8;
}

void kovasznay_forcing_ns_rot(double x, double y, double lam, double nu, double f[2], double grad_f[2][2]) {
    const double x0 = exp(lam*x);
    const double x1 = pow(lam, 3);
    const double x2 = pow(M_PI, 2);
    const double x3 = 2*M_PI;
    const double x4 = x3*y;
    const double x5 = sin(x4);
    const double x6 = pow(x5, 2);
    const double x7 = x0*x6;
    const double x8 = x1*x7/x2;
    const double x9 = M_1_PI;
    const double x10 = pow(lam, 2);
    const double x11 = x10*x9 - 4*M_PI;
    const double x12 = lam*x0;
    const double x13 = (1.0/2.0)*lam;
    const double x14 = cos(x4);
    const double x15 = x0*x14;
    const double x16 = x15 - 1;
    const double x17 = x14*x16;
    const double x18 = 4*x2;
    const double x19 = x10 - x18;
    const double x20 = nu*x19;
    const double x21 = x14*x20;
    const double x22 = lam*x17 - x13 + x21;
    const double x23 = (1.0/2.0)*x11;
    const double x24 = x16*x3;
    const double x25 = x11*x13;
    const double x26 = nu*x25 + x16*x23 + x24;
    const double x27 = x0*x5;
    const double x28 = pow(x14, 2);
    const double x29 = x15*x3;
    f[0] = x0*(-1.0/4.0*x11*x12*x6*x9 + x22 + (1.0/4.0)*x8);
    f[1] = x27*((1.0/2.0)*x0*x10*x14*x9 - x26);
    grad_f[0][0] = x12*(x12*x28 + x22 - x25*x7*x9 + (1.0/2.0)*x8);
    grad_f[0][1] = x27*(-lam*x24 - lam*x29 + x0*x1*x14*x9 - x13*x15*x19*x9 - x15*x25 - x20*x3);
    grad_f[1][0] = lam*x27*(x0*x10*x14*x9 - x15*x23 - x26 - x29);
    grad_f[1][1] = x0*(-lam*x21 + x0*x10*x28 - x0*x10*x6 + M_PI*x0*x11*x6 + 4*x0*x2*x6 - x17*x18 - x17*x19);
}

}  // namespace spcol::exact
