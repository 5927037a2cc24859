#pragma once

#include <span>

#include "lrjcalc/calculus/form.hpp"

namespace lrj::calc {

/// Shuffle product, no factorial normalization:
/// (eta ^ zeta)(x_1..x_{p+q}) = sum over (p,q)-shuffles s of
/// sign(s) eta(x_s(1..p)) zeta(x_s(p+1..p+q)).
SkewForm wedge(const SkewForm& eta, const SkewForm& zeta);

/// Contraction in the first slot; the zero form for degree 0.
SkewForm interior(const DiffOp& phi, const SkewForm& eta);

/// Chevalley-Eilenberg coboundary for rho = id on D(M).  The extended basis
/// elements commute, so on components only the anchor terms survive:
///   (delta eta)_{i0..ip} = sum_k (-1)^k rho(e_{ik}) eta_{i0..^ik..ip}
/// with rho(e_0) f = f and rho(e_i) f = d f / dx^i.
SkewForm delta(const SkewForm& eta);

/// delta_alpha eta = delta eta + alpha ^ eta.
SkewForm delta_alpha(const SkewForm& eta, const AlphaForm& alpha);

/// rho_alpha(phi)(f) = phi(f) + f alpha(phi).
ScalarExpr rho_alpha_apply(const DiffOp& phi, const AlphaForm& alpha, const ScalarExpr& f);

/// theta_phi = i_phi delta_alpha + delta_alpha i_phi.
SkewForm theta(const DiffOp& phi, const AlphaForm& alpha, const SkewForm& eta);

/// Classical exterior derivative, d beta = sum_i dx^i ^ d_i beta.
XForm exterior_d(const XForm& beta);

/// Drops every component on a tuple containing the unit index.
XForm restrict_to_x(const SkewForm& eta);

/// beta o pi with pi(phi) = phi - phi(1): same components, nothing on the unit.
SkewForm lift_xform(const XForm& beta);

/// Pfaffian of the (n+1) x (n+1) matrix omega(e_a, e_b).  Zero when n+1 is odd.
ScalarExpr pfaffian(const SkewForm& omega);

/// Pfaffian of an explicit skew matrix (row-major, size m*m).
ScalarExpr pfaffian(std::span<const ScalarExpr> matrix, int m);

/// The full Chevalley-Eilenberg sum for rho_alpha evaluated on the given
/// operators, brackets included:
///   sum_i (-1)^i rho_alpha(phi_i)[eta(..^i..)]
///     + sum_{i<j} (-1)^{i+j} eta([phi_i, phi_j], ..^i..^j..)
/// Used as an oracle against delta_alpha.
ScalarExpr ce_coboundary(const SkewForm& eta, const AlphaForm& alpha, std::span<const DiffOp> ops);

namespace debug {
/// Fault injection for the self-test: negates eta ^ zeta whenever
/// deg eta < deg zeta, which breaks graded commutativity.
void set_wrong_wedge_sign(bool on);
bool wrong_wedge_sign();
}  // namespace debug

}  // namespace lrj::calc
