#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lrjcalc/calculus/form.hpp"
#include "lrjcalc/structures/report.hpp"

namespace lrj::structures {

using cas::ScalarExpr;
using calc::AlphaForm;
using calc::DiffOp;
using calc::SkewForm;
using calc::XForm;

// --- locally conformal symplectic ------------------------------------------

struct LcsData {
  XForm alpha;  // degree 1
  XForm omega;  // degree 2
};

/// d alpha = 0, d omega + alpha ^ omega = 0 and a nonvanishing Pfaffian of
/// omega.  Notes "symplectic" when alpha = 0.
VerificationReport check_lcs(const LcsData& d, const Context& ctx);

// --- rho_alpha and symplectic LRJ structures on D(M) ----------------------

/// delta alpha = delta1 ^ alpha, checked directly and through the equivalent
/// pair (alpha(1) constant, d(alpha restricted to vector fields) = 0).  A
/// disagreement between the two routes is reported as a separate failure.
VerificationReport check_rho_alpha_condition(const AlphaForm& alpha, const Context& ctx);

struct LrjData {
  AlphaForm alpha;
  SkewForm omega;  // degree 2
};

VerificationReport check_lrj(const LrjData& d, const Context& ctx);

// --- Reeb operator, decompositions, Hamiltonian operators -----------------

/// The unique H with i_H omega = -delta1.  Throws DegenerateError (witness:
/// the Pfaffian) when omega is singular, and lrj::Error if H(1) = 0 or
/// (i_1 omega)(H) = 1 fails.
DiffOp reeb(const SkewForm& omega, const Context& ctx);

struct Decomposition {
  DiffOp kernel_part;  // X - (i_1 omega)(X) H
  ScalarExpr coefficient;  // (i_1 omega)(X)
};

/// Throws PreconditionError when X has a scalar part.
Decomposition decompose(const DiffOp& X, const SkewForm& omega, const DiffOp& H);

/// Basis of { X vector field : (i_1 omega)(X) = 0 } obtained by projecting the
/// coordinate fields along H and dropping the one where H has its chosen
/// nonvanishing component.
std::vector<DiffOp> kernel_basis(const SkewForm& omega, const DiffOp& H, const Context& ctx);

/// Solvability and kernel membership for randomized right-hand sides, and a
/// nonvanishing restricted Pfaffian on the kernel.
VerificationReport check_module_isos(const SkewForm& omega, const DiffOp& H, const Context& ctx, int instances = 5);

struct HamiltonianPair {
  ScalarExpr f;
  DiffOp phi_f;
  DiffOp X_f;
  VerificationReport report;
};

HamiltonianPair hamiltonian_ops(const ScalarExpr& f, const LrjData& lrj, const DiffOp& H, const Context& ctx);

struct BracketValue {
  ScalarExpr value;  // -omega(phi_f, phi_g), normalized
  cas::Verdict alternative_form;  // agreement with the X_f / H_alpha expression
};

/// {f, g} = -omega(phi_f, phi_g).  Does not re-run check_lrj.
BracketValue jacobi_bracket(const ScalarExpr& f, const ScalarExpr& g, const LrjData& lrj, const DiffOp& H,
                            const Context& ctx);

/// Top coefficient of (i_1 omega)|X ^ (omega|X)^m on a (2m+1)-chart.
VerificationReport volume_check(const LrjData& lrj, const Context& ctx);
/// The coefficient itself; throws PreconditionError on an even chart.
ScalarExpr volume_coefficient(const LrjData& lrj);

/// [1 + alpha(1)] omega = delta_alpha(i_1 omega).
VerificationReport check_exactness_identity(const LrjData& lrj, const Context& ctx);

enum class ContactKind { Exact, Nonexact };
std::string to_string(ContactKind k);

struct Classification {
  ContactKind kind;
  VerificationReport report;  // the exactness identity when kind is Exact
};

/// Throws PreconditionError when alpha(1) is not a constant.
Classification classify(const LrjData& lrj, const Context& ctx);

// --- contact data and the lift to D(M) -------------------------------------

struct ContactData {
  XForm beta;   // degree 1
  XForm Omega;  // degree 2
  DiffOp E;     // vector field
};

VerificationReport contact_data_check(const ContactData& cd, const Context& ctx);

struct LiftedContact {
  ContactData base;
  cas::Rational c;
  ScalarExpr g;
  SkewForm beta_tilde;
  SkewForm Omega_bar;
  SkewForm Omega_tilde;
  AlphaForm alpha;
  bool admissible = false;  // false: construction rejected, see report
  VerificationReport report;

  LrjData lrj() const { return {alpha, Omega_tilde}; }
};

/// Builds beta~, Omega-bar (by kernel projection), Omega~ = Omega-bar + delta1 ^ beta~
/// and alpha = (1 + c) delta1 + i_E delta beta~ + g beta~, then verifies the
/// identities of the construction.  When d(g beta + i_E d beta) != 0 the lift
/// is rejected: admissible is false and only the failing check is reported.
LiftedContact lift_contact(const ContactData& cd, const cas::Rational& c, const ScalarExpr& g, const Context& ctx,
                           int inverse_samples = 20);

}  // namespace lrj::structures
