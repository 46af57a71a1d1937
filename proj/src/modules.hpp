#pragma once

#include <memory>
#include <vector>

#include "algebra.hpp"

namespace qci {

struct FdModule;
using ModulePtr = std::shared_ptr<const FdModule>;

// Finite-dimensional left module, given by one action matrix per generator.
// Creation verifies the defining relations (nilpotency and commutation), so a
// ModulePtr is always a genuine module.
struct FdModule {
  PresentationPtr pres;
  std::uint32_t dim = 0;
  std::vector<Matrix> actions;  // dim x dim, one per generator

  static ModulePtr create(PresentationPtr p, std::vector<Matrix> actions,
                          bool validate = true);

  // action matrix of an arbitrary element
  Matrix act(const Element& e) const;

  nlohmann::json to_json() const;
  static ModulePtr from_json(const nlohmann::json& j);
};

bool modules_equal(const ModulePtr& a, const ModulePtr& b);

ModulePtr regular_module(const PresentationPtr& p);
ModulePtr simple_module(const PresentationPtr& p);
ModulePtr zero_module(const PresentationPtr& p);

// matrices of u |-> e*u and u |-> u*e on the regular module
Matrix left_mult_matrix(const Element& e);
Matrix right_mult_matrix(const Element& e);

// M / U for an action-invariant subspace U (given by any spanning columns).
// proj * lift = identity on the quotient; lift columns are standard basis
// vectors of M, chosen deterministically.
struct QuotientModule {
  ModulePtr module;
  Matrix proj;  // dimQ x dimM
  Matrix lift;  // dimM x dimQ
};
QuotientModule quotient_by_subspace(const ModulePtr& m, const Matrix& span);

// Lambda / (Lambda u), the cyclic quotient by the left ideal of u.
QuotientModule cyclic_quotient(const PresentationPtr& p, const Element& u);

// submodule spanned by independent columns, with its inclusion
struct SubmoduleData {
  ModulePtr module;
  Matrix inclusion;  // dimM x dimS
};
SubmoduleData submodule_from_invariant_subspace(const ModulePtr& m,
                                                const Matrix& basis);

Matrix socle_basis(const ModulePtr& m);    // dimM x s, independent columns
Matrix radical_basis(const ModulePtr& m);  // dimM x r, independent columns

// basis of Hom_Lambda(M, N) as dimN x dimM matrices
std::vector<Matrix> hom_space(const ModulePtr& m, const ModulePtr& n);

// Minimal projective cover P = Lambda^t ->> M, t = dim M/rad M.  The cover
// matrix sends the basis vector (summand j, monomial w) to w * g_j where the
// g_j are standard basis vectors of M spanning a complement of the radical.
struct CoverData {
  std::uint32_t rank = 0;  // t
  ModulePtr source;        // Lambda^t
  Matrix map;              // dimM x (t * dim Lambda)
};
CoverData projective_cover(const ModulePtr& m);

SubmoduleData syzygy_data(const ModulePtr& m);
ModulePtr syzygy(const ModulePtr& m);

// Minimal embedding M into Lambda^s, s = dim soc M, built from the Frobenius
// functional (coefficient of the top monomial).
struct EnvelopeData {
  std::uint32_t rank = 0;  // s
  ModulePtr target;        // Lambda^s
  Matrix map;              // (s * dim Lambda) x dimM, injective
};
EnvelopeData injective_envelope(const ModulePtr& m);

QuotientModule cosyzygy_data(const ModulePtr& m);
ModulePtr cosyzygy(const ModulePtr& m);

// Omega^j: syzygy for j > 0, identity for j = 0, cosyzygy for j < 0.
ModulePtr omega(const ModulePtr& m, int j);

// Direct sum remembering the summand injections and projections.
struct DecomposedModule {
  ModulePtr total;
  std::vector<ModulePtr> parts;
  std::vector<Matrix> inject;   // dimTotal x dimPart
  std::vector<Matrix> project;  // dimPart x dimTotal
};
DecomposedModule direct_sum(const std::vector<ModulePtr>& parts);

}  // namespace qci
