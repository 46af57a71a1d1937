#pragma once

#include <optional>

#include "certificates.hpp"
#include "modules.hpp"

namespace qci {

// A homomorphism of left modules, stored as its matrix (dim target x dim
// source).  Construction verifies commutation with every generator action.
struct ModuleHom {
  ModulePtr source;
  ModulePtr target;
  Matrix matrix;

  ModuleHom(ModulePtr src, ModulePtr dst, Matrix mat, bool check = true);
  bool is_zero() const { return matrix.is_zero(); }
};

// g after f
ModuleHom compose(const ModuleHom& g, const ModuleHom& f);

// Lambda/(Lambda e) together with the generator e it was built from.
struct CyclicQuotientData {
  Element gen;
  QuotientModule q;
  const ModulePtr& module() const { return q.module; }
};
CyclicQuotientData make_cyclic(const PresentationPtr& p, const Element& e);

// [x] |-> [x u] between cyclic quotients.  Well-defined exactly when
// e_src * u lies in the left ideal of e_dst; otherwise IllDefinedMap.
ModuleHom right_mult_hom(const CyclicQuotientData& src,
                         const CyclicQuotientData& dst, const Element& u);

// Decides whether a homomorphism source -> target factors through a
// projective module.  Any such map lifts through the projective cover
// C : P ->> target, so the factoring maps are exactly the span of
// { C o H  :  H in Hom(source, P) }, which the constructor precomputes.
class StableZeroTester {
 public:
  StableZeroTester(ModulePtr source, ModulePtr target);
  bool stably_zero(const Matrix& f) const;
  bool stably_zero(const ModuleHom& f) const;
  std::size_t span_dim() const { return span_dim_; }

 private:
  ModulePtr source_;
  ModulePtr target_;
  std::optional<SpanTester> tester_;
  std::size_t span_dim_ = 0;
};

// Functorial syzygy of a map phi : x -> y: lift phi to the projective
// covers, restrict to the kernels, and return Omega(phi) between the
// syzygy modules.
ModuleHom lift_to_syzygies(const ModulePtr& x, const ModulePtr& y,
                           const Matrix& phi);

// The right-multiplication factorization of the sandwich word over a
// homogeneous presentation with an even variable count n.  The word
// w = u_1 u_2 ... u_{n-1} factors the map  . w : Lambda/(sigma^{a-1}) ->
// Lambda/(sigma)  into n-1 maps alternating between the two quotients:
// odd steps multiply by a single generator, even steps by a sandwich sum.
// Construction re-derives the word from the factors and the composite from
// the maps and checks both against the direct computations.
struct FactorChain {
  CyclicQuotientData mod_sigma;      // Lambda/(sigma)
  CyclicQuotientData mod_sigma_pow;  // Lambda/(sigma^{a-1})
  std::vector<Element> multipliers;
  std::vector<ModuleHom> maps;
  Element word;
  ModuleHom composition;
};
FactorChain build_chain(const PresentationPtr& p,
                        const std::vector<Scalar>& alpha);

// One chain step tested against the window of syzygy shifts of a module.
struct GhostStep {
  std::size_t index = 0;          // 1-based position in the chain
  std::size_t homs_checked = 0;   // maps g tested across the window
  bool all_ghost = true;          // every g o f_i was stably zero
  nlohmann::json to_json() const;
};

// Ghost-chain witness: every step becomes stably zero after composing with
// any map into any Omega^j m (j0 <= j <= j1), yet the composite of the
// whole chain is not stably zero.  A passing report witnesses a chain of
// n-1 ghosts with nonzero composite.
struct GhostReport {
  std::vector<Scalar> alpha;
  int j0 = 0, j1 = 0;
  std::size_t chain_length = 0;
  std::vector<GhostStep> steps;
  bool steps_ghost = false;
  bool composition_stably_nonzero = false;
  bool pass = false;
  std::size_t implied_lower_bound = 0;  // n+1 when pass
  nlohmann::json to_json() const;
};
GhostReport ghost_chain_witness(const PresentationPtr& p,
                                const std::vector<Scalar>& alpha,
                                const ModulePtr& m, int j0, int j1);

// The two interlocking short exact sequences
//   0 -> Lambda/(sigma) --.sigma^{a-1}--> Lambda -> Lambda/(sigma^{a-1}) -> 0
//   0 -> Lambda/(sigma^{a-1}) --.(-sigma)--> Lambda -> Lambda/(sigma) -> 0
// verified exact, the commuting ladders between them built from right
// multiplication by x_p and by sum_i sigma^i x_p sigma^{a-2-i}, and the
// resulting identifications Omega of each quotient with the other and
// Omega^2 of each quotient with itself, constructed explicitly.
struct PeriodicityReport {
  std::vector<Scalar> alpha;
  std::uint32_t var_index = 0;
  bool row1_exact = false, row2_exact = false;
  bool square_d1_left = false, square_d1_right = false;
  bool square_d2_left = false, square_d2_right = false;
  bool syzygy_iso_1 = false;  // Lambda/(sigma) ~ Omega(Lambda/(sigma^{a-1}))
  bool syzygy_iso_2 = false;  // Lambda/(sigma^{a-1}) ~ Omega(Lambda/(sigma))
  bool omega2_iso_1 = false;  // Omega^2 fixes Lambda/(sigma)
  bool omega2_iso_2 = false;  // Omega^2 fixes Lambda/(sigma^{a-1})
  bool socle_dim_one = false;
  bool envelope_injective = false;  // .sigma embeds Lambda/(sigma^{a-1})
  bool pass = false;
  nlohmann::json to_json() const;
};
PeriodicityReport periodicity_diagrams_check(const PresentationPtr& p,
                                             const std::vector<Scalar>& alpha,
                                             std::uint32_t var_index);

// Cheap isomorphism search: try basis maps and a few seeded combinations.
// Finding an invertible one proves the modules isomorphic; not finding one
// proves nothing.
enum class IsoVerdict { Isomorphic, Inconclusive };
IsoVerdict maybe_isomorphic(const ModulePtr& a, const ModulePtr& b,
                            std::uint64_t seed = 0,
                            std::size_t attempts = 8);

}  // namespace qci
