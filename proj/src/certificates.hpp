#pragma once

#include "modules.hpp"
#include "rng.hpp"

namespace qci {

// sum_{i=0}^{a-2} s^i * u * s^{a-2-i}
Element sandwich_sum(const Element& s, const Element& u, std::uint32_t a);

// The alternating sandwich word built from sigma = sum alpha_i x_i over a
// homogeneous presentation.  For an even variable count n this is
//   x_{n-1} (sum_i sigma^i x_n sigma^{a-2-i}) x_{n-3} (...) ... x_3 (...) x_2,
// degenerating to x_2 when n = 2.  For an odd count the trailing x_2 factor
// is absent and the leading factors run x_{n-1}, x_{n-3}, ..., x_2 — the
// reduced word used on the codimension-(n-1) subalgebra; n = 1 gives 1.
Element witness_word(const PresentationPtr& p,
                     const std::vector<Scalar>& alpha);

// x_2 x_3^{a-1} x_4 x_5^{a-1} ... x_{n-1}^{a-1} x_n (even n; x_2 when n = 2)
Monomial certificate_monomial(const PresentationPtr& p);

// coefficient of the certificate monomial in the x_1-free part of w;
// requires alpha[0] != 0
Scalar lambda_coefficient(const Element& w, const std::vector<Scalar>& alpha);

// Degree-restricted span test: is w in  left*Lambda + Lambda*right?
// Sound for homogeneous data because the ideal sum is graded: only products
// with basis monomials of the complementary degrees can contribute.
struct SpanCheck {
  bool member = false;
  std::size_t rows = 0;  // dimension of the graded component of deg(w)
  std::size_t cols = 0;  // number of product columns spanned
};
SpanCheck in_two_sided(const Element& w, const Element& left,
                       const Element& right);
// Same question answered with columns over every basis monomial (no degree
// restriction); used to confirm the restriction loses nothing.
SpanCheck in_two_sided_full(const Element& w, const Element& left,
                            const Element& right);

struct MembershipReport {
  std::vector<Scalar> alpha;
  bool member = false;
  Scalar lambda_coeff;            // zero when not applicable
  bool lambda_applicable = false; // even n and alpha[0] != 0
  int degree = -1;                // of w (-1 when w = 0)
  std::size_t matrix_rows = 0, matrix_cols = 0;
  nlohmann::json to_json() const;
};

// w_alpha membership in sigma*Lambda + Lambda*sigma, with the certificate
// coefficient alongside.  The certificate is one-directional: a nonzero
// coefficient forces member = false (the linear algebra is authoritative,
// and the implication itself is exercised by the test suite).
MembershipReport membership_two_sided(const PresentationPtr& p,
                                      const std::vector<Scalar>& alpha,
                                      const Element& w);

// Reduced-word test on the subalgebra generated by x_2..x_n: is the reduced
// word outside  sigma~ * sub + sub * sigma~^{a-1}?  When sigma~ = 0 both
// spans are zero, so the answer is simply whether the word is nonzero.
struct ReducedOutsideReport {
  bool outside = false;
  bool word_zero = false;
  std::size_t matrix_rows = 0, matrix_cols = 0;
  nlohmann::json to_json() const;
};
ReducedOutsideReport reduced_membership(const PresentationPtr& p,
                                        const std::vector<Scalar>& alpha_tilde);

// Consistency of the substitution x_2 |-> x_1 + x_2 (fixing the other
// generators) from the subalgebra on x_2..x_n into the full algebra:
//   - it is a well-defined algebra map,
//   - it carries sigma~ to sigma_alpha for alpha = (a2, a2, a3, ..., an),
//   - (reduced word) * x_2 maps to the full word w_alpha,
//   - Lambda*sigma^{a-1}*x_2 lies inside sigma*Lambda + Lambda*sigma in the
//     degree of w_alpha,
//   - if the reduced word is inside its ideal, w_alpha is a member too.
struct SubstitutionReport {
  bool map_well_defined = false;
  bool sigma_matches = false;
  bool word_matches = false;
  bool containment_holds = false;
  bool implication_holds = false;
  bool pass = false;
  nlohmann::json to_json() const;
};
SubstitutionReport substitution_consistency(
    const PresentationPtr& p, const std::vector<Scalar>& alpha_tilde);

// Rank-locus sampling for the action of sigma_alpha and sigma_alpha^{a-1}
// on a module M, with the two kernel implications verified on every
// rank-maximal sample:
//   sigma_alpha m = 0      =>  sigma_beta m in sigma_alpha M
//   sigma_alpha^{a-1} m = 0 => (sum_i sigma^i sigma_beta sigma^{a-2-i}) m
//                              in sigma_alpha^{a-1} M
struct OpenSetTrial {
  std::vector<Scalar> alpha;
  std::size_t rank_sigma = 0;
  std::size_t rank_sigma_pow = 0;
  bool in_u1 = false, in_u2 = false, in_v = false;
  bool implications_checked = false;
  bool implications_hold = true;
  nlohmann::json to_json() const;
};
struct OpenSetSample {
  std::size_t generic_rank_sigma = 0;
  std::size_t generic_rank_sigma_pow = 0;
  std::vector<OpenSetTrial> trials;
  bool all_implications_hold = true;
  std::size_t count_u1 = 0, count_u2 = 0, count_v = 0;
  nlohmann::json to_json() const;
};
OpenSetSample sample_open_sets(const PresentationPtr& p, const ModulePtr& m,
                               std::size_t trials, std::uint64_t seed,
                               std::size_t beta_trials = 5);

std::vector<Scalar> sample_tuple(const PresentationPtr& p, Rng& rng);

}  // namespace qci
