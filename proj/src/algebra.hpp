#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "exact_matrix.hpp"
#include "json.hpp"

namespace qci {

// Exponent vector of a normal-form monomial x1^e1 ... xn^en, 0 <= e_i < a_i.
using Monomial = std::vector<std::uint32_t>;

struct Presentation;
using PresentationPtr = std::shared_ptr<const Presentation>;

// Finite-dimensional algebra k<X1..Xn> / (X_u^{a_u}, X_i X_j - q_ij X_j X_i)
// for i < j, with every q_ij invertible.  Monomials x1^e1...xn^en with
// e_i < a_i form a basis of dimension prod a_i; indices below are 0-based.
struct Presentation {
  Field field;
  std::uint32_t n = 0;
  std::vector<std::uint32_t> exponents;
  std::vector<Scalar> commutators;      // upper triangular, row-major
  std::vector<Scalar> inv_commutators;  // cached q_ij^{-1}
  std::uint64_t dim = 1;

  static PresentationPtr create(const Field& f, std::vector<std::uint32_t> exps,
                                std::vector<Scalar> comms);
  // homogeneous: all exponents a, every q_ij the canonical primitive a-th root
  static PresentationPtr homogeneous(const Field& f, std::uint32_t n,
                                     std::uint32_t a);

  const Scalar& q(std::uint32_t i, std::uint32_t j) const;      // i < j
  const Scalar& q_inv(std::uint32_t i, std::uint32_t j) const;  // i < j
  std::uint64_t dimension() const { return dim; }
  bool same(const Presentation& o) const;

  // all exponents equal and all commutators one primitive a-th root
  bool is_homogeneous(std::uint32_t* a_out = nullptr,
                      Scalar* q_out = nullptr) const;

  // rank of the monomial in ascending lexicographic order (e1 most significant)
  std::uint64_t monomial_index(const Monomial& m) const;
  Monomial monomial_at(std::uint64_t index) const;

  nlohmann::json to_json() const;
  static PresentationPtr from_json(const nlohmann::json& j);
};

void check_same_presentation(const PresentationPtr& a, const PresentationPtr& b);

int total_degree(const Monomial& m);

// Sparse exact element in the monomial basis.
class Element {
 public:
  Element() = default;
  explicit Element(PresentationPtr p) : pres_(std::move(p)) {}

  static Element zero(PresentationPtr p) { return Element(std::move(p)); }
  static Element one(PresentationPtr p);
  static Element generator(PresentationPtr p, std::uint32_t i);
  static Element monomial_term(PresentationPtr p, const Monomial& m,
                               const Scalar& c);

  const PresentationPtr& presentation() const { return pres_; }
  bool valid() const { return pres_ != nullptr; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  Scalar coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Scalar& c);

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator*(const Element& o) const;
  Element operator-() const;
  Element scaled(const Scalar& s) const;
  bool operator==(const Element& o) const;
  bool operator!=(const Element& o) const { return !(*this == o); }

  Element pow(std::uint32_t m) const;

  // total degree when all monomials agree; zero element reports homogeneous
  bool is_homogeneous(int* degree_out = nullptr) const;
  // Z^n degree when all monomials agree
  bool is_multihomogeneous(std::vector<std::int64_t>* deg_out = nullptr) const;
  // largest exponent of x_{var} occurring
  std::uint32_t top_exponent(std::uint32_t var) const;

  Matrix to_vector() const;
  static Element from_vector(PresentationPtr p, const Matrix& v);

  nlohmann::json to_json() const;
  static Element from_json(PresentationPtr p, const nlohmann::json& j);
  std::string to_string() const;

 private:
  PresentationPtr pres_;
  std::map<Monomial, Scalar> terms_;
};

// sum_i alpha_i x_i
Element linear_form(PresentationPtr p, const std::vector<Scalar>& alpha);

// monomials of total degree d, ascending lexicographic
std::vector<Monomial> graded_component_basis(const PresentationPtr& p, int d);

// lam = free_part + linear_form(alpha) * cofactor, free_part without x1.
// Requires alpha[0] != 0; uniqueness is a property of the algebra, and the
// reassembled identity is asserted before returning.
struct FormSplit {
  Element free_part;
  Element cofactor;
};
FormSplit decompose_by_form(const Element& lam,
                            const std::vector<Scalar>& alpha);

// The distinguished tuple (alpha1, 0, 1, 0, ..., 1, 0) used by the generic
// non-membership argument in even rank; requires homogeneous presentation.
std::vector<Scalar> distinguished_tuple(const PresentationPtr& p,
                                        const Scalar& alpha1);

// Closed form for the x1-free part of powers of
//   q^{-1}*sigma + (1 - q^{-1})*x_{n-1}:
// it must equal prod_{j=1..i}(1 - q^{-j}) * x_{n-1}^i.  Even n >= 4.
bool free_part_power_identity(const PresentationPtr& p, const Scalar& alpha1,
                              std::uint32_t i);

// Algebra map determined by generator images; images are checked against the
// defining relations (nilpotency and commutation) before use.
class GeneratorImageMap {
 public:
  GeneratorImageMap(PresentationPtr source, PresentationPtr target,
                    std::vector<Element> images);
  Element apply(const Element& e) const;
  const PresentationPtr& source() const { return source_; }
  const PresentationPtr& target() const { return target_; }

 private:
  PresentationPtr source_, target_;
  std::vector<Element> images_;
};

// Sub-presentation on a strictly increasing index subset, with the
// element-level inclusion and the retraction that kills the complement.
struct SubalgebraInclusion {
  PresentationPtr ambient;
  PresentationPtr sub;
  std::vector<std::uint32_t> indices;  // 0-based, strictly increasing

  Element include(const Element& e) const;
  Element retract(const Element& e) const;
};
SubalgebraInclusion subalgebra(const PresentationPtr& p,
                               std::vector<std::uint32_t> indices);

// One twisted-tensor step: adjoin a final variable with nilpotency exponent
// `exponent` and commutators q_{i,n+1} = comms_new[i].  Iterating builds any
// presentation one variable at a time.
PresentationPtr adjoin_variable(const PresentationPtr& p,
                                std::uint32_t exponent,
                                const std::vector<Scalar>& comms_new);

// Bicharacter of the adjoined variable: g(z, d) = prod_i q_{i,n+1}^{-d*z_i}
// for z in Z^n, d in Z.  Used by twisted tensor modules and endomorphism
// twists alike.
Scalar adjoin_twist(const PresentationPtr& big,
                    const std::vector<std::int64_t>& z, std::int64_t d);

// Check that multiplication in `big` agrees with the twisted-product rule
// (l1 (x) g1)(l2 (x) g2) = g(|l2|,|g1|) l1 l2 (x) g1 g2 on all basis pairs.
bool adjoined_product_consistent(const PresentationPtr& big,
                                 const PresentationPtr& base);

}  // namespace qci
