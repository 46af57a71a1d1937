#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "error.hpp"
#include "rng.hpp"

namespace qci {

enum class FieldKind { Prime, Cyclotomic };

class Scalar;

// Exact scalar field: either F_p (p prime, machine word) or the cyclotomic
// field Q(zeta_a), represented as Q[x]/(Phi_a(x)) with exact rational
// coefficient vectors of length phi(a).  A Field is an immutable shared
// context; Scalars carry a reference to it.
class Field {
 public:
  static Field prime(std::uint64_t p);
  static Field cyclotomic(std::uint32_t a);

  FieldKind kind() const { return impl_->kind; }
  bool is_prime_field() const { return impl_->kind == FieldKind::Prime; }
  std::uint64_t prime_modulus() const { return impl_->p; }
  std::uint32_t cyclotomic_order() const { return impl_->order; }
  std::uint64_t characteristic() const {
    return is_prime_field() ? impl_->p : 0;
  }
  // dimension over the prime field / over Q
  std::size_t degree() const { return impl_->deg; }

  bool same(const Field& other) const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  // Parse the canonical scalar string: F_p accepts "12", "-3", "2/3";
  // Q(zeta_a) accepts a comma-separated coefficient vector "1,-2/3,0"
  // (short vectors are zero-padded; a single entry means a constant).
  Scalar parse(const std::string& text) const;

  std::string spec_string() const;  // "p:5" or "cyclo:3"
  static Field parse_spec(const std::string& spec);

 private:
  struct Impl {
    FieldKind kind;
    std::uint64_t p = 0;       // prime modulus
    std::uint32_t order = 0;   // a for Q(zeta_a)
    std::size_t deg = 1;       // 1 or phi(a)
    std::vector<mpz_class> modulus;  // monic Phi_a, length deg+1
  };
  std::shared_ptr<const Impl> impl_;
  friend class Scalar;
};

class Scalar {
 public:
  Scalar() = default;  // invalid placeholder; any use throws

  Field field() const;
  bool valid() const { return field_ != nullptr; }

  bool is_zero() const;
  bool is_one() const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar inverse() const;
  // integer power; negative exponents go through the inverse
  Scalar pow(std::int64_t e) const;

  std::string to_string() const;

  // cyclotomic only: the coefficient vector (length phi(a))
  const std::vector<mpq_class>& coefficients() const;
  // prime only: canonical residue in [0, p)
  std::uint64_t residue() const;

 private:
  Scalar(std::shared_ptr<const Field::Impl> f, std::uint64_t r)
      : field_(std::move(f)), res_(r) {}
  Scalar(std::shared_ptr<const Field::Impl> f, std::vector<mpq_class> c)
      : field_(std::move(f)), coeffs_(std::move(c)) {}

  void check_same(const Scalar& o) const;

  std::shared_ptr<const Field::Impl> field_;
  std::uint64_t res_ = 0;
  std::vector<mpq_class> coeffs_;

  friend class Field;
};

// Smallest-generator primitive a-th root: over F_p (requires a | p-1) the
// first generator g = 2, 3, ... of F_p^* gives g^((p-1)/a); over Q(zeta_m)
// returns zeta_m^(m/a) for a | m.  Throws NoPrimitiveRoot otherwise.
Scalar primitive_root_of_unity(const Field& f, std::uint32_t a);

// Uniform residue over F_p; integer coefficient vector with entries in
// [box_lo, box_hi] over a cyclotomic field.
Scalar sample_scalar(const Field& f, Rng& rng, std::int64_t box_lo = -3,
                     std::int64_t box_hi = 3);

Scalar sample_nonzero_scalar(const Field& f, Rng& rng, std::int64_t box_lo = -3,
                             std::int64_t box_hi = 3);

std::uint64_t euler_phi(std::uint64_t n);

}  // namespace qci
