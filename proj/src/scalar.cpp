#include "scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qci {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Internal: return "Internal";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::NoPrimitiveRoot: return "NoPrimitiveRoot";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::PresentationMismatch: return "PresentationMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InhomogeneousElement: return "InhomogeneousElement";
    case ErrorCode::ZeroLeadingCoordinate: return "ZeroLeadingCoordinate";
    case ErrorCode::OddCodimension: return "OddCodimension";
    case ErrorCode::InvalidModule: return "InvalidModule";
    case ErrorCode::IllDefinedMap: return "IllDefinedMap";
    case ErrorCode::WindowEmpty: return "WindowEmpty";
    case ErrorCode::NoAlphaFound: return "NoAlphaFound";
    case ErrorCode::InvalidChainStep: return "InvalidChainStep";
    case ErrorCode::PositiveCharacteristic: return "PositiveCharacteristic";
    case ErrorCode::NonUnitalInput: return "NonUnitalInput";
    case ErrorCode::CannotDecide: return "CannotDecide";
    case ErrorCode::MathCheckFailed: return "MathCheckFailed";
  }
  return "Unknown";
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return (u64)((u128)a * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> fs;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

// ---- integer polynomials, low-to-high coefficient order ----
using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// exact division, remainder asserted zero (divisor monic in our uses is not
// guaranteed, but division stays exact for cyclotomic factors)
ZPoly zdivexact(ZPoly num, const ZPoly& den) {
  ztrim(num);
  if (num.empty()) return {};
  require(den.size() >= 1 && num.size() >= den.size(), ErrorCode::Internal,
          "bad cyclotomic division");
  ZPoly q(num.size() - den.size() + 1, mpz_class(0));
  for (std::size_t qi = q.size(); qi-- > 0;) {
    mpz_class c = num[qi + den.size() - 1] / den.back();
    q[qi] = c;
    if (c != 0)
      for (std::size_t j = 0; j < den.size(); ++j) num[qi + j] -= c * den[j];
  }
  for (const auto& c : num)
    if (c != 0) fail(ErrorCode::Internal, "inexact cyclotomic division");
  return q;
}

// n-th cyclotomic polynomial via (x^n - 1) / prod_{d|n, d<n} Phi_d
ZPoly cyclotomic_poly(std::uint32_t n) {
  std::vector<ZPoly> phi(n + 1);
  for (std::uint32_t m = 1; m <= n; ++m) {
    if (n % m != 0) continue;
    ZPoly num(m + 1, mpz_class(0));
    num[0] = -1;
    num[m] = 1;
    for (std::uint32_t d = 1; d < m; ++d)
      if (m % d == 0) num = zdivexact(std::move(num), phi[d]);
    phi[m] = std::move(num);
  }
  return phi[n];
}

// ---- rational polynomials for cyclotomic arithmetic ----
using QPoly = std::vector<mpq_class>;

int qdeg(const QPoly& p) {
  for (std::size_t i = p.size(); i-- > 0;)
    if (p[i] != 0) return (int)i;
  return -1;
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

// divmod: returns quotient, leaves remainder in num
QPoly qdivmod(QPoly& num, const QPoly& den) {
  int dd = qdeg(den);
  QPoly q;
  int dn = qdeg(num);
  if (dn < dd) return q;
  q.assign(dn - dd + 1, mpq_class(0));
  for (int i = dn; i >= dd; --i) {
    if (num[i] == 0) continue;
    mpq_class c = num[i] / den[dd];
    q[i - dd] = c;
    for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  return q;
}

}  // namespace

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t r = n;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      r -= r / d;
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

// ---------------------------------------------------------------- Field

Field Field::prime(std::uint64_t p) {
  require(p >= 2 && p < (1ULL << 31), ErrorCode::InvalidArgument,
          "prime modulus must be in [2, 2^31)");
  require(is_prime_u64(p), ErrorCode::InvalidArgument,
          "modulus " + std::to_string(p) + " is not prime");
  auto impl = std::make_shared<Impl>();
  impl->kind = FieldKind::Prime;
  impl->p = p;
  impl->deg = 1;
  Field f;
  f.impl_ = std::move(impl);
  return f;
}

Field Field::cyclotomic(std::uint32_t a) {
  require(a >= 1 && a <= 512, ErrorCode::InvalidArgument,
          "cyclotomic order must be in [1, 512]");
  auto impl = std::make_shared<Impl>();
  impl->kind = FieldKind::Cyclotomic;
  impl->order = a;
  impl->modulus = cyclotomic_poly(a);
  impl->deg = impl->modulus.size() - 1;
  Field f;
  f.impl_ = std::move(impl);
  return f;
}

bool Field::same(const Field& other) const {
  if (impl_ == other.impl_) return true;
  if (!impl_ || !other.impl_) return false;
  if (impl_->kind != other.impl_->kind) return false;
  return impl_->kind == FieldKind::Prime ? impl_->p == other.impl_->p
                                         : impl_->order == other.impl_->order;
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t v) const {
  if (impl_->kind == FieldKind::Prime) {
    std::int64_t m = v % (std::int64_t)impl_->p;
    if (m < 0) m += (std::int64_t)impl_->p;
    return Scalar(impl_, (std::uint64_t)m);
  }
  std::vector<mpq_class> c(impl_->deg, mpq_class(0));
  c[0] = mpq_class((long)v);
  return Scalar(impl_, std::move(c));
}

std::string Field::spec_string() const {
  return is_prime_field() ? "p:" + std::to_string(impl_->p)
                          : "cyclo:" + std::to_string(impl_->order);
}

Field Field::parse_spec(const std::string& spec) {
  auto colon = spec.find(':');
  require(colon != std::string::npos, ErrorCode::ParseError,
          "field spec must look like p:5 or cyclo:3, got '" + spec + "'");
  std::string kind = spec.substr(0, colon);
  std::string num = spec.substr(colon + 1);
  std::uint64_t v = 0;
  try {
    std::size_t used = 0;
    v = std::stoull(num, &used);
    require(used == num.size(), ErrorCode::ParseError, "bad number in field spec");
  } catch (const QciError&) {
    throw;
  } catch (...) {
    fail(ErrorCode::ParseError, "bad number in field spec '" + spec + "'");
  }
  if (kind == "p" || kind == "prime") return Field::prime(v);
  if (kind == "cyclo" || kind == "cyclotomic")
    return Field::cyclotomic((std::uint32_t)v);
  fail(ErrorCode::ParseError, "unknown field kind '" + kind + "'");
}

namespace {
mpq_class parse_rational(const std::string& s) {
  std::string t;
  for (char ch : s)
    if (!std::isspace((unsigned char)ch)) t += ch;
  require(!t.empty(), ErrorCode::ParseError, "empty rational literal");
  for (std::size_t i = 0; i < t.size(); ++i) {
    char ch = t[i];
    bool ok = std::isdigit((unsigned char)ch) || ch == '/' ||
              ((ch == '-' || ch == '+') &&
               (i == 0 || t[i - 1] == '/'));
    require(ok, ErrorCode::ParseError, "bad rational literal '" + s + "'");
  }
  try {
    mpq_class q(t);
    q.canonicalize();
    return q;
  } catch (...) {
    fail(ErrorCode::ParseError, "bad rational literal '" + s + "'");
  }
}
}  // namespace

Scalar Field::parse(const std::string& text) const {
  if (impl_->kind == FieldKind::Prime) {
    mpq_class q = parse_rational(text);
    mpz_class num = q.get_num(), den = q.get_den();
    mpz_class pz((unsigned long)impl_->p);
    mpz_class nr = num % pz;
    if (nr < 0) nr += pz;
    mpz_class dr = den % pz;
    require(dr != 0, ErrorCode::ParseError,
            "denominator divisible by field characteristic");
    u64 n = nr.get_ui(), d = dr.get_ui();
    u64 r = mulmod(n, powmod(d, impl_->p - 2, impl_->p), impl_->p);
    return Scalar(impl_, r);
  }
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  require(parts.size() <= impl_->deg, ErrorCode::ParseError,
          "coefficient vector longer than field degree");
  std::vector<mpq_class> c(impl_->deg, mpq_class(0));
  for (std::size_t i = 0; i < parts.size(); ++i) c[i] = parse_rational(parts[i]);
  return Scalar(impl_, std::move(c));
}

// ---------------------------------------------------------------- Scalar

Field Scalar::field() const {
  require(field_ != nullptr, ErrorCode::Internal, "use of invalid scalar");
  Field f;
  f.impl_ = field_;
  return f;
}

void Scalar::check_same(const Scalar& o) const {
  require(field_ && o.field_, ErrorCode::Internal, "use of invalid scalar");
  if (field_ == o.field_) return;
  bool ok = field_->kind == o.field_->kind &&
            (field_->kind == FieldKind::Prime ? field_->p == o.field_->p
                                              : field_->order == o.field_->order);
  require(ok, ErrorCode::FieldMismatch, "scalars from different fields");
}

bool Scalar::is_zero() const {
  require(field_ != nullptr, ErrorCode::Internal, "use of invalid scalar");
  if (field_->kind == FieldKind::Prime) return res_ == 0;
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Scalar::is_one() const {
  if (field_->kind == FieldKind::Prime) return res_ == 1 % field_->p;
  if (coeffs_[0] != 1) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool Scalar::operator==(const Scalar& o) const {
  check_same(o);
  if (field_->kind == FieldKind::Prime) return res_ == o.res_;
  return coeffs_ == o.coeffs_;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  if (field_->kind == FieldKind::Prime) {
    u64 r = res_ + o.res_;
    if (r >= field_->p) r -= field_->p;
    return Scalar(field_, r);
  }
  std::vector<mpq_class> c(coeffs_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coeffs_[i];
  return Scalar(field_, std::move(c));
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  if (field_->kind == FieldKind::Prime) {
    u64 r = res_ + field_->p - o.res_;
    if (r >= field_->p) r -= field_->p;
    return Scalar(field_, r);
  }
  std::vector<mpq_class> c(coeffs_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.coeffs_[i];
  return Scalar(field_, std::move(c));
}

Scalar Scalar::operator-() const {
  require(field_ != nullptr, ErrorCode::Internal, "use of invalid scalar");
  if (field_->kind == FieldKind::Prime)
    return Scalar(field_, res_ == 0 ? 0 : field_->p - res_);
  std::vector<mpq_class> c(coeffs_);
  for (auto& x : c) x = -x;
  return Scalar(field_, std::move(c));
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  if (field_->kind == FieldKind::Prime)
    return Scalar(field_, mulmod(res_, o.res_, field_->p));
  const std::size_t d = field_->deg;
  std::vector<mpq_class> prod(2 * d - 1, mpq_class(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (o.coeffs_[j] == 0) continue;
      prod[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  // reduce modulo the monic minimal polynomial
  const auto& m = field_->modulus;
  for (std::size_t i = prod.size(); i-- > d;) {
    if (prod[i] == 0) continue;
    mpq_class c = prod[i];
    prod[i] = 0;
    for (std::size_t j = 0; j < d; ++j)
      prod[i - d + j] -= c * mpq_class(m[j]);
  }
  prod.resize(d);
  return Scalar(field_, std::move(prod));
}

Scalar Scalar::inverse() const {
  require(!is_zero(), ErrorCode::InvalidArgument, "inverse of zero");
  if (field_->kind == FieldKind::Prime)
    return Scalar(field_, powmod(res_, field_->p - 2, field_->p));
  // extended Euclid in Q[x] against Phi_a; track the cofactor of this value
  const std::size_t d = field_->deg;
  QPoly r0(coeffs_.begin(), coeffs_.end());
  QPoly r1(d + 1);
  for (std::size_t i = 0; i <= d; ++i) r1[i] = mpq_class(field_->modulus[i]);
  QPoly u0{mpq_class(1)}, u1{};
  while (qdeg(r1) >= 0) {
    QPoly q = qdivmod(r0, r1);
    std::swap(r0, r1);  // r0 holds old remainder now
    // u0, u1 = u1, u0 - q*u1
    QPoly qu = qmul(q, u1);
    QPoly nu(std::max(u0.size(), qu.size()), mpq_class(0));
    for (std::size_t i = 0; i < u0.size(); ++i) nu[i] += u0[i];
    for (std::size_t i = 0; i < qu.size(); ++i) nu[i] -= qu[i];
    u0 = std::move(u1);
    u1 = std::move(nu);
  }
  int dg = qdeg(r0);
  require(dg == 0, ErrorCode::Internal, "cyclotomic inverse: gcd not constant");
  std::vector<mpq_class> c(d, mpq_class(0));
  for (std::size_t i = 0; i < u0.size() && i < d; ++i) c[i] = u0[i] / r0[0];
  return Scalar(field_, std::move(c));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::pow(std::int64_t e) const {
  require(field_ != nullptr, ErrorCode::Internal, "use of invalid scalar");
  Field f;
  f.impl_ = field_;
  if (e == 0) return f.one();
  Scalar base = e < 0 ? inverse() : *this;
  std::uint64_t k = e < 0 ? (std::uint64_t)(-(e + 1)) + 1 : (std::uint64_t)e;
  Scalar acc = f.one();
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

std::string Scalar::to_string() const {
  require(field_ != nullptr, ErrorCode::Internal, "use of invalid scalar");
  if (field_->kind == FieldKind::Prime) return std::to_string(res_);
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ',';
    out += coeffs_[i].get_str();
  }
  return out;
}

const std::vector<mpq_class>& Scalar::coefficients() const {
  require(field_ && field_->kind == FieldKind::Cyclotomic, ErrorCode::Internal,
          "coefficients() on non-cyclotomic scalar");
  return coeffs_;
}

std::uint64_t Scalar::residue() const {
  require(field_ && field_->kind == FieldKind::Prime, ErrorCode::Internal,
          "residue() on non-prime scalar");
  return res_;
}

// ------------------------------------------------------------- roots

Scalar primitive_root_of_unity(const Field& f, std::uint32_t a) {
  require(a >= 1, ErrorCode::InvalidArgument, "root order must be positive");
  if (f.is_prime_field()) {
    const u64 p = f.prime_modulus();
    require((p - 1) % a == 0, ErrorCode::NoPrimitiveRoot,
            "no primitive " + std::to_string(a) + "-th root in F_" +
                std::to_string(p) + " (order must divide p-1)");
    if (p == 2) return f.one();
    auto fac = prime_factors(p - 1);
    for (u64 g = 2; g < p; ++g) {
      bool gen = true;
      for (u64 q : fac)
        if (powmod(g, (p - 1) / q, p) == 1) {
          gen = false;
          break;
        }
      if (gen) return f.from_int((std::int64_t)powmod(g, (p - 1) / a, p));
    }
    fail(ErrorCode::Internal, "no generator found");
  }
  const std::uint32_t m = f.cyclotomic_order();
  require(m % a == 0, ErrorCode::NoPrimitiveRoot,
          "Q(zeta_" + std::to_string(m) + ") carries no canonical primitive " +
              std::to_string(a) + "-th root (order must divide " +
              std::to_string(m) + ")");
  // zeta itself; for degree-1 fields x reduces to the constant -Phi(0)
  Scalar zeta = f.zero();
  if (f.degree() >= 2) {
    std::string s = "0,1";
    zeta = f.parse(s);
  } else {
    zeta = m == 1 ? f.one() : f.from_int(-1);
  }
  return zeta.pow((std::int64_t)(m / a));
}

Scalar sample_scalar(const Field& f, Rng& rng, std::int64_t lo,
                     std::int64_t hi) {
  if (f.is_prime_field())
    return f.from_int((std::int64_t)rng.below(f.prime_modulus()));
  require(lo <= hi, ErrorCode::InvalidArgument, "empty sampling box");
  std::string text;
  for (std::size_t i = 0; i < f.degree(); ++i) {
    if (i) text += ',';
    text += std::to_string(rng.between(lo, hi));
  }
  return f.parse(text);
}

Scalar sample_nonzero_scalar(const Field& f, Rng& rng, std::int64_t lo,
                             std::int64_t hi) {
  for (int tries = 0; tries < 4096; ++tries) {
    Scalar s = sample_scalar(f, rng, lo, hi);
    if (!s.is_zero()) return s;
  }
  fail(ErrorCode::Internal, "sampling failed to produce a nonzero scalar");
}

}  // namespace qci
