#include "algebra.hpp"

#include <algorithm>
#include <sstream>

namespace qci {

namespace {

std::size_t pair_index(std::uint32_t n, std::uint32_t i, std::uint32_t j) {
  // row-major position of (i, j), i < j, in the strict upper triangle
  return static_cast<std::size_t>(i) * (2u * n - i - 1u) / 2u + (j - i - 1u);
}

std::vector<std::uint32_t> prime_divisors_u32(std::uint32_t v) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

bool is_primitive_root(const Scalar& q, std::uint32_t a, const Field& f) {
  if (!q.pow(a).is_one()) return false;
  for (std::uint32_t d : prime_divisors_u32(a)) {
    if (q.pow(a / d).is_one()) return false;
  }
  (void)f;
  return true;
}

nlohmann::json field_to_json(const Field& f) {
  nlohmann::json j;
  if (f.is_prime_field()) {
    j["kind"] = "prime";
    j["p"] = f.prime_modulus();
  } else {
    j["kind"] = "cyclotomic";
    j["a"] = f.cyclotomic_order();
  }
  return j;
}

Field field_from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "prime") return Field::prime(j.at("p").get<std::uint64_t>());
  if (kind == "cyclotomic")
    return Field::cyclotomic(j.at("a").get<std::uint32_t>());
  fail(ErrorCode::ParseError, "unknown field kind '" + kind + "'");
}

}  // namespace

PresentationPtr Presentation::create(const Field& f,
                                     std::vector<std::uint32_t> exps,
                                     std::vector<Scalar> comms) {
  auto p = std::make_shared<Presentation>();
  p->field = f;
  require(!exps.empty() && exps.size() <= 16, ErrorCode::InvalidArgument,
          "variable count must be between 1 and 16");
  p->n = static_cast<std::uint32_t>(exps.size());
  for (std::uint32_t a : exps)
    require(a >= 2 && a <= 64, ErrorCode::InvalidArgument,
            "every nilpotency exponent must lie in [2, 64]");
  p->exponents = std::move(exps);
  const std::size_t want =
      static_cast<std::size_t>(p->n) * (p->n - 1) / 2;
  require(comms.size() == want, ErrorCode::InvalidArgument,
          "expected " + std::to_string(want) + " commutators, got " +
              std::to_string(comms.size()));
  p->inv_commutators.reserve(comms.size());
  for (const Scalar& c : comms) {
    require(c.field().same(f), ErrorCode::FieldMismatch,
            "commutator from a different field");
    require(!c.is_zero(), ErrorCode::InvalidArgument,
            "commutators must be invertible");
    p->inv_commutators.push_back(c.inverse());
  }
  p->commutators = std::move(comms);
  p->dim = 1;
  for (std::uint32_t a : p->exponents) {
    p->dim *= a;
    require(p->dim <= (1ull << 31), ErrorCode::InvalidArgument,
            "algebra dimension exceeds 2^31");
  }
  return p;
}

PresentationPtr Presentation::homogeneous(const Field& f, std::uint32_t n,
                                          std::uint32_t a) {
  Scalar q = primitive_root_of_unity(f, a);
  std::vector<std::uint32_t> exps(n, a);
  std::vector<Scalar> comms(static_cast<std::size_t>(n) * (n - 1) / 2, q);
  return create(f, std::move(exps), std::move(comms));
}

const Scalar& Presentation::q(std::uint32_t i, std::uint32_t j) const {
  require(i < j && j < n, ErrorCode::InvalidArgument, "bad commutator pair");
  return commutators[pair_index(n, i, j)];
}

const Scalar& Presentation::q_inv(std::uint32_t i, std::uint32_t j) const {
  require(i < j && j < n, ErrorCode::InvalidArgument, "bad commutator pair");
  return inv_commutators[pair_index(n, i, j)];
}

bool Presentation::same(const Presentation& o) const {
  if (!field.same(o.field) || n != o.n || exponents != o.exponents)
    return false;
  for (std::size_t k = 0; k < commutators.size(); ++k)
    if (commutators[k] != o.commutators[k]) return false;
  return true;
}

bool Presentation::is_homogeneous(std::uint32_t* a_out, Scalar* q_out) const {
  const std::uint32_t a = exponents[0];
  for (std::uint32_t e : exponents)
    if (e != a) return false;
  for (std::size_t k = 1; k < commutators.size(); ++k)
    if (commutators[k] != commutators[0]) return false;
  if (!commutators.empty() &&
      !is_primitive_root(commutators[0], a, field))
    return false;
  if (a_out) *a_out = a;
  if (q_out && !commutators.empty()) *q_out = commutators[0];
  return true;
}

std::uint64_t Presentation::monomial_index(const Monomial& m) const {
  require(m.size() == n, ErrorCode::InvalidArgument, "monomial length");
  std::uint64_t idx = 0;
  for (std::uint32_t i = 0; i < n; ++i) {
    require(m[i] < exponents[i], ErrorCode::InvalidArgument,
            "monomial exponent out of range");
    idx = idx * exponents[i] + m[i];
  }
  return idx;
}

Monomial Presentation::monomial_at(std::uint64_t index) const {
  require(index < dim, ErrorCode::InvalidArgument, "monomial index");
  Monomial m(n, 0);
  for (std::uint32_t i = n; i-- > 0;) {
    m[i] = static_cast<std::uint32_t>(index % exponents[i]);
    index /= exponents[i];
  }
  return m;
}

nlohmann::json Presentation::to_json() const {
  nlohmann::json j;
  j["field"] = field_to_json(field);
  j["n"] = n;
  j["exponents"] = exponents;
  nlohmann::json cs = nlohmann::json::array();
  for (const Scalar& c : commutators) cs.push_back(c.to_string());
  j["commutators"] = cs;
  return j;
}

PresentationPtr Presentation::from_json(const nlohmann::json& j) {
  try {
    Field f = field_from_json(j.at("field"));
    auto exps = j.at("exponents").get<std::vector<std::uint32_t>>();
    std::vector<Scalar> comms;
    for (const auto& c : j.at("commutators"))
      comms.push_back(f.parse(c.get<std::string>()));
    std::uint32_t n = j.at("n").get<std::uint32_t>();
    require(n == exps.size(), ErrorCode::ParseError,
            "'n' disagrees with the exponent list");
    return create(f, std::move(exps), std::move(comms));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError,
         std::string("malformed presentation: ") + e.what());
  }
}

void check_same_presentation(const PresentationPtr& a,
                             const PresentationPtr& b) {
  require(a && b, ErrorCode::InvalidArgument, "null presentation");
  require(a.get() == b.get() || a->same(*b), ErrorCode::PresentationMismatch,
          "elements live over different presentations");
}

int total_degree(const Monomial& m) {
  int d = 0;
  for (std::uint32_t e : m) d += static_cast<int>(e);
  return d;
}

Element Element::one(PresentationPtr p) {
  Element e(p);
  e.add_term(Monomial(p->n, 0), p->field.one());
  return e;
}

Element Element::generator(PresentationPtr p, std::uint32_t i) {
  require(i < p->n, ErrorCode::InvalidArgument, "generator index");
  Monomial m(p->n, 0);
  m[i] = 1;
  Element e(p);
  e.add_term(m, p->field.one());
  return e;
}

Element Element::monomial_term(PresentationPtr p, const Monomial& m,
                               const Scalar& c) {
  Element e(p);
  p->monomial_index(m);  // bounds check
  e.add_term(m, c);
  return e;
}

Scalar Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? pres_->field.zero() : it->second;
}

void Element::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element Element::operator+(const Element& o) const {
  check_same_presentation(pres_, o.pres_);
  Element r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Element Element::operator-(const Element& o) const {
  check_same_presentation(pres_, o.pres_);
  Element r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Element Element::operator-() const {
  Element r(pres_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Element Element::scaled(const Scalar& s) const {
  Element r(pres_);
  if (s.is_zero()) return r;
  for (const auto& [m, c] : terms_) r.add_term(m, c * s);
  return r;
}

Element Element::operator*(const Element& o) const {
  check_same_presentation(pres_, o.pres_);
  const Presentation& p = *pres_;
  Element r(pres_);
  for (const auto& [e, ce] : terms_) {
    for (const auto& [f, cf] : o.terms_) {
      bool fits = true;
      for (std::uint32_t i = 0; i < p.n && fits; ++i)
        fits = e[i] + f[i] < p.exponents[i];
      if (!fits) continue;
      // x^e * x^f = prod_{i<j} q_ij^{-f_i e_j} x^{e+f}
      Scalar c = ce * cf;
      for (std::uint32_t i = 0; i + 1 < p.n; ++i) {
        if (f[i] == 0) continue;
        for (std::uint32_t j = i + 1; j < p.n; ++j) {
          if (e[j] == 0) continue;
          c = c * p.q_inv(i, j).pow(static_cast<std::int64_t>(f[i]) * e[j]);
        }
      }
      Monomial g(p.n);
      for (std::uint32_t i = 0; i < p.n; ++i) g[i] = e[i] + f[i];
      r.add_term(g, c);
    }
  }
  return r;
}

bool Element::operator==(const Element& o) const {
  check_same_presentation(pres_, o.pres_);
  if (terms_.size() != o.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt)
    if (it->first != jt->first || it->second != jt->second) return false;
  return true;
}

Element Element::pow(std::uint32_t m) const {
  Element r = one(pres_);
  for (std::uint32_t k = 0; k < m; ++k) r = r * *this;
  return r;
}

bool Element::is_homogeneous(int* degree_out) const {
  if (terms_.empty()) {
    if (degree_out) *degree_out = -1;
    return true;
  }
  const int d = total_degree(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (total_degree(m) != d) return false;
  if (degree_out) *degree_out = d;
  return true;
}

bool Element::is_multihomogeneous(std::vector<std::int64_t>* deg_out) const {
  if (terms_.empty()) return true;
  const Monomial& first = terms_.begin()->first;
  for (const auto& [m, c] : terms_)
    if (m != first) return false;
  if (deg_out) deg_out->assign(first.begin(), first.end());
  return true;
}

std::uint32_t Element::top_exponent(std::uint32_t var) const {
  std::uint32_t top = 0;
  for (const auto& [m, c] : terms_) top = std::max(top, m[var]);
  return top;
}

Matrix Element::to_vector() const {
  Matrix v(pres_->field, pres_->dim, 1);
  for (const auto& [m, c] : terms_)
    v.at(static_cast<std::size_t>(pres_->monomial_index(m)), 0) = c;
  return v;
}

Element Element::from_vector(PresentationPtr p, const Matrix& v) {
  require(v.rows() == p->dim && v.cols() == 1, ErrorCode::DimensionMismatch,
          "coordinate vector has the wrong shape");
  Element e(p);
  for (std::uint64_t i = 0; i < p->dim; ++i) {
    const Scalar& c = v.at(static_cast<std::size_t>(i), 0);
    if (!c.is_zero()) e.terms_.emplace(p->monomial_at(i), c);
  }
  return e;
}

nlohmann::json Element::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : terms_)
    terms.push_back(nlohmann::json::array({m, c.to_string()}));
  nlohmann::json j;
  j["terms"] = terms;
  return j;
}

Element Element::from_json(PresentationPtr p, const nlohmann::json& j) {
  try {
    Element e(p);
    for (const auto& t : j.at("terms")) {
      require(t.is_array() && t.size() == 2, ErrorCode::ParseError,
              "element term must be [monomial, coefficient]");
      Monomial m = t.at(0).get<Monomial>();
      p->monomial_index(m);  // bounds check
      e.add_term(m, p->field.parse(t.at(1).get<std::string>()));
    }
    return e;
  } catch (const nlohmann::json::exception& ex) {
    fail(ErrorCode::ParseError,
         std::string("malformed element: ") + ex.what());
  }
}

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    std::string cs = c.to_string();
    if (cs.find(',') != std::string::npos) cs = "(" + cs + ")";
    out << cs;
    for (std::uint32_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      out << "*x" << (i + 1);
      if (m[i] > 1) out << "^" << m[i];
    }
  }
  return out.str();
}

Element linear_form(PresentationPtr p, const std::vector<Scalar>& alpha) {
  require(alpha.size() == p->n, ErrorCode::InvalidArgument,
          "tuple length must equal the variable count");
  Element e(p);
  for (std::uint32_t i = 0; i < p->n; ++i) {
    require(alpha[i].field().same(p->field), ErrorCode::FieldMismatch,
            "tuple entry from a different field");
    if (!alpha[i].is_zero())
      e.add_term([&] {
        Monomial m(p->n, 0);
        m[i] = 1;
        return m;
      }(), alpha[i]);
  }
  return e;
}

namespace {
void enumerate_graded(const Presentation& p, std::uint32_t var, int remaining,
                      Monomial& cur, std::vector<Monomial>& out) {
  if (var + 1 == p.n) {
    if (remaining < static_cast<int>(p.exponents[var])) {
      cur[var] = static_cast<std::uint32_t>(remaining);
      out.push_back(cur);
    }
    return;
  }
  const int cap =
      std::min(remaining, static_cast<int>(p.exponents[var]) - 1);
  for (int e = 0; e <= cap; ++e) {
    cur[var] = static_cast<std::uint32_t>(e);
    enumerate_graded(p, var + 1, remaining - e, cur, out);
  }
}
}  // namespace

std::vector<Monomial> graded_component_basis(const PresentationPtr& p, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  Monomial cur(p->n, 0);
  enumerate_graded(*p, 0, d, cur, out);
  return out;
}

FormSplit decompose_by_form(const Element& lam,
                            const std::vector<Scalar>& alpha) {
  const PresentationPtr& p = lam.presentation();
  require(p != nullptr, ErrorCode::InvalidArgument, "element is empty");
  require(alpha.size() == p->n, ErrorCode::InvalidArgument,
          "tuple length must equal the variable count");
  require(!alpha[0].is_zero(), ErrorCode::ZeroLeadingCoordinate,
          "the first tuple entry must be invertible");

  const Element sigma = linear_form(p, alpha);
  Element sigma_rest = sigma;  // sigma - alpha_1 x_1, free of x_1
  {
    Monomial m(p->n, 0);
    m[0] = 1;
    sigma_rest.add_term(m, -alpha[0]);
  }
  const Scalar inv0 = alpha[0].inverse();

  FormSplit out{Element::zero(p), Element::zero(p)};
  Element work = lam;
  std::uint32_t guard = p->exponents[0] + 2;
  while (!work.is_zero()) {
    require(guard-- > 0, ErrorCode::Internal,
            "leading-variable reduction failed to terminate");
    const std::uint32_t d1 = work.top_exponent(0);
    if (d1 == 0) {
      out.free_part = out.free_part + work;
      break;
    }
    // Peel the top slice T (all terms with x_1-exponent d1) and rewrite it
    // as sigma*S - sigma_rest*S with S = inv0 * (T shifted down by one x_1).
    Element top(p), shifted(p);
    for (const auto& [m, c] : work.terms()) {
      if (m[0] != d1) continue;
      top.add_term(m, c);
      Monomial s = m;
      s[0] -= 1;
      shifted.add_term(s, c * inv0);
    }
    out.cofactor = out.cofactor + shifted;
    work = (work - top) - sigma_rest * shifted;
  }

  require(out.free_part.top_exponent(0) == 0, ErrorCode::Internal,
          "reduction left the leading variable behind");
  require(lam == out.free_part + sigma * out.cofactor, ErrorCode::Internal,
          "reduction does not reassemble");
  return out;
}

std::vector<Scalar> distinguished_tuple(const PresentationPtr& p,
                                        const Scalar& alpha1) {
  require(p->n >= 2 && p->n % 2 == 0, ErrorCode::OddCodimension,
          "the distinguished tuple needs an even variable count");
  require(!alpha1.is_zero(), ErrorCode::ZeroLeadingCoordinate,
          "the leading entry must be invertible");
  std::vector<Scalar> alpha(p->n, p->field.zero());
  alpha[0] = alpha1;
  for (std::uint32_t j = 2; j + 1 < p->n; j += 2) alpha[j] = p->field.one();
  return alpha;
}

bool free_part_power_identity(const PresentationPtr& p, const Scalar& alpha1,
                              std::uint32_t i) {
  std::uint32_t a = 0;
  Scalar q;
  require(p->is_homogeneous(&a, &q), ErrorCode::InvalidArgument,
          "power identity needs a homogeneous presentation");
  require(p->n >= 4 && p->n % 2 == 0, ErrorCode::OddCodimension,
          "power identity needs even variable count >= 4");
  const std::vector<Scalar> alpha = distinguished_tuple(p, alpha1);
  const Scalar qinv = q.inverse();
  const Scalar one = p->field.one();

  Element inner = linear_form(p, alpha).scaled(qinv) +
                  Element::generator(p, p->n - 2).scaled(one - qinv);
  const Element lhs = decompose_by_form(inner.pow(i), alpha).free_part;

  Scalar coeff = one;
  for (std::uint32_t j = 1; j <= i; ++j) coeff = coeff * (one - qinv.pow(j));
  Element rhs(p);
  if (i < a && !coeff.is_zero()) {
    Monomial m(p->n, 0);
    m[p->n - 2] = i;
    rhs = Element::monomial_term(p, m, coeff);
  }
  return lhs == rhs;
}

GeneratorImageMap::GeneratorImageMap(PresentationPtr source,
                                     PresentationPtr target,
                                     std::vector<Element> images)
    : source_(std::move(source)),
      target_(std::move(target)),
      images_(std::move(images)) {
  require(source_ && target_, ErrorCode::InvalidArgument, "null presentation");
  require(source_->field.same(target_->field), ErrorCode::FieldMismatch,
          "source and target fields differ");
  require(images_.size() == source_->n, ErrorCode::InvalidArgument,
          "one image per generator required");
  for (std::uint32_t u = 0; u < source_->n; ++u) {
    check_same_presentation(images_[u].presentation(), target_);
    require(images_[u].pow(source_->exponents[u]).is_zero(),
            ErrorCode::IllDefinedMap,
            "image breaks the nilpotency relation of x" + std::to_string(u + 1));
  }
  for (std::uint32_t i = 0; i < source_->n; ++i)
    for (std::uint32_t j = i + 1; j < source_->n; ++j)
      require(images_[i] * images_[j] ==
                  (images_[j] * images_[i]).scaled(source_->q(i, j)),
              ErrorCode::IllDefinedMap, "image breaks a commutation relation");
}

Element GeneratorImageMap::apply(const Element& e) const {
  check_same_presentation(e.presentation(), source_);
  Element out(target_);
  for (const auto& [m, c] : e.terms()) {
    Element prod = Element::one(target_);
    for (std::uint32_t i = 0; i < source_->n; ++i)
      for (std::uint32_t k = 0; k < m[i]; ++k) prod = prod * images_[i];
    out = out + prod.scaled(c);
  }
  return out;
}

SubalgebraInclusion subalgebra(const PresentationPtr& p,
                               std::vector<std::uint32_t> indices) {
  require(!indices.empty(), ErrorCode::InvalidArgument,
          "index subset must be nonempty");
  for (std::size_t s = 0; s < indices.size(); ++s) {
    require(indices[s] < p->n, ErrorCode::InvalidArgument,
            "subalgebra index out of range");
    require(s == 0 || indices[s - 1] < indices[s], ErrorCode::InvalidArgument,
            "subalgebra indices must be strictly increasing");
  }
  std::vector<std::uint32_t> exps;
  for (std::uint32_t idx : indices) exps.push_back(p->exponents[idx]);
  std::vector<Scalar> comms;
  for (std::size_t s = 0; s < indices.size(); ++s)
    for (std::size_t u = s + 1; u < indices.size(); ++u)
      comms.push_back(p->q(indices[s], indices[u]));
  SubalgebraInclusion inc;
  inc.ambient = p;
  inc.sub = Presentation::create(p->field, std::move(exps), std::move(comms));
  inc.indices = std::move(indices);
  return inc;
}

Element SubalgebraInclusion::include(const Element& e) const {
  check_same_presentation(e.presentation(), sub);
  Element out(ambient);
  for (const auto& [m, c] : e.terms()) {
    Monomial big(ambient->n, 0);
    for (std::size_t s = 0; s < indices.size(); ++s) big[indices[s]] = m[s];
    out.add_term(big, c);
  }
  return out;
}

Element SubalgebraInclusion::retract(const Element& e) const {
  check_same_presentation(e.presentation(), ambient);
  Element out(sub);
  for (const auto& [m, c] : e.terms()) {
    Monomial small(sub->n, 0);
    bool supported = true;
    std::size_t s = 0;
    for (std::uint32_t i = 0; i < ambient->n && supported; ++i) {
      if (s < indices.size() && indices[s] == i) {
        small[s++] = m[i];
      } else if (m[i] != 0) {
        supported = false;
      }
    }
    if (supported) out.add_term(small, c);
  }
  return out;
}

PresentationPtr adjoin_variable(const PresentationPtr& p,
                                std::uint32_t exponent,
                                const std::vector<Scalar>& comms_new) {
  require(comms_new.size() == p->n, ErrorCode::InvalidArgument,
          "need one commutator per existing variable");
  std::vector<std::uint32_t> exps = p->exponents;
  exps.push_back(exponent);
  const std::uint32_t big_n = p->n + 1;
  std::vector<Scalar> comms;
  for (std::uint32_t i = 0; i < big_n; ++i)
    for (std::uint32_t j = i + 1; j < big_n; ++j)
      comms.push_back(j + 1 == big_n ? comms_new[i] : p->q(i, j));
  return Presentation::create(p->field, std::move(exps), std::move(comms));
}

Scalar adjoin_twist(const PresentationPtr& big,
                    const std::vector<std::int64_t>& z, std::int64_t d) {
  require(big->n >= 2, ErrorCode::InvalidArgument,
          "twist needs an adjoined variable");
  require(z.size() + 1 == big->n, ErrorCode::InvalidArgument,
          "degree vector must cover the base variables");
  Scalar g = big->field.one();
  for (std::uint32_t i = 0; i + 1 < big->n; ++i) {
    if (z[i] == 0 || d == 0) continue;
    g = g * big->q_inv(i, big->n - 1).pow(d * z[i]);
  }
  return g;
}

bool adjoined_product_consistent(const PresentationPtr& big,
                                 const PresentationPtr& base) {
  if (big->n != base->n + 1 || !big->field.same(base->field)) return false;
  for (std::uint32_t i = 0; i < base->n; ++i) {
    if (big->exponents[i] != base->exponents[i]) return false;
    for (std::uint32_t j = i + 1; j < base->n; ++j)
      if (big->q(i, j) != base->q(i, j)) return false;
  }
  require(big->dim * big->dim <= (1ull << 20), ErrorCode::InvalidArgument,
          "presentation too large for an exhaustive product check");
  const std::uint32_t b = big->exponents[big->n - 1];
  for (std::uint64_t s = 0; s < big->dim; ++s) {
    const Monomial m1 = big->monomial_at(s);
    const std::uint32_t f1 = m1[big->n - 1];
    Monomial e1(m1.begin(), m1.end() - 1);
    for (std::uint64_t t = 0; t < big->dim; ++t) {
      const Monomial m2 = big->monomial_at(t);
      const std::uint32_t f2 = m2[big->n - 1];
      Monomial e2(m2.begin(), m2.end() - 1);

      const Element lhs = Element::monomial_term(big, m1, big->field.one()) *
                          Element::monomial_term(big, m2, big->field.one());

      Element rhs(big);
      if (f1 + f2 < b) {
        const Element prod =
            Element::monomial_term(base, e1, base->field.one()) *
            Element::monomial_term(base, e2, base->field.one());
        std::vector<std::int64_t> z(e2.begin(), e2.end());
        const Scalar g = adjoin_twist(big, z, f1);
        for (const auto& [h, c] : prod.terms()) {
          Monomial full = h;
          full.push_back(f1 + f2);
          rhs.add_term(full, c * g);
        }
      }
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

}  // namespace qci
