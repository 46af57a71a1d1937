#include "certificates.hpp"

#include <algorithm>
#include <map>

namespace qci {

namespace {

std::uint32_t homogeneous_exponent(const PresentationPtr& p) {
  std::uint32_t a = 0;
  require(p->is_homogeneous(&a, nullptr), ErrorCode::InvalidArgument,
          "this construction needs a homogeneous presentation");
  return a;
}

// Columns sigma*m and m*rho over basis monomials of the complementary
// degrees, in the coordinates of the degree-d component.
struct GradedSpan {
  std::vector<Monomial> basis;           // of the degree-d component
  std::map<Monomial, std::size_t> row;   // monomial -> row index
  Matrix columns;

  GradedSpan(const PresentationPtr& p, int d, const Element& left,
             const Element& right) {
    basis = graded_component_basis(p, d);
    for (std::size_t i = 0; i < basis.size(); ++i) row.emplace(basis[i], i);
    std::vector<Element> cols;
    auto push_products = [&](const Element& factor, bool on_left) {
      if (factor.is_zero()) return;
      int df = 0;
      require(factor.is_homogeneous(&df), ErrorCode::InhomogeneousElement,
              "ideal generator must be homogeneous");
      for (const Monomial& m : graded_component_basis(p, d - df)) {
        Element mono = Element::monomial_term(p, m, p->field.one());
        cols.push_back(on_left ? factor * mono : mono * factor);
      }
    };
    push_products(left, true);
    push_products(right, false);
    columns = Matrix(p->field, basis.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (const auto& [m, s] : cols[c].terms()) columns.at(row.at(m), c) = s;
  }

  Matrix coords(const Element& e) const {
    Matrix v(e.presentation()->field, basis.size(), 1);
    for (const auto& [m, s] : e.terms()) v.at(row.at(m), 0) = s;
    return v;
  }
};

}  // namespace

Element sandwich_sum(const Element& s, const Element& u, std::uint32_t a) {
  require(a >= 2, ErrorCode::InvalidArgument, "exponent must be at least 2");
  const PresentationPtr& p = s.presentation();
  std::vector<Element> powers{Element::one(p)};
  for (std::uint32_t i = 1; i + 1 < a; ++i)
    powers.push_back(powers.back() * s);
  Element out(p);
  for (std::uint32_t i = 0; i + 2 <= a; ++i)
    out = out + powers[i] * u * powers[a - 2 - i];
  return out;
}

Element witness_word(const PresentationPtr& p,
                     const std::vector<Scalar>& alpha) {
  const std::uint32_t a = homogeneous_exponent(p);
  const Element sigma = linear_form(p, alpha);
  const std::uint32_t m = p->n;
  Element w = Element::one(p);
  const std::uint32_t floor = (m % 2 == 0) ? 3 : 2;
  for (std::uint32_t j = m >= 1 ? m - 1 : 0; j >= floor && j + 1 <= m;
       j -= 2) {
    w = w * Element::generator(p, j - 1);
    w = w * sandwich_sum(sigma, Element::generator(p, j), a);
    if (j < floor + 2) break;  // unsigned guard
  }
  if (m % 2 == 0) w = w * Element::generator(p, 1);

  if (!w.is_zero()) {
    int deg = 0;
    require(w.is_homogeneous(&deg), ErrorCode::Internal,
            "sandwich word must be homogeneous");
    const int pairs = (m % 2 == 0) ? static_cast<int>(m) / 2 - 1
                                   : (static_cast<int>(m) - 1) / 2;
    const int expected = pairs * static_cast<int>(a) + (m % 2 == 0 ? 1 : 0);
    require(deg == expected, ErrorCode::Internal,
            "sandwich word has unexpected degree");
  }
  return w;
}

Monomial certificate_monomial(const PresentationPtr& p) {
  require(p->n >= 2 && p->n % 2 == 0, ErrorCode::OddCodimension,
          "certificate monomial needs an even variable count");
  const std::uint32_t a = homogeneous_exponent(p);
  Monomial e(p->n, 0);
  e[1] = 1;
  for (std::uint32_t i = 2; i + 2 <= p->n; i += 2) e[i] = a - 1;
  for (std::uint32_t i = 3; i + 1 <= p->n; i += 2) e[i] = 1;
  return e;
}

Scalar lambda_coefficient(const Element& w, const std::vector<Scalar>& alpha) {
  const PresentationPtr& p = w.presentation();
  FormSplit split = decompose_by_form(w, alpha);
  return split.free_part.coefficient(certificate_monomial(p));
}

SpanCheck in_two_sided(const Element& w, const Element& left,
                       const Element& right) {
  SpanCheck out;
  if (w.is_zero()) {
    out.member = true;
    return out;
  }
  int d = 0;
  require(w.is_homogeneous(&d), ErrorCode::InhomogeneousElement,
          "membership test needs a homogeneous element");
  GradedSpan span(w.presentation(), d, left, right);
  out.rows = span.basis.size();
  out.cols = span.columns.cols();
  out.member = in_column_space(span.columns, span.coords(w));
  return out;
}

SpanCheck in_two_sided_full(const Element& w, const Element& left,
                            const Element& right) {
  SpanCheck out;
  const PresentationPtr& p = w.presentation();
  const std::size_t dl = static_cast<std::size_t>(p->dim);
  std::vector<Element> cols;
  for (int side = 0; side < 2; ++side) {
    const Element& factor = side == 0 ? left : right;
    if (factor.is_zero()) continue;
    for (std::size_t i = 0; i < dl; ++i) {
      Element mono =
          Element::monomial_term(p, p->monomial_at(i), p->field.one());
      cols.push_back(side == 0 ? factor * mono : mono * factor);
    }
  }
  Matrix mat(p->field, dl, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    mat.set_col(c, cols[c].to_vector());
  out.rows = dl;
  out.cols = cols.size();
  out.member = in_column_space(mat, w.to_vector());
  return out;
}

nlohmann::json MembershipReport::to_json() const {
  nlohmann::json j;
  nlohmann::json al = nlohmann::json::array();
  for (const Scalar& s : alpha) al.push_back(s.to_string());
  j["alpha"] = al;
  j["member"] = member;
  j["lambda_applicable"] = lambda_applicable;
  j["lambda_coefficient"] =
      lambda_applicable ? lambda_coeff.to_string() : "0";
  j["lambda_nonzero"] = lambda_applicable && !lambda_coeff.is_zero();
  j["degree"] = degree;
  j["matrix_rows"] = matrix_rows;
  j["matrix_cols"] = matrix_cols;
  return j;
}

MembershipReport membership_two_sided(const PresentationPtr& p,
                                      const std::vector<Scalar>& alpha,
                                      const Element& w) {
  MembershipReport rep;
  rep.alpha = alpha;
  const Element sigma = linear_form(p, alpha);
  SpanCheck check = in_two_sided(w, sigma, sigma);
  rep.member = check.member;
  rep.matrix_rows = check.rows;
  rep.matrix_cols = check.cols;
  rep.degree = -1;
  if (!w.is_zero()) w.is_homogeneous(&rep.degree);
  rep.lambda_coeff = p->field.zero();
  if (p->n % 2 == 0 && !alpha.empty() && !alpha[0].is_zero()) {
    rep.lambda_applicable = true;
    rep.lambda_coeff = lambda_coefficient(w, alpha);
  }
  return rep;
}

nlohmann::json ReducedOutsideReport::to_json() const {
  nlohmann::json j;
  j["outside"] = outside;
  j["word_zero"] = word_zero;
  j["matrix_rows"] = matrix_rows;
  j["matrix_cols"] = matrix_cols;
  return j;
}

ReducedOutsideReport reduced_membership(
    const PresentationPtr& p, const std::vector<Scalar>& alpha_tilde) {
  require(p->n % 2 == 0, ErrorCode::OddCodimension,
          "reduced test expects an even ambient variable count");
  const std::uint32_t a = homogeneous_exponent(p);
  std::vector<std::uint32_t> idx;
  for (std::uint32_t i = 1; i < p->n; ++i) idx.push_back(i);
  SubalgebraInclusion inc = subalgebra(p, idx);
  require(alpha_tilde.size() == inc.sub->n, ErrorCode::InvalidArgument,
          "tuple length must be one less than the variable count");
  const Element sigma_t = linear_form(inc.sub, alpha_tilde);
  const Element word = witness_word(inc.sub, alpha_tilde);
  SpanCheck check = in_two_sided(word, sigma_t, sigma_t.pow(a - 1));
  ReducedOutsideReport rep;
  rep.outside = !check.member;
  rep.word_zero = word.is_zero();
  rep.matrix_rows = check.rows;
  rep.matrix_cols = check.cols;
  return rep;
}

nlohmann::json SubstitutionReport::to_json() const {
  nlohmann::json j;
  j["map_well_defined"] = map_well_defined;
  j["sigma_matches"] = sigma_matches;
  j["word_matches"] = word_matches;
  j["containment_holds"] = containment_holds;
  j["implication_holds"] = implication_holds;
  j["pass"] = pass;
  return j;
}

SubstitutionReport substitution_consistency(
    const PresentationPtr& p, const std::vector<Scalar>& alpha_tilde) {
  SubstitutionReport rep;
  require(p->n % 2 == 0 && p->n >= 2, ErrorCode::OddCodimension,
          "substitution check expects an even variable count");
  const std::uint32_t a = homogeneous_exponent(p);
  std::vector<std::uint32_t> idx;
  for (std::uint32_t i = 1; i < p->n; ++i) idx.push_back(i);
  SubalgebraInclusion inc = subalgebra(p, idx);
  require(alpha_tilde.size() == inc.sub->n, ErrorCode::InvalidArgument,
          "tuple length must be one less than the variable count");

  std::vector<Element> images;
  images.push_back(Element::generator(p, 0) + Element::generator(p, 1));
  for (std::uint32_t j = 1; j < inc.sub->n; ++j)
    images.push_back(Element::generator(p, j + 1));
  std::optional<GeneratorImageMap> f;
  try {
    f.emplace(inc.sub, p, images);
    rep.map_well_defined = true;
  } catch (const QciError&) {
    rep.map_well_defined = false;
    return rep;
  }

  std::vector<Scalar> alpha;
  alpha.push_back(alpha_tilde[0]);
  for (const Scalar& s : alpha_tilde) alpha.push_back(s);
  const Element sigma_t = linear_form(inc.sub, alpha_tilde);
  const Element sigma = linear_form(p, alpha);
  rep.sigma_matches = f->apply(sigma_t) == sigma;

  const Element word_t = witness_word(inc.sub, alpha_tilde);
  const Element word = witness_word(p, alpha);
  rep.word_matches = f->apply(word_t) * Element::generator(p, 1) == word;

  // Lambda * sigma^{a-1} * x_2 inside sigma*Lambda + Lambda*sigma, tested in
  // the degree of the full word.
  const int d = (static_cast<int>(p->n) / 2 - 1) * static_cast<int>(a) + 1;
  GradedSpan span(p, d, sigma, sigma);
  const Element tail = sigma.pow(a - 1) * Element::generator(p, 1);
  bool contained = true;
  SpanTester tester(span.columns);
  for (const Monomial& m : graded_component_basis(p, d - static_cast<int>(a))) {
    Element prod = Element::monomial_term(p, m, p->field.one()) * tail;
    if (!tester.contains(span.coords(prod))) {
      contained = false;
      break;
    }
  }
  rep.containment_holds = contained;

  const bool tilde_member =
      in_two_sided(word_t, sigma_t, sigma_t.pow(a - 1)).member;
  const bool full_member = in_two_sided(word, sigma, sigma).member;
  rep.implication_holds = !tilde_member || full_member;
  rep.pass = rep.map_well_defined && rep.sigma_matches && rep.word_matches &&
             rep.containment_holds && rep.implication_holds;
  return rep;
}

nlohmann::json OpenSetTrial::to_json() const {
  nlohmann::json j;
  nlohmann::json al = nlohmann::json::array();
  for (const Scalar& s : alpha) al.push_back(s.to_string());
  j["alpha"] = al;
  j["rank_sigma"] = rank_sigma;
  j["rank_sigma_pow"] = rank_sigma_pow;
  j["in_u1"] = in_u1;
  j["in_u2"] = in_u2;
  j["in_v"] = in_v;
  j["implications_checked"] = implications_checked;
  j["implications_hold"] = implications_hold;
  return j;
}

nlohmann::json OpenSetSample::to_json() const {
  nlohmann::json j;
  j["generic_rank_sigma"] = generic_rank_sigma;
  j["generic_rank_sigma_pow"] = generic_rank_sigma_pow;
  j["count_u1"] = count_u1;
  j["count_u2"] = count_u2;
  j["count_v"] = count_v;
  j["all_implications_hold"] = all_implications_hold;
  nlohmann::json ts = nlohmann::json::array();
  for (const OpenSetTrial& t : trials) ts.push_back(t.to_json());
  j["trials"] = ts;
  return j;
}

std::vector<Scalar> sample_tuple(const PresentationPtr& p, Rng& rng) {
  std::vector<Scalar> alpha;
  for (std::uint32_t i = 0; i < p->n; ++i)
    alpha.push_back(sample_scalar(p->field, rng));
  return alpha;
}

OpenSetSample sample_open_sets(const PresentationPtr& p, const ModulePtr& m,
                               std::size_t trials, std::uint64_t seed,
                               std::size_t beta_trials) {
  check_same_presentation(m->pres, p);
  const std::uint32_t a = homogeneous_exponent(p);
  OpenSetSample out;

  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, t);
    OpenSetTrial trial;
    trial.alpha = sample_tuple(p, rng);
    const Element sigma = linear_form(p, trial.alpha);
    Matrix msig = m->act(sigma);
    Matrix mpow = Matrix::identity(p->field, m->dim);
    for (std::uint32_t k = 0; k + 1 < a; ++k) mpow = mpow * msig;
    trial.rank_sigma = rank(msig);
    trial.rank_sigma_pow = rank(mpow);
    if (p->n % 2 == 0) {
      const Element w = witness_word(p, trial.alpha);
      trial.in_v = !in_two_sided(w, sigma, sigma).member;
    }
    out.trials.push_back(std::move(trial));
  }
  for (const OpenSetTrial& t : out.trials) {
    out.generic_rank_sigma = std::max(out.generic_rank_sigma, t.rank_sigma);
    out.generic_rank_sigma_pow =
        std::max(out.generic_rank_sigma_pow, t.rank_sigma_pow);
  }

  for (std::size_t t = 0; t < out.trials.size(); ++t) {
    OpenSetTrial& trial = out.trials[t];
    trial.in_u1 = trial.rank_sigma == out.generic_rank_sigma;
    trial.in_u2 = trial.rank_sigma_pow == out.generic_rank_sigma_pow;
    if (trial.in_v) ++out.count_v;
    if (!trial.in_u1 && !trial.in_u2) continue;
    if (trial.in_u1) ++out.count_u1;
    if (trial.in_u2) ++out.count_u2;
    if (m->dim == 0) {
      trial.implications_checked = true;
      continue;
    }

    Rng beta_rng = trial_rng(seed, trials + t);
    const Element sigma = linear_form(p, trial.alpha);
    Matrix msig = m->act(sigma);
    Matrix mpow = Matrix::identity(p->field, m->dim);
    for (std::uint32_t k = 0; k + 1 < a; ++k) mpow = mpow * msig;
    std::vector<Matrix> sig_powers{Matrix::identity(p->field, m->dim)};
    for (std::uint32_t k = 1; k + 1 < a; ++k)
      sig_powers.push_back(sig_powers.back() * msig);

    trial.implications_checked = true;
    const Matrix ker1 = trial.in_u1 ? kernel_basis(msig) : Matrix();
    const Matrix ker2 = trial.in_u2 ? kernel_basis(mpow) : Matrix();
    SpanTester span1(msig), span2(mpow);
    for (std::size_t b = 0; b < beta_trials; ++b) {
      const Element sigma_b = linear_form(p, sample_tuple(p, beta_rng));
      Matrix mb = m->act(sigma_b);
      if (trial.in_u1 && ker1.cols() > 0 && !span1.contains(mb * ker1))
        trial.implications_hold = false;
      if (trial.in_u2 && ker2.cols() > 0) {
        Matrix sandwich(p->field, m->dim, m->dim);
        for (std::uint32_t i = 0; i + 2 <= a; ++i)
          sandwich = sandwich + sig_powers[i] * mb * sig_powers[a - 2 - i];
        if (!span2.contains(sandwich * ker2)) trial.implications_hold = false;
      }
    }
    if (!trial.implications_hold) out.all_implications_hold = false;
  }
  return out;
}

}  // namespace qci
