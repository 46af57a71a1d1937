#include "stable.hpp"

#include <map>
#include <utility>

namespace qci {

namespace {

std::uint32_t homogeneous_exponent(const PresentationPtr& p) {
  std::uint32_t a = 0;
  require(p->is_homogeneous(&a, nullptr), ErrorCode::InvalidArgument,
          "this construction needs a homogeneous presentation");
  return a;
}

// columns [b*width, (b+1)*width) of m
Matrix block_cols(const Matrix& m, std::size_t b, std::size_t width) {
  Matrix out(m.field(), m.rows(), width);
  for (std::size_t j = 0; j < width; ++j) out.set_col(j, m.col(b * width + j));
  return out;
}

}  // namespace

ModuleHom::ModuleHom(ModulePtr src, ModulePtr dst, Matrix mat, bool check)
    : source(std::move(src)), target(std::move(dst)), matrix(std::move(mat)) {
  check_same_presentation(source->pres, target->pres);
  require(matrix.rows() == target->dim && matrix.cols() == source->dim,
          ErrorCode::DimensionMismatch,
          "homomorphism matrix has the wrong shape");
  if (!check) return;
  for (std::uint32_t g = 0; g < source->pres->n; ++g)
    require(target->actions[g] * matrix == matrix * source->actions[g],
            ErrorCode::IllDefinedMap,
            "matrix does not commute with the generator actions");
}

ModuleHom compose(const ModuleHom& g, const ModuleHom& f) {
  require(modules_equal(f.target, g.source), ErrorCode::DimensionMismatch,
          "composition needs matching middle modules");
  return ModuleHom(f.source, g.target, g.matrix * f.matrix, false);
}

CyclicQuotientData make_cyclic(const PresentationPtr& p, const Element& e) {
  check_same_presentation(e.presentation(), p);
  return CyclicQuotientData{e, cyclic_quotient(p, e)};
}

ModuleHom right_mult_hom(const CyclicQuotientData& src,
                         const CyclicQuotientData& dst, const Element& u) {
  const PresentationPtr& p = src.gen.presentation();
  check_same_presentation(p, dst.gen.presentation());
  check_same_presentation(p, u.presentation());
  const Element edge = src.gen * u;
  require((dst.q.proj * edge.to_vector()).is_zero(), ErrorCode::IllDefinedMap,
          "right multiplication does not descend to these quotients");
  Matrix mat = dst.q.proj * right_mult_matrix(u) * src.q.lift;
  return ModuleHom(src.module(), dst.module(), std::move(mat));
}

StableZeroTester::StableZeroTester(ModulePtr source, ModulePtr target)
    : source_(std::move(source)), target_(std::move(target)) {
  check_same_presentation(source_->pres, target_->pres);
  if (source_->dim == 0 || target_->dim == 0) return;
  const PresentationPtr& p = source_->pres;
  const CoverData cover = projective_cover(target_);
  const std::vector<Matrix> homs = hom_space(source_, regular_module(p));
  const std::size_t dl = static_cast<std::size_t>(p->dim);
  const std::size_t ncols =
      static_cast<std::size_t>(cover.rank) * homs.size();
  if (ncols == 0) return;
  Matrix cols(p->field,
              static_cast<std::size_t>(target_->dim) * source_->dim, ncols);
  std::size_t c = 0;
  for (std::uint32_t b = 0; b < cover.rank; ++b) {
    const Matrix block = block_cols(cover.map, b, dl);
    for (const Matrix& h : homs) cols.set_col(c++, (block * h).flatten());
  }
  tester_.emplace(cols);
  span_dim_ = tester_->span_rank();
}

bool StableZeroTester::stably_zero(const Matrix& f) const {
  require(f.rows() == target_->dim && f.cols() == source_->dim,
          ErrorCode::DimensionMismatch,
          "map has the wrong shape for this tester");
  if (!tester_) return f.is_zero();
  return tester_->contains(f.flatten());
}

bool StableZeroTester::stably_zero(const ModuleHom& f) const {
  return stably_zero(f.matrix);
}

ModuleHom lift_to_syzygies(const ModulePtr& x, const ModulePtr& y,
                           const Matrix& phi) {
  check_same_presentation(x->pres, y->pres);
  const PresentationPtr& p = x->pres;
  require(phi.rows() == y->dim && phi.cols() == x->dim,
          ErrorCode::DimensionMismatch, "map has the wrong shape");
  const CoverData cx = projective_cover(x);
  const CoverData cy = projective_cover(y);
  const SubmoduleData sx = syzygy_data(x);
  const SubmoduleData sy = syzygy_data(y);
  const std::size_t dl = static_cast<std::size_t>(p->dim);

  // Homomorphisms between free modules are block matrices of right
  // multiplications, so the lift is a combination of the maps that place a
  // single monomial multiplication in one block.
  std::vector<Matrix> rmul;
  for (std::size_t m = 0; m < dl; ++m)
    rmul.push_back(right_mult_matrix(
        Element::monomial_term(p, p->monomial_at(m), p->field.one())));

  const std::size_t nunk =
      static_cast<std::size_t>(cy.rank) * cx.rank * dl;
  const std::size_t width = static_cast<std::size_t>(cx.rank) * dl;
  Matrix system(p->field, static_cast<std::size_t>(y->dim) * width, nunk);
  std::size_t k = 0;
  for (std::uint32_t r = 0; r < cy.rank; ++r) {
    const Matrix cy_block = block_cols(cy.map, r, dl);
    for (std::uint32_t c = 0; c < cx.rank; ++c)
      for (std::size_t m = 0; m < dl; ++m) {
        Matrix img(p->field, y->dim, width);
        const Matrix prod = cy_block * rmul[m];
        for (std::size_t j = 0; j < dl; ++j)
          img.set_col(c * dl + j, prod.col(j));
        system.set_col(k++, img.flatten());
      }
  }
  const auto coef = solve(system, (phi * cx.map).flatten());
  require(coef.has_value(), ErrorCode::Internal,
          "a map out of a free module failed to lift through a cover");

  Matrix lifted(p->field, static_cast<std::size_t>(cy.rank) * dl, width);
  k = 0;
  for (std::uint32_t r = 0; r < cy.rank; ++r)
    for (std::uint32_t c = 0; c < cx.rank; ++c)
      for (std::size_t m = 0; m < dl; ++m) {
        const Scalar s = coef->at(k++, 0);
        if (s.is_zero()) continue;
        const Matrix scaled = rmul[m].scaled(s);
        for (std::size_t i = 0; i < dl; ++i)
          for (std::size_t j = 0; j < dl; ++j)
            lifted.at(r * dl + i, c * dl + j) =
                lifted.at(r * dl + i, c * dl + j) + scaled.at(i, j);
      }

  const auto restricted = solve(sy.inclusion, lifted * sx.inclusion);
  require(restricted.has_value(), ErrorCode::Internal,
          "a lifted map failed to restrict to the syzygies");
  return ModuleHom(sx.module, sy.module, *restricted);
}

FactorChain build_chain(const PresentationPtr& p,
                        const std::vector<Scalar>& alpha) {
  require(p->n % 2 == 0 && p->n >= 2, ErrorCode::OddCodimension,
          "the factorization needs an even variable count");
  const std::uint32_t a = homogeneous_exponent(p);
  const Element sigma = linear_form(p, alpha);
  require(!sigma.is_zero(), ErrorCode::InvalidArgument,
          "the linear form must be nonzero");

  CyclicQuotientData mod_sigma = make_cyclic(p, sigma);
  CyclicQuotientData mod_pow = make_cyclic(p, sigma.pow(a - 1));

  const std::uint32_t n = p->n;
  std::vector<Element> multipliers;
  std::vector<ModuleHom> maps;
  for (std::uint32_t i = 1; i <= n - 1; ++i) {
    Element u =
        (i % 2 == 1)
            ? (i == n - 1 ? Element::generator(p, 1)
                          : Element::generator(p, n - i - 1))
            : sandwich_sum(sigma, Element::generator(p, n + 1 - i), a);
    const CyclicQuotientData& src = (i % 2 == 1) ? mod_pow : mod_sigma;
    const CyclicQuotientData& dst = (i % 2 == 1) ? mod_sigma : mod_pow;
    maps.push_back(right_mult_hom(src, dst, u));
    multipliers.push_back(std::move(u));
  }

  Element word = Element::one(p);
  for (const Element& u : multipliers) word = word * u;
  require(word == witness_word(p, alpha), ErrorCode::MathCheckFailed,
          "the chain multipliers do not rebuild the sandwich word");

  ModuleHom composition = maps[0];
  for (std::size_t i = 1; i < maps.size(); ++i)
    composition = compose(maps[i], composition);
  const ModuleHom direct = right_mult_hom(mod_pow, mod_sigma, word);
  require(composition.matrix == direct.matrix, ErrorCode::MathCheckFailed,
          "the chain composite differs from multiplication by the word");

  return FactorChain{std::move(mod_sigma),   std::move(mod_pow),
                     std::move(multipliers), std::move(maps),
                     std::move(word),        std::move(composition)};
}

nlohmann::json GhostStep::to_json() const {
  nlohmann::json j;
  j["index"] = index;
  j["homs_checked"] = homs_checked;
  j["all_ghost"] = all_ghost;
  return j;
}

nlohmann::json GhostReport::to_json() const {
  nlohmann::json j;
  nlohmann::json al = nlohmann::json::array();
  for (const Scalar& s : alpha) al.push_back(s.to_string());
  j["alpha"] = al;
  j["window"] = {j0, j1};
  j["chain_length"] = chain_length;
  nlohmann::json st = nlohmann::json::array();
  for (const GhostStep& s : steps) st.push_back(s.to_json());
  j["steps"] = st;
  j["steps_ghost"] = steps_ghost;
  j["composition_stably_nonzero"] = composition_stably_nonzero;
  j["pass"] = pass;
  j["implied_lower_bound"] = implied_lower_bound;
  return j;
}

GhostReport ghost_chain_witness(const PresentationPtr& p,
                                const std::vector<Scalar>& alpha,
                                const ModulePtr& m, int j0, int j1) {
  require(j0 <= j1, ErrorCode::WindowEmpty, "empty syzygy window");
  check_same_presentation(m->pres, p);
  const FactorChain chain = build_chain(p, alpha);

  GhostReport rep;
  rep.alpha = alpha;
  rep.j0 = j0;
  rep.j1 = j1;
  rep.chain_length = chain.maps.size();

  std::vector<ModulePtr> shifts;
  for (int j = j0; j <= j1; ++j) shifts.push_back(omega(m, j));

  std::map<std::pair<const FdModule*, int>, std::vector<Matrix>> hom_cache;
  std::map<std::pair<const FdModule*, int>, StableZeroTester> tester_cache;

  rep.steps_ghost = true;
  for (std::size_t i = 0; i < chain.maps.size(); ++i) {
    const ModuleHom& f = chain.maps[i];
    GhostStep step;
    step.index = i + 1;
    for (int j = j0; j <= j1; ++j) {
      const ModulePtr& om = shifts[static_cast<std::size_t>(j - j0)];
      if (om->dim == 0) continue;
      const auto hkey = std::make_pair(f.target.get(), j);
      auto hit = hom_cache.find(hkey);
      if (hit == hom_cache.end())
        hit = hom_cache.emplace(hkey, hom_space(f.target, om)).first;
      const auto tkey = std::make_pair(f.source.get(), j);
      auto tit = tester_cache.find(tkey);
      if (tit == tester_cache.end())
        tit = tester_cache.try_emplace(tkey, f.source, om).first;
      for (const Matrix& g : hit->second) {
        ++step.homs_checked;
        if (!tit->second.stably_zero(g * f.matrix)) step.all_ghost = false;
      }
    }
    if (!step.all_ghost) rep.steps_ghost = false;
    rep.steps.push_back(std::move(step));
  }

  StableZeroTester comp_tester(chain.composition.source,
                               chain.composition.target);
  rep.composition_stably_nonzero = !comp_tester.stably_zero(chain.composition);
  rep.pass = rep.steps_ghost && rep.composition_stably_nonzero;
  rep.implied_lower_bound = rep.pass ? p->n + 1 : 0;
  return rep;
}

nlohmann::json PeriodicityReport::to_json() const {
  nlohmann::json j;
  nlohmann::json al = nlohmann::json::array();
  for (const Scalar& s : alpha) al.push_back(s.to_string());
  j["alpha"] = al;
  j["var_index"] = var_index;
  j["row1_exact"] = row1_exact;
  j["row2_exact"] = row2_exact;
  j["square_d1_left"] = square_d1_left;
  j["square_d1_right"] = square_d1_right;
  j["square_d2_left"] = square_d2_left;
  j["square_d2_right"] = square_d2_right;
  j["syzygy_iso_1"] = syzygy_iso_1;
  j["syzygy_iso_2"] = syzygy_iso_2;
  j["omega2_iso_1"] = omega2_iso_1;
  j["omega2_iso_2"] = omega2_iso_2;
  j["socle_dim_one"] = socle_dim_one;
  j["envelope_injective"] = envelope_injective;
  j["pass"] = pass;
  return j;
}

PeriodicityReport periodicity_diagrams_check(const PresentationPtr& p,
                                             const std::vector<Scalar>& alpha,
                                             std::uint32_t var_index) {
  const std::uint32_t a = homogeneous_exponent(p);
  require(var_index < p->n, ErrorCode::InvalidArgument,
          "variable index out of range");
  const Element sigma = linear_form(p, alpha);
  require(!sigma.is_zero(), ErrorCode::InvalidArgument,
          "the linear form must be nonzero");
  require(sigma.pow(a).is_zero(), ErrorCode::MathCheckFailed,
          "the linear form is not nilpotent of the expected order");

  PeriodicityReport rep;
  rep.alpha = alpha;
  rep.var_index = var_index;

  CyclicQuotientData q1 = make_cyclic(p, sigma);             // Lambda/(sigma)
  CyclicQuotientData q2 = make_cyclic(p, sigma.pow(a - 1));
  const std::size_t dl = static_cast<std::size_t>(p->dim);
  const std::size_t d1 = q1.module()->dim;
  const std::size_t d2 = q2.module()->dim;

  const Matrix iota1 = right_mult_matrix(sigma.pow(a - 1)) * q1.q.lift;
  const Matrix iota2 = right_mult_matrix(-sigma) * q2.q.lift;

  rep.row1_exact = rank(iota1) == d1 && (q2.q.proj * iota1).is_zero() &&
                   d1 + d2 == dl;
  rep.row2_exact = rank(iota2) == d2 && (q1.q.proj * iota2).is_zero() &&
                   d1 + d2 == dl;

  const Element xp = Element::generator(p, var_index);
  const Element sand = sandwich_sum(sigma, xp, a);
  const ModuleHom v_sand = right_mult_hom(q1, q2, sand);
  const ModuleHom v_gen = right_mult_hom(q2, q1, xp);
  const Matrix r_gen = right_mult_matrix(xp);
  const Matrix r_sand = right_mult_matrix(sand);

  rep.square_d1_left = r_gen * iota1 == iota2 * v_sand.matrix;
  rep.square_d1_right = v_gen.matrix * q2.q.proj == q1.q.proj * r_gen;
  rep.square_d2_left = r_sand * iota2 == iota1 * v_gen.matrix;
  rep.square_d2_right = v_sand.matrix * q1.q.proj == q2.q.proj * r_sand;

  const SubmoduleData s2 = syzygy_data(q2.module());
  const SubmoduleData s1 = syzygy_data(q1.module());
  const auto phi1 = solve(s2.inclusion, iota1);
  const auto phi2 = solve(s1.inclusion, iota2);
  rep.syzygy_iso_1 =
      phi1.has_value() && s2.module->dim == d1 && rank(*phi1) == d1;
  rep.syzygy_iso_2 =
      phi2.has_value() && s1.module->dim == d2 && rank(*phi2) == d2;

  if (rep.syzygy_iso_1 && rep.syzygy_iso_2) {
    const ModuleHom f1(q1.module(), s2.module, *phi1);
    const ModuleHom f2(q2.module(), s1.module, *phi2);
    const ModuleHom om_f2 = lift_to_syzygies(q2.module(), s1.module, f2.matrix);
    const ModuleHom om_f1 = lift_to_syzygies(q1.module(), s2.module, f1.matrix);
    const ModuleHom psi1 = compose(om_f2, f1);  // to Omega^2 of Lambda/(sigma)
    const ModuleHom psi2 = compose(om_f1, f2);
    rep.omega2_iso_1 =
        psi1.target->dim == d1 && rank(psi1.matrix) == d1;
    rep.omega2_iso_2 =
        psi2.target->dim == d2 && rank(psi2.matrix) == d2;
  }

  rep.socle_dim_one = socle_basis(regular_module(p)).cols() == 1;
  const Matrix env = right_mult_matrix(sigma) * q2.q.lift;
  rep.envelope_injective = rank(env) == d2;

  rep.pass = rep.row1_exact && rep.row2_exact && rep.square_d1_left &&
             rep.square_d1_right && rep.square_d2_left && rep.square_d2_right &&
             rep.syzygy_iso_1 && rep.syzygy_iso_2 && rep.omega2_iso_1 &&
             rep.omega2_iso_2 && rep.socle_dim_one && rep.envelope_injective;
  return rep;
}

IsoVerdict maybe_isomorphic(const ModulePtr& a, const ModulePtr& b,
                            std::uint64_t seed, std::size_t attempts) {
  check_same_presentation(a->pres, b->pres);
  if (a->dim != b->dim) return IsoVerdict::Inconclusive;
  if (a->dim == 0) return IsoVerdict::Isomorphic;
  const std::vector<Matrix> homs = hom_space(a, b);
  for (const Matrix& h : homs)
    if (rank(h) == a->dim) return IsoVerdict::Isomorphic;
  const Field f = a->pres->field;
  for (std::size_t t = 0; t < attempts; ++t) {
    Rng rng = trial_rng(seed, t);
    Matrix combo(f, b->dim, a->dim);
    for (const Matrix& h : homs) combo = combo + h.scaled(sample_scalar(f, rng));
    if (rank(combo) == a->dim) return IsoVerdict::Isomorphic;
  }
  return IsoVerdict::Inconclusive;
}

}  // namespace qci
