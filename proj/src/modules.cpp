#include "modules.hpp"

#include <algorithm>

namespace qci {

namespace {

// independent columns spanning col(a), chosen as the pivot columns
Matrix column_space_basis(const Matrix& a) {
  Rref r = rref(a);
  return a.cols_slice(r.pivot_cols);
}

// indices of standard basis vectors completing col(basis) to the full space
std::vector<std::size_t> complement_indices(const Matrix& basis,
                                            std::size_t space_dim) {
  const Field& f = basis.field();
  Matrix aug = hstack(basis, Matrix::identity(f, space_dim));
  Rref r = rref(aug);
  std::vector<std::size_t> out;
  for (std::size_t c : r.pivot_cols)
    if (c >= basis.cols()) out.push_back(c - basis.cols());
  return out;
}

}  // namespace

ModulePtr FdModule::create(PresentationPtr p, std::vector<Matrix> actions,
                           bool validate) {
  auto m = std::make_shared<FdModule>();
  require(p != nullptr, ErrorCode::InvalidArgument, "null presentation");
  require(actions.size() == p->n, ErrorCode::InvalidModule,
          "one action matrix per generator required");
  std::size_t d = actions.empty() ? 0 : actions[0].rows();
  for (const Matrix& a : actions) {
    require(a.rows() == d && a.cols() == d, ErrorCode::InvalidModule,
            "action matrices must be square of equal size");
    require(a.field().same(p->field), ErrorCode::FieldMismatch,
            "action matrix over a different field");
  }
  m->pres = std::move(p);
  m->dim = static_cast<std::uint32_t>(d);
  m->actions = std::move(actions);
  if (validate && d > 0) {
    const Presentation& pr = *m->pres;
    for (std::uint32_t u = 0; u < pr.n; ++u) {
      Matrix pw = Matrix::identity(pr.field, d);
      for (std::uint32_t k = 0; k < pr.exponents[u]; ++k)
        pw = pw * m->actions[u];
      require(pw.is_zero(), ErrorCode::InvalidModule,
              "action of x" + std::to_string(u + 1) +
                  " violates its nilpotency relation");
    }
    for (std::uint32_t i = 0; i < pr.n; ++i)
      for (std::uint32_t j = i + 1; j < pr.n; ++j)
        require(m->actions[i] * m->actions[j] ==
                    (m->actions[j] * m->actions[i]).scaled(pr.q(i, j)),
                ErrorCode::InvalidModule,
                "actions violate a commutation relation");
  }
  return m;
}

Matrix FdModule::act(const Element& e) const {
  check_same_presentation(e.presentation(), pres);
  Matrix out(pres->field, dim, dim);
  for (const auto& [mon, c] : e.terms()) {
    Matrix t = Matrix::identity(pres->field, dim);
    for (std::uint32_t i = 0; i < pres->n; ++i)
      for (std::uint32_t k = 0; k < mon[i]; ++k) t = t * actions[i];
    out = out + t.scaled(c);
  }
  return out;
}

nlohmann::json FdModule::to_json() const {
  nlohmann::json j;
  j["presentation"] = pres->to_json();
  j["dim"] = dim;
  nlohmann::json acts = nlohmann::json::array();
  for (const Matrix& a : actions) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c)
        rows.push_back(a.at(r, c).to_string());
    acts.push_back(rows);
  }
  j["actions"] = acts;
  return j;
}

ModulePtr FdModule::from_json(const nlohmann::json& j) {
  try {
    PresentationPtr p = Presentation::from_json(j.at("presentation"));
    const std::size_t d = j.at("dim").get<std::uint32_t>();
    std::vector<Matrix> actions;
    for (const auto& a : j.at("actions")) {
      require(a.size() == d * d, ErrorCode::ParseError,
              "action matrix entry count disagrees with 'dim'");
      Matrix mat(p->field, d, d);
      std::size_t k = 0;
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
          mat.at(r, c) = p->field.parse(a.at(k++).get<std::string>());
      actions.push_back(std::move(mat));
    }
    return create(std::move(p), std::move(actions));
  } catch (const nlohmann::json::exception& ex) {
    fail(ErrorCode::ParseError, std::string("malformed module: ") + ex.what());
  }
}

bool modules_equal(const ModulePtr& a, const ModulePtr& b) {
  if (!a->pres->same(*b->pres) || a->dim != b->dim) return false;
  for (std::size_t i = 0; i < a->actions.size(); ++i)
    if (!(a->actions[i] == b->actions[i])) return false;
  return true;
}

ModulePtr regular_module(const PresentationPtr& p) {
  std::vector<Matrix> actions;
  for (std::uint32_t i = 0; i < p->n; ++i)
    actions.push_back(left_mult_matrix(Element::generator(p, i)));
  return FdModule::create(p, std::move(actions));
}

ModulePtr simple_module(const PresentationPtr& p) {
  std::vector<Matrix> actions(p->n, Matrix(p->field, 1, 1));
  return FdModule::create(p, std::move(actions));
}

ModulePtr zero_module(const PresentationPtr& p) {
  std::vector<Matrix> actions(p->n, Matrix(p->field, 0, 0));
  return FdModule::create(p, std::move(actions));
}

Matrix left_mult_matrix(const Element& e) {
  const PresentationPtr& p = e.presentation();
  const std::size_t d = static_cast<std::size_t>(p->dim);
  Matrix out(p->field, d, d);
  for (std::size_t c = 0; c < d; ++c) {
    Element col = e * Element::monomial_term(p, p->monomial_at(c),
                                             p->field.one());
    for (const auto& [m, s] : col.terms())
      out.at(static_cast<std::size_t>(p->monomial_index(m)), c) = s;
  }
  return out;
}

Matrix right_mult_matrix(const Element& e) {
  const PresentationPtr& p = e.presentation();
  const std::size_t d = static_cast<std::size_t>(p->dim);
  Matrix out(p->field, d, d);
  for (std::size_t c = 0; c < d; ++c) {
    Element col = Element::monomial_term(p, p->monomial_at(c),
                                         p->field.one()) *
                  e;
    for (const auto& [m, s] : col.terms())
      out.at(static_cast<std::size_t>(p->monomial_index(m)), c) = s;
  }
  return out;
}

QuotientModule quotient_by_subspace(const ModulePtr& m, const Matrix& span) {
  require(span.rows() == m->dim, ErrorCode::DimensionMismatch,
          "subspace lives in a different space");
  const Field& f = m->pres->field;
  Matrix basis = column_space_basis(span);
  for (const Matrix& a : m->actions)
    require(solve(basis, a * basis).has_value(), ErrorCode::InvalidModule,
            "subspace is not action-invariant");

  const std::vector<std::size_t> comp = complement_indices(basis, m->dim);
  const std::size_t dq = comp.size();
  Matrix lift(f, m->dim, dq);
  for (std::size_t c = 0; c < dq; ++c) lift.at(comp[c], c) = f.one();

  // proj = bottom rows of [basis | lift]^{-1}
  Matrix b = hstack(basis, lift);
  auto inv = solve(b, Matrix::identity(f, m->dim));
  require(inv.has_value(), ErrorCode::Internal,
          "complement construction failed");
  Matrix proj(f, dq, m->dim);
  for (std::size_t r = 0; r < dq; ++r)
    for (std::size_t c = 0; c < m->dim; ++c)
      proj.at(r, c) = inv->at(basis.cols() + r, c);

  std::vector<Matrix> actions;
  for (const Matrix& a : m->actions) actions.push_back(proj * a * lift);
  QuotientModule out;
  out.module = FdModule::create(m->pres, std::move(actions));
  out.proj = std::move(proj);
  out.lift = std::move(lift);
  return out;
}

QuotientModule cyclic_quotient(const PresentationPtr& p, const Element& u) {
  return quotient_by_subspace(regular_module(p), right_mult_matrix(u));
}

SubmoduleData submodule_from_invariant_subspace(const ModulePtr& m,
                                                const Matrix& basis) {
  require(basis.rows() == m->dim, ErrorCode::DimensionMismatch,
          "subspace lives in a different space");
  std::vector<Matrix> actions;
  for (const Matrix& a : m->actions) {
    auto x = solve(basis, a * basis);
    require(x.has_value(), ErrorCode::InvalidModule,
            "subspace is not action-invariant");
    actions.push_back(std::move(*x));
  }
  SubmoduleData out;
  out.module = FdModule::create(m->pres, std::move(actions));
  out.inclusion = basis;
  return out;
}

Matrix socle_basis(const ModulePtr& m) {
  if (m->pres->n == 1) return kernel_basis(m->actions[0]);
  Matrix stack = m->actions[0];
  for (std::uint32_t i = 1; i < m->pres->n; ++i)
    stack = vstack(stack, m->actions[i]);
  return kernel_basis(stack);
}

Matrix radical_basis(const ModulePtr& m) {
  Matrix wide = m->actions[0];
  for (std::uint32_t i = 1; i < m->pres->n; ++i)
    wide = hstack(wide, m->actions[i]);
  return column_space_basis(wide);
}

std::vector<Matrix> hom_space(const ModulePtr& m, const ModulePtr& n) {
  check_same_presentation(m->pres, n->pres);
  const Field& f = m->pres->field;
  const std::size_t dm = m->dim, dn = n->dim;
  if (dm == 0 || dn == 0) return {};
  const std::size_t unknowns = dm * dn;  // Phi[i][j], col = i*dm + j
  const std::uint32_t g = m->pres->n;
  Matrix sys(f, g * unknowns, unknowns);
  for (std::uint32_t k = 0; k < g; ++k) {
    const Matrix& an = n->actions[k];
    const Matrix& am = m->actions[k];
    // rows of an*Phi - Phi*am, indexed by (r, c)
    for (std::size_t r = 0; r < dn; ++r) {
      for (std::size_t c = 0; c < dm; ++c) {
        const std::size_t row = (k * dn + r) * dm + c;
        for (std::size_t i = 0; i < dn; ++i)
          if (!an.at(r, i).is_zero())
            sys.at(row, i * dm + c) = sys.at(row, i * dm + c) + an.at(r, i);
        for (std::size_t j = 0; j < dm; ++j)
          if (!am.at(j, c).is_zero())
            sys.at(row, r * dm + j) = sys.at(row, r * dm + j) - am.at(j, c);
      }
    }
  }
  Matrix ker = kernel_basis(sys);
  std::vector<Matrix> out;
  for (std::size_t c = 0; c < ker.cols(); ++c)
    out.push_back(Matrix::unflatten(ker.col(c), dn, dm));
  return out;
}

CoverData projective_cover(const ModulePtr& m) {
  require(m->dim > 0, ErrorCode::InvalidModule,
          "zero module has no projective cover here");
  const PresentationPtr& p = m->pres;
  const Field& f = p->field;
  const Matrix rad = radical_basis(m);
  const std::vector<std::size_t> gens = complement_indices(rad, m->dim);
  const std::size_t t = gens.size();
  const std::size_t dl = static_cast<std::size_t>(p->dim);

  Matrix cover(f, m->dim, t * dl);
  for (std::size_t j = 0; j < t; ++j) {
    for (std::size_t w = 0; w < dl; ++w) {
      const Element mono =
          Element::monomial_term(p, p->monomial_at(w), f.one());
      Matrix colv(f, m->dim, 1);
      colv.at(gens[j], 0) = f.one();
      colv = m->act(mono) * colv;
      cover.set_col(j * dl + w, colv);
    }
  }
  require(rref(cover).rank() == m->dim, ErrorCode::Internal,
          "projective cover is not surjective");

  CoverData out;
  out.rank = static_cast<std::uint32_t>(t);
  out.source = direct_sum(std::vector<ModulePtr>(t, regular_module(p))).total;
  out.map = std::move(cover);
  return out;
}

SubmoduleData syzygy_data(const ModulePtr& m) {
  CoverData cover = projective_cover(m);
  Matrix ker = kernel_basis(cover.map);
  ModulePtr p = cover.source;
  return submodule_from_invariant_subspace(p, ker);
}

ModulePtr syzygy(const ModulePtr& m) { return syzygy_data(m).module; }

EnvelopeData injective_envelope(const ModulePtr& m) {
  require(m->dim > 0, ErrorCode::InvalidModule,
          "zero module has no injective envelope here");
  const PresentationPtr& p = m->pres;
  const Field& f = p->field;
  const ModulePtr reg = regular_module(p);
  const std::vector<Matrix> homs = hom_space(m, reg);
  require(homs.size() == m->dim, ErrorCode::MathCheckFailed,
          "Hom(M, Lambda) does not have the dual dimension");

  const Matrix soc = socle_basis(m);
  const std::size_t s = soc.cols();
  const std::size_t top = static_cast<std::size_t>(p->dim) - 1;

  // Evaluate each hom on the socle through the Frobenius functional
  // (coefficient of the top monomial) and pick s homs dual to the socle.
  Matrix r(f, homs.size(), s);
  for (std::size_t k = 0; k < homs.size(); ++k) {
    Matrix img = homs[k] * soc;
    for (std::size_t i = 0; i < s; ++i) r.at(k, i) = img.at(top, i);
  }
  auto combo = solve(r.transpose(), Matrix::identity(f, s));
  require(combo.has_value(), ErrorCode::MathCheckFailed,
          "socle evaluation form is degenerate");

  const std::size_t dl = static_cast<std::size_t>(p->dim);
  Matrix emb(f, s * dl, m->dim);
  for (std::size_t i = 0; i < s; ++i) {
    Matrix phi(f, dl, m->dim);
    for (std::size_t k = 0; k < homs.size(); ++k)
      if (!combo->at(k, i).is_zero())
        phi = phi + homs[k].scaled(combo->at(k, i));
    for (std::size_t rr = 0; rr < dl; ++rr)
      for (std::size_t cc = 0; cc < m->dim; ++cc)
        emb.at(i * dl + rr, cc) = phi.at(rr, cc);
  }
  require(rref(emb).rank() == m->dim, ErrorCode::MathCheckFailed,
          "envelope candidate is not injective");

  EnvelopeData out;
  out.rank = static_cast<std::uint32_t>(s);
  out.target = direct_sum(std::vector<ModulePtr>(s, reg)).total;
  out.map = std::move(emb);
  return out;
}

QuotientModule cosyzygy_data(const ModulePtr& m) {
  EnvelopeData env = injective_envelope(m);
  return quotient_by_subspace(env.target, env.map);
}

ModulePtr cosyzygy(const ModulePtr& m) { return cosyzygy_data(m).module; }

ModulePtr omega(const ModulePtr& m, int j) {
  ModulePtr cur = m;
  for (; j > 0; --j) cur = cur->dim == 0 ? cur : syzygy(cur);
  for (; j < 0; ++j) cur = cur->dim == 0 ? cur : cosyzygy(cur);
  return cur;
}

DecomposedModule direct_sum(const std::vector<ModulePtr>& parts) {
  require(!parts.empty(), ErrorCode::InvalidArgument,
          "direct sum needs at least one summand");
  const PresentationPtr& p = parts[0]->pres;
  const Field& f = p->field;
  std::size_t total = 0;
  for (const ModulePtr& part : parts) {
    check_same_presentation(part->pres, p);
    total += part->dim;
  }
  std::vector<Matrix> actions(p->n, Matrix(f, total, total));
  std::size_t off = 0;
  DecomposedModule out;
  for (const ModulePtr& part : parts) {
    for (std::uint32_t g = 0; g < p->n; ++g)
      for (std::size_t r = 0; r < part->dim; ++r)
        for (std::size_t c = 0; c < part->dim; ++c)
          actions[g].at(off + r, off + c) = part->actions[g].at(r, c);
    Matrix in(f, total, part->dim), pr(f, part->dim, total);
    for (std::size_t i = 0; i < part->dim; ++i) {
      in.at(off + i, i) = f.one();
      pr.at(i, off + i) = f.one();
    }
    out.parts.push_back(part);
    out.inject.push_back(std::move(in));
    out.project.push_back(std::move(pr));
    off += part->dim;
  }
  out.total = FdModule::create(p, std::move(actions), /*validate=*/false);
  return out;
}

}  // namespace qci
