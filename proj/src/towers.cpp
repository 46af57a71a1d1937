#include "towers.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "error.hpp"

namespace qci {

GradedModule make_graded(ModulePtr m,
                         std::vector<std::vector<std::int64_t>> degrees) {
  require(m != nullptr, ErrorCode::InvalidModule, "graded module needs a module");
  require(degrees.size() == m->dim, ErrorCode::DimensionMismatch,
          "one degree per basis vector");
  const std::uint32_t n = m->pres->n;
  for (const auto& d : degrees)
    require(d.size() == n, ErrorCode::DimensionMismatch,
            "degree vectors must have one entry per generator");
  for (std::uint32_t i = 0; i < n; ++i) {
    const Matrix& act = m->actions[i];
    for (std::uint32_t r = 0; r < m->dim; ++r)
      for (std::uint32_t c = 0; c < m->dim; ++c) {
        if (act.at(r, c).is_zero()) continue;
        for (std::uint32_t t = 0; t < n; ++t) {
          const std::int64_t want = degrees[c][t] + (t == i ? 1 : 0);
          require(degrees[r][t] == want, ErrorCode::InvalidArgument,
                  "the given degrees do not grade the module");
        }
      }
  }
  return GradedModule{std::move(m), std::move(degrees)};
}

ModulePtr restrict_module(const SubalgebraInclusion& inc, const ModulePtr& m) {
  require(m != nullptr, ErrorCode::InvalidModule, "cannot restrict nothing");
  check_same_presentation(m->pres, inc.ambient);
  std::vector<Matrix> actions;
  for (std::uint32_t idx : inc.indices) actions.push_back(m->actions[idx]);
  return FdModule::create(inc.sub, std::move(actions), true);
}

nlohmann::json FreenessCheck::to_json() const {
  nlohmann::json j;
  j["added_index"] = added_index;
  j["expected_rank"] = expected_rank;
  j["left_free"] = left_free;
  j["left_rank"] = left_rank;
  j["pass"] = pass;
  j["right_free"] = right_free;
  j["right_rank"] = right_rank;
  j["sub_indices"] = sub_indices;
  return j;
}

FreenessCheck verify_freeness(const PresentationPtr& ambient,
                              const std::vector<std::uint32_t>& sub_indices,
                              std::uint32_t added_index) {
  require(added_index < ambient->n, ErrorCode::InvalidChainStep,
          "added generator index out of range");
  for (std::size_t s = 0; s < sub_indices.size(); ++s) {
    require(sub_indices[s] < ambient->n, ErrorCode::InvalidChainStep,
            "tower index out of range");
    require(s == 0 || sub_indices[s - 1] < sub_indices[s],
            ErrorCode::InvalidChainStep,
            "tower indices must be strictly increasing");
    require(sub_indices[s] != added_index, ErrorCode::InvalidChainStep,
            "the added generator already belongs to the subalgebra");
  }

  std::vector<std::uint32_t> big_indices = sub_indices;
  big_indices.push_back(added_index);
  std::sort(big_indices.begin(), big_indices.end());
  const SubalgebraInclusion inc_big = subalgebra(ambient, big_indices);
  const auto dim_big = static_cast<std::size_t>(inc_big.sub->dimension());
  const std::uint32_t a_v = ambient->exponents[added_index];
  const Element xg = Element::generator(ambient, added_index);

  std::vector<Element> small_elems;
  if (sub_indices.empty()) {
    small_elems.push_back(Element::one(ambient));
  } else {
    const SubalgebraInclusion inc_small = subalgebra(ambient, sub_indices);
    const auto dim_small =
        static_cast<std::uint64_t>(inc_small.sub->dimension());
    for (std::uint64_t w = 0; w < dim_small; ++w)
      small_elems.push_back(inc_small.include(Element::monomial_term(
          inc_small.sub, inc_small.sub->monomial_at(w),
          ambient->field.one())));
  }
  require(small_elems.size() * a_v == dim_big, ErrorCode::Internal,
          "subalgebra dimensions are multiplicative");

  Matrix left(ambient->field, dim_big, dim_big);
  Matrix right(ambient->field, dim_big, dim_big);
  std::size_t c = 0;
  for (const Element& w : small_elems)
    for (std::uint32_t jj = 0; jj < a_v; ++jj) {
      const Element xj = xg.pow(jj);
      left.set_col(c, inc_big.retract(w * xj).to_vector());
      right.set_col(c, inc_big.retract(xj * w).to_vector());
      ++c;
    }

  FreenessCheck out;
  out.sub_indices = sub_indices;
  out.added_index = added_index;
  out.expected_rank = dim_big;
  out.left_rank = rank(left);
  out.right_rank = rank(right);
  out.left_free = out.left_rank == dim_big;
  out.right_free = out.right_rank == dim_big;
  out.pass = out.left_free && out.right_free;
  return out;
}

nlohmann::json TowerReport::to_json() const {
  nlohmann::json j;
  j["all_free"] = all_free;
  j["homogeneous_prefix"] = homogeneous_prefix;
  j["implied_lower_bound"] = implied_lower_bound;
  j["order"] = order;
  nlohmann::json st = nlohmann::json::array();
  for (const FreenessCheck& s : steps) st.push_back(s.to_json());
  j["steps"] = st;
  return j;
}

TowerReport tower_report(const PresentationPtr& p,
                         std::vector<std::uint32_t> order) {
  if (order.empty()) {
    order.resize(p->n);
    std::iota(order.begin(), order.end(), 0u);
  }
  std::vector<bool> seen(p->n, false);
  for (std::uint32_t idx : order) {
    require(idx < p->n, ErrorCode::InvalidArgument,
            "tower order index out of range");
    require(!seen[idx], ErrorCode::InvalidArgument,
            "tower order repeats a generator");
    seen[idx] = true;
  }

  TowerReport rep;
  rep.order = order;
  rep.all_free = true;
  for (std::size_t t = 1; t <= order.size(); ++t) {
    std::vector<std::uint32_t> sub(order.begin(),
                                   order.begin() + (t - 1));
    std::sort(sub.begin(), sub.end());
    FreenessCheck step = verify_freeness(p, sub, order[t - 1]);
    rep.all_free = rep.all_free && step.pass;
    rep.steps.push_back(std::move(step));

    std::vector<std::uint32_t> prefix(order.begin(), order.begin() + t);
    std::sort(prefix.begin(), prefix.end());
    const PresentationPtr subp = subalgebra(p, prefix).sub;
    std::uint32_t a = 0;
    if (subp->is_homogeneous(&a) && a >= 2)
      rep.homogeneous_prefix = static_cast<std::uint32_t>(t);
  }
  rep.implied_lower_bound =
      rep.homogeneous_prefix > 0 ? rep.homogeneous_prefix + 1 : 0;
  return rep;
}

namespace {

GeneratorModule generator_over_one_variable(const PresentationPtr& p1,
                                            std::uint32_t a) {
  std::vector<ModulePtr> parts;
  std::vector<std::vector<std::int64_t>> degrees;
  for (std::uint32_t i = 1; i <= a; ++i) {
    Matrix nil(p1->field, i, i);
    for (std::uint32_t r = 0; r + 1 < i; ++r)
      nil.at(r + 1, r) = p1->field.one();
    parts.push_back(FdModule::create(p1, {nil}, true));
    for (std::uint32_t b = 0; b < i; ++b)
      degrees.push_back({static_cast<std::int64_t>(b)});
  }
  GeneratorModule g;
  g.decomp = direct_sum(parts);
  g.graded = make_graded(g.decomp.total, std::move(degrees));
  g.regular_part = a - 1;
  g.regular_generator = 0;
  return g;
}

}  // namespace

GeneratorModule auslander_generator_n1(const Field& f, std::uint32_t a) {
  require(a >= 2, ErrorCode::InvalidArgument,
          "the generator construction needs a nilpotency exponent of 2 or more");
  return generator_over_one_variable(Presentation::create(f, {a}, {}), a);
}

GeneratorModule tensor_generator(const PresentationPtr& big,
                                 const GeneratorModule& m1,
                                 const GeneratorModule& m2) {
  require(big->n >= 2, ErrorCode::InvalidArgument,
          "tensor construction needs at least two generators");
  const std::uint32_t n = big->n;
  std::vector<std::uint32_t> first(n - 1);
  std::iota(first.begin(), first.end(), 0u);
  check_same_presentation(m1.graded.module->pres, subalgebra(big, first).sub);
  check_same_presentation(
      m2.graded.module->pres,
      Presentation::create(big->field, {big->exponents[n - 1]}, {}));

  const std::size_t parts1 = m1.decomp.parts.size();
  const std::size_t parts2 = m2.decomp.parts.size();
  std::vector<std::size_t> off1(parts1, 0), off2(parts2, 0);
  for (std::size_t i = 1; i < parts1; ++i)
    off1[i] = off1[i - 1] + m1.decomp.parts[i - 1]->dim;
  for (std::size_t i = 1; i < parts2; ++i)
    off2[i] = off2[i - 1] + m2.decomp.parts[i - 1]->dim;

  std::vector<ModulePtr> parts;
  std::vector<std::vector<std::int64_t>> degrees;
  for (std::size_t i1 = 0; i1 < parts1; ++i1)
    for (std::size_t i2 = 0; i2 < parts2; ++i2) {
      const ModulePtr& q1 = m1.decomp.parts[i1];
      const ModulePtr& q2 = m2.decomp.parts[i2];
      const std::uint32_t d1 = q1->dim, d2 = q2->dim;
      const std::uint32_t d = d1 * d2;
      std::vector<Matrix> actions;
      for (std::uint32_t t = 0; t + 1 < n; ++t) {
        Matrix act(big->field, d, d);
        const Matrix& a1 = q1->actions[t];
        for (std::uint32_t r1 = 0; r1 < d1; ++r1)
          for (std::uint32_t c1 = 0; c1 < d1; ++c1) {
            if (a1.at(r1, c1).is_zero()) continue;
            for (std::uint32_t b2 = 0; b2 < d2; ++b2)
              act.at(r1 * d2 + b2, c1 * d2 + b2) = a1.at(r1, c1);
          }
        actions.push_back(std::move(act));
      }
      {
        Matrix act(big->field, d, d);
        const Matrix& a2 = q2->actions[0];
        for (std::uint32_t c1 = 0; c1 < d1; ++c1) {
          const Scalar tw =
              adjoin_twist(big, m1.graded.degrees[off1[i1] + c1], 1);
          for (std::uint32_t r2 = 0; r2 < d2; ++r2)
            for (std::uint32_t c2 = 0; c2 < d2; ++c2) {
              if (a2.at(r2, c2).is_zero()) continue;
              act.at(c1 * d2 + r2, c1 * d2 + c2) = tw * a2.at(r2, c2);
            }
        }
        actions.push_back(std::move(act));
      }
      parts.push_back(FdModule::create(big, std::move(actions), true));
      for (std::uint32_t b1 = 0; b1 < d1; ++b1)
        for (std::uint32_t b2 = 0; b2 < d2; ++b2) {
          std::vector<std::int64_t> deg = m1.graded.degrees[off1[i1] + b1];
          deg.push_back(m2.graded.degrees[off2[i2] + b2][0]);
          degrees.push_back(std::move(deg));
        }
    }

  GeneratorModule g;
  g.decomp = direct_sum(parts);
  g.graded = make_graded(g.decomp.total, std::move(degrees));
  g.regular_part = m1.regular_part * parts2 + m2.regular_part;
  g.regular_generator =
      m1.regular_generator * m2.decomp.parts[m2.regular_part]->dim +
      m2.regular_generator;
  return g;
}

GeneratorModule auslander_generator(const PresentationPtr& p) {
  GeneratorModule g =
      p->n == 1 ? generator_over_one_variable(p, p->exponents[0])
                : auslander_generator_n1(p->field, p->exponents[0]);
  for (std::uint32_t t = 2; t <= p->n; ++t) {
    std::vector<std::uint32_t> idx(t);
    std::iota(idx.begin(), idx.end(), 0u);
    const PresentationPtr sub_t = t == p->n ? p : subalgebra(p, idx).sub;
    g = tensor_generator(
        sub_t, g, auslander_generator_n1(p->field, p->exponents[t - 1]));
  }
  return g;
}

SummandWitness regular_summand_witness(const GeneratorModule& g) {
  const PresentationPtr& p = g.graded.module->pres;
  const ModulePtr& part = g.decomp.parts[g.regular_part];
  const Matrix& inj = g.decomp.inject[g.regular_part];
  const Matrix& prj = g.decomp.project[g.regular_part];

  SummandWitness w;
  w.split_identity =
      prj * inj == Matrix::identity(p->field, part->dim);

  const auto dim = static_cast<std::size_t>(p->dimension());
  if (part->dim == dim) {
    Matrix gen(p->field, part->dim, 1);
    gen.at(g.regular_generator, 0) = p->field.one();
    Matrix phi(p->field, part->dim, dim);
    for (std::size_t m = 0; m < dim; ++m) {
      const Element mono = Element::monomial_term(p, p->monomial_at(m),
                                                  p->field.one());
      phi.set_col(m, part->act(mono) * gen);
    }
    bool equivariant = true;
    const ModulePtr reg = regular_module(p);
    for (std::uint32_t i = 0; i < p->n && equivariant; ++i)
      equivariant = phi * reg->actions[i] == part->actions[i] * phi;
    w.iso_to_regular = equivariant && rank(phi) == dim;
  }
  w.pass = w.split_identity && w.iso_to_regular;
  return w;
}

EndAlgebra endomorphism_algebra(const GeneratorModule& m, bool graded) {
  const ModulePtr& total = m.graded.module;
  require(total->dim >= 1, ErrorCode::InvalidModule,
          "endomorphism algebra of the zero module");
  const Field f = total->pres->field;
  const std::size_t nparts = m.decomp.parts.size();
  std::vector<std::size_t> off(nparts, 0);
  for (std::size_t i = 1; i < nparts; ++i)
    off[i] = off[i - 1] + m.decomp.parts[i - 1]->dim;

  // hom spaces between summands, flattened column-wise; graded keeps only
  // the degree-preserving maps
  std::vector<std::vector<Matrix>> flat(nparts,
                                        std::vector<Matrix>(nparts));
  for (std::size_t i = 0; i < nparts; ++i)
    for (std::size_t j = 0; j < nparts; ++j) {
      const std::uint32_t di = m.decomp.parts[i]->dim;
      const std::uint32_t dj = m.decomp.parts[j]->dim;
      const std::vector<Matrix> homs =
          hom_space(m.decomp.parts[i], m.decomp.parts[j]);
      Matrix fl(f, static_cast<std::size_t>(di) * dj, homs.size());
      for (std::size_t h = 0; h < homs.size(); ++h)
        fl.set_col(h, homs[h].flatten());
      if (graded && fl.cols() > 0) {
        std::vector<std::size_t> mismatch;
        for (std::uint32_t r = 0; r < dj; ++r)
          for (std::uint32_t c = 0; c < di; ++c)
            if (m.graded.degrees[off[j] + r] != m.graded.degrees[off[i] + c])
              mismatch.push_back(static_cast<std::size_t>(r) * di + c);
        if (!mismatch.empty()) {
          Matrix sel(f, mismatch.size(), fl.rows());
          for (std::size_t r = 0; r < mismatch.size(); ++r)
            sel.at(r, mismatch[r]) = f.one();
          fl = fl * kernel_basis(sel * fl);
        }
      }
      flat[i][j] = std::move(fl);
    }

  std::vector<std::vector<std::size_t>> blk(nparts,
                                            std::vector<std::size_t>(nparts));
  std::size_t dim_end = 0;
  for (std::size_t i = 0; i < nparts; ++i)
    for (std::size_t j = 0; j < nparts; ++j) {
      blk[i][j] = dim_end;
      dim_end += flat[i][j].cols();
    }
  require(dim_end >= 1, ErrorCode::Internal,
          "an endomorphism algebra contains the identity");

  EndAlgebra out;
  out.graded = graded;
  std::vector<std::size_t> src, tgt;
  std::vector<Matrix> small;
  for (std::size_t i = 0; i < nparts; ++i)
    for (std::size_t j = 0; j < nparts; ++j) {
      const std::uint32_t di = m.decomp.parts[i]->dim;
      const std::uint32_t dj = m.decomp.parts[j]->dim;
      for (std::size_t h = 0; h < flat[i][j].cols(); ++h) {
        const Matrix hm = Matrix::unflatten(flat[i][j].col(h), dj, di);
        out.basis_maps.push_back(m.decomp.inject[j] * hm *
                                 m.decomp.project[i]);
        small.push_back(hm);
        src.push_back(i);
        tgt.push_back(j);
      }
    }

  std::vector<SparseVec> mult(dim_end * dim_end);
  for (std::size_t u = 0; u < dim_end; ++u)
    for (std::size_t v = 0; v < dim_end; ++v) {
      if (src[u] != tgt[v]) continue;
      const Matrix prod = small[u] * small[v];
      if (prod.is_zero()) continue;
      const Matrix& fl = flat[src[v]][tgt[u]];
      const auto coords = solve(fl, prod.flatten());
      require(coords.has_value(), ErrorCode::Internal,
              "composition left the hom space");
      SparseVec sv;
      for (std::size_t k = 0; k < coords->rows(); ++k)
        if (!coords->at(k, 0).is_zero())
          sv.emplace_back(
              static_cast<std::uint32_t>(blk[src[v]][tgt[u]] + k),
              coords->at(k, 0));
      mult[u * dim_end + v] = std::move(sv);
    }

  Matrix unit(f, dim_end, 1);
  for (std::size_t r = 0; r < nparts; ++r) {
    const std::uint32_t dr = m.decomp.parts[r]->dim;
    const auto coords =
        solve(flat[r][r], Matrix::identity(f, dr).flatten());
    require(coords.has_value(), ErrorCode::Internal,
            "identity map missing from the hom space");
    Matrix idc(f, dim_end, 1);
    for (std::size_t k = 0; k < coords->rows(); ++k)
      idc.at(blk[r][r] + k, 0) = coords->at(k, 0);
    out.part_identity.push_back(idc);
    unit = unit + idc;
  }

  out.algebra = FdAlgebra::create(f, static_cast<std::uint32_t>(dim_end),
                                  std::move(mult), std::move(unit));
  if (graded)
    out.induced_degrees.assign(
        dim_end, std::vector<std::int64_t>(total->pres->n, 0));
  return out;
}

bool end_regular_is_opposite(const PresentationPtr& p) {
  const ModulePtr reg = regular_module(p);
  const auto dim = static_cast<std::size_t>(p->dimension());
  const std::vector<Matrix> homs = hom_space(reg, reg);
  if (homs.size() != dim) return false;

  Matrix hom_flat(p->field, dim * dim, dim);
  for (std::size_t h = 0; h < dim; ++h)
    hom_flat.set_col(h, homs[h].flatten());
  const SpanTester span(hom_flat);

  std::vector<Element> monos;
  std::vector<Matrix> rmul;
  Matrix r_flat(p->field, dim * dim, dim);
  for (std::size_t u = 0; u < dim; ++u) {
    monos.push_back(
        Element::monomial_term(p, p->monomial_at(u), p->field.one()));
    rmul.push_back(right_mult_matrix(monos.back()));
    if (!span.contains(rmul.back().flatten())) return false;
    r_flat.set_col(u, rmul.back().flatten());
  }
  if (rank(r_flat) != dim) return false;

  for (std::size_t u = 0; u < dim; ++u)
    for (std::size_t v = 0; v < dim; ++v)
      if (!(rmul[u] * rmul[v] == right_mult_matrix(monos[v] * monos[u])))
        return false;
  return true;
}

FdAlgebra twisted_tensor_algebra(
    const PresentationPtr& big, const FdAlgebra& a1,
    const std::vector<std::vector<std::int64_t>>& degrees1,
    const FdAlgebra& a2, const std::vector<std::int64_t>& degrees2) {
  require(big->n >= 2, ErrorCode::InvalidArgument,
          "twisted tensor product needs an adjoined generator");
  require(a1.field.same(big->field) && a2.field.same(big->field),
          ErrorCode::FieldMismatch, "twisted tensor factors over one field");
  require(degrees1.size() == a1.dim && degrees2.size() == a2.dim,
          ErrorCode::DimensionMismatch, "one degree per basis element");
  for (const auto& d : degrees1)
    require(d.size() + 1 == big->n, ErrorCode::DimensionMismatch,
            "first-factor degrees cover the base generators");

  const std::uint32_t d1 = a1.dim, d2 = a2.dim;
  const std::uint32_t dim = d1 * d2;
  std::vector<SparseVec> mult(static_cast<std::size_t>(dim) * dim);
  for (std::uint32_t u = 0; u < d1; ++u)
    for (std::uint32_t v = 0; v < d2; ++v)
      for (std::uint32_t u2 = 0; u2 < d1; ++u2)
        for (std::uint32_t v2 = 0; v2 < d2; ++v2) {
          const Scalar tw = adjoin_twist(big, degrees1[u2], degrees2[v]);
          Matrix col(big->field, dim, 1);
          for (const auto& [k1, c1] : a1.mult[u * d1 + u2])
            for (const auto& [k2, c2] : a2.mult[v * d2 + v2])
              col.at(static_cast<std::size_t>(k1) * d2 + k2, 0) =
                  col.at(static_cast<std::size_t>(k1) * d2 + k2, 0) +
                  tw * c1 * c2;
          mult[static_cast<std::size_t>(u * d2 + v) * dim + (u2 * d2 + v2)] =
              sparsify(col);
        }
  Matrix unit(big->field, dim, 1);
  for (std::uint32_t k1 = 0; k1 < d1; ++k1)
    for (std::uint32_t k2 = 0; k2 < d2; ++k2)
      unit.at(static_cast<std::size_t>(k1) * d2 + k2, 0) =
          a1.unit.at(k1, 0) * a2.unit.at(k2, 0);
  return FdAlgebra::create(big->field, dim, std::move(mult), std::move(unit));
}

AlgebraWithDegrees algebra_as_fdalgebra(const PresentationPtr& p) {
  const std::uint64_t dim64 = p->dimension();
  require(dim64 <= 1024, ErrorCode::InvalidArgument,
          "structure-constant table would be too large");
  const auto dim = static_cast<std::uint32_t>(dim64);
  std::vector<Element> monos;
  AlgebraWithDegrees out;
  for (std::uint32_t u = 0; u < dim; ++u) {
    const Monomial mu = p->monomial_at(u);
    monos.push_back(Element::monomial_term(p, mu, p->field.one()));
    out.degrees.push_back(std::vector<std::int64_t>(mu.begin(), mu.end()));
  }
  std::vector<SparseVec> mult;
  mult.reserve(static_cast<std::size_t>(dim) * dim);
  for (std::uint32_t u = 0; u < dim; ++u)
    for (std::uint32_t v = 0; v < dim; ++v)
      mult.push_back(sparsify((monos[u] * monos[v]).to_vector()));
  out.algebra = FdAlgebra::create(p->field, dim, std::move(mult),
                                  Element::one(p).to_vector());
  return out;
}

bool adjoined_matches_twisted_tensor(const PresentationPtr& big) {
  require(big->n >= 2, ErrorCode::InvalidArgument,
          "comparison needs an adjoined generator");
  std::vector<std::uint32_t> first(big->n - 1);
  std::iota(first.begin(), first.end(), 0u);
  const AlgebraWithDegrees base =
      algebra_as_fdalgebra(subalgebra(big, first).sub);
  const AlgebraWithDegrees last = algebra_as_fdalgebra(
      Presentation::create(big->field, {big->exponents[big->n - 1]}, {}));
  std::vector<std::int64_t> deg2;
  for (const auto& d : last.degrees) deg2.push_back(d[0]);
  const FdAlgebra tt = twisted_tensor_algebra(big, base.algebra, base.degrees,
                                              last.algebra, deg2);
  const AlgebraWithDegrees whole = algebra_as_fdalgebra(big);
  if (whole.algebra.dim != tt.dim) return false;
  if (!(whole.algebra.unit == tt.unit)) return false;
  return whole.algebra.mult == tt.mult;
}

nlohmann::json EndTensorReport::to_json() const {
  nlohmann::json j;
  j["constants_match"] = constants_match;
  j["dim_gamma"] = dim_gamma;
  j["dim_gamma1"] = dim_gamma1;
  j["dim_gamma2"] = dim_gamma2;
  j["pass"] = pass;
  j["spans_match"] = spans_match;
  return j;
}

EndTensorReport end_tensor_factorizes(const PresentationPtr& big,
                                      const GeneratorModule& m1,
                                      const GeneratorModule& m2,
                                      const GeneratorModule& tensor) {
  const EndAlgebra gamma = endomorphism_algebra(tensor, true);
  const EndAlgebra g1 = endomorphism_algebra(m1, true);
  const EndAlgebra g2 = endomorphism_algebra(m2, true);
  const Field f = big->field;
  const std::uint32_t dim_m = tensor.graded.module->dim;

  EndTensorReport rep;
  rep.dim_gamma = gamma.algebra.dim;
  rep.dim_gamma1 = g1.algebra.dim;
  rep.dim_gamma2 = g2.algebra.dim;

  const std::size_t parts1 = m1.decomp.parts.size();
  const std::size_t parts2 = m2.decomp.parts.size();
  std::vector<std::size_t> off1(parts1, 0);
  for (std::size_t i = 1; i < parts1; ++i)
    off1[i] = off1[i - 1] + m1.decomp.parts[i - 1]->dim;

  // Kronecker image of a pair of factor endomorphisms inside End(tensor)
  auto kron_image = [&](const Matrix& phi, const Matrix& psi,
                        std::int64_t psi_degree) {
    Matrix out(f, dim_m, dim_m);
    for (std::size_t i = 0; i < parts1; ++i)
      for (std::size_t j = 0; j < parts1; ++j) {
        const Matrix phi_blk =
            m1.decomp.project[j] * phi * m1.decomp.inject[i];
        if (phi_blk.is_zero()) continue;
        for (std::size_t k2 = 0; k2 < parts2; ++k2)
          for (std::size_t l2 = 0; l2 < parts2; ++l2) {
            const Matrix psi_blk =
                m2.decomp.project[l2] * psi * m2.decomp.inject[k2];
            if (psi_blk.is_zero()) continue;
            const std::uint32_t s2 = m2.decomp.parts[k2]->dim;
            const std::uint32_t t2 = m2.decomp.parts[l2]->dim;
            Matrix blk(f, phi_blk.rows() * t2, phi_blk.cols() * s2);
            for (std::size_t c1 = 0; c1 < phi_blk.cols(); ++c1) {
              const Scalar tw = adjoin_twist(
                  big, m1.graded.degrees[off1[i] + c1], psi_degree);
              for (std::size_t r1 = 0; r1 < phi_blk.rows(); ++r1) {
                if (phi_blk.at(r1, c1).is_zero()) continue;
                for (std::uint32_t r2 = 0; r2 < t2; ++r2)
                  for (std::uint32_t c2 = 0; c2 < s2; ++c2)
                    blk.at(r1 * t2 + r2, c1 * s2 + c2) =
                        tw * phi_blk.at(r1, c1) * psi_blk.at(r2, c2);
              }
            }
            out = out + tensor.decomp.inject[j * parts2 + l2] * blk *
                            tensor.decomp.project[i * parts2 + k2];
          }
      }
    return out;
  };

  const std::size_t pair_dim = g1.algebra.dim * g2.algebra.dim;
  Matrix gamma_flat(f, static_cast<std::size_t>(dim_m) * dim_m,
                    gamma.algebra.dim);
  for (std::size_t h = 0; h < gamma.basis_maps.size(); ++h)
    gamma_flat.set_col(h, gamma.basis_maps[h].flatten());
  const SpanTester gamma_span(gamma_flat);

  Matrix t_flat(f, static_cast<std::size_t>(dim_m) * dim_m, pair_dim);
  bool contained = true;
  for (std::uint32_t u = 0; u < g1.algebra.dim; ++u)
    for (std::uint32_t v = 0; v < g2.algebra.dim; ++v) {
      const Matrix img = kron_image(g1.basis_maps[u], g2.basis_maps[v],
                                    g2.induced_degrees[v][0]);
      const Matrix fl = img.flatten();
      contained = contained && gamma_span.contains(fl);
      t_flat.set_col(static_cast<std::size_t>(u) * g2.algebra.dim + v, fl);
    }
  rep.spans_match = contained && rank(t_flat) == pair_dim &&
                    pair_dim == gamma.algebra.dim;

  if (rep.spans_match) {
    const auto coords = solve(gamma_flat, t_flat);
    require(coords.has_value(), ErrorCode::Internal,
            "span containment was just verified");
    std::vector<std::int64_t> deg2;
    for (const auto& d : g2.induced_degrees) deg2.push_back(d[0]);
    const FdAlgebra tt = twisted_tensor_algebra(
        big, g1.algebra, g1.induced_degrees, g2.algebra, deg2);
    bool ok = (*coords) * tt.unit == gamma.algebra.unit;
    for (std::uint32_t u = 0; u < pair_dim && ok; ++u)
      for (std::uint32_t v = 0; v < pair_dim && ok; ++v) {
        const Matrix lhs =
            gamma.algebra.multiply(coords->col(u), coords->col(v));
        const Matrix rhs =
            *coords *
            densify(f, static_cast<std::uint32_t>(pair_dim),
                    tt.mult[static_cast<std::size_t>(u) * pair_dim + v]);
        ok = lhs == rhs;
      }
    rep.constants_match = ok;
  }
  rep.pass = rep.spans_match && rep.constants_match;
  return rep;
}

}  // namespace qci
