#include "fdalgebra.hpp"

#include <algorithm>
#include <string>

#include "error.hpp"

namespace qci {

namespace {

std::vector<std::size_t> pivot_columns(const Matrix& m) {
  return rref(m).pivot_cols;
}

Matrix column_space_basis(const Matrix& m) {
  if (m.cols() == 0) return m;
  const std::vector<std::size_t> piv = pivot_columns(m);
  Matrix out(m.field(), m.rows(), piv.size());
  for (std::size_t c = 0; c < piv.size(); ++c) out.set_col(c, m.col(piv[c]));
  return out;
}

// standard basis vectors completing the column space of `basis`
std::vector<std::size_t> complement_indices(const Matrix& basis,
                                            std::size_t dim) {
  const Field f = basis.field();
  Matrix ext = hstack(basis, Matrix::identity(f, dim));
  std::vector<std::size_t> out;
  for (std::size_t c : pivot_columns(ext))
    if (c >= basis.cols()) out.push_back(c - basis.cols());
  return out;
}

}  // namespace

SparseVec sparsify(const Matrix& column) {
  require(column.cols() == 1, ErrorCode::DimensionMismatch,
          "sparsify expects a single column");
  SparseVec out;
  for (std::size_t r = 0; r < column.rows(); ++r)
    if (!column.at(r, 0).is_zero())
      out.emplace_back(static_cast<std::uint32_t>(r), column.at(r, 0));
  return out;
}

Matrix densify(const Field& f, std::uint32_t dim, const SparseVec& v) {
  Matrix out(f, dim, 1);
  for (const auto& [i, s] : v) {
    require(i < dim, ErrorCode::InvalidArgument, "sparse index out of range");
    out.at(i, 0) = s;
  }
  return out;
}

FdAlgebra FdAlgebra::create(const Field& f, std::uint32_t dim,
                            std::vector<SparseVec> mult, Matrix unit,
                            std::uint64_t check_seed) {
  require(dim >= 1, ErrorCode::InvalidArgument,
          "an algebra needs at least the unit");
  require(mult.size() == static_cast<std::size_t>(dim) * dim,
          ErrorCode::DimensionMismatch, "product table has the wrong size");
  require(unit.rows() == dim && unit.cols() == 1,
          ErrorCode::DimensionMismatch, "unit vector has the wrong size");

  FdAlgebra a;
  a.field = f;
  a.dim = dim;
  a.mult.reserve(mult.size());
  for (SparseVec& row : mult)  // canonicalize: sorted, in range, no zeros
    a.mult.push_back(sparsify(densify(f, dim, row)));
  a.unit = std::move(unit);

  for (std::uint32_t j = 0; j < dim; ++j) {
    Matrix ej(f, dim, 1);
    ej.at(j, 0) = f.one();
    require(a.multiply(a.unit, ej) == ej && a.multiply(ej, a.unit) == ej,
            ErrorCode::NonUnitalInput,
            "the designated unit does not act as identity");
  }

  auto assoc = [&](std::uint32_t i, std::uint32_t j, std::uint32_t k) {
    Matrix ej(f, dim, 1), ek(f, dim, 1);
    ej.at(j, 0) = f.one();
    ek.at(k, 0) = f.one();
    const Matrix ij = densify(f, dim, a.mult[i * dim + j]);
    const Matrix jk = densify(f, dim, a.mult[j * dim + k]);
    Matrix ei(f, dim, 1);
    ei.at(i, 0) = f.one();
    return a.multiply(ij, ek) == a.multiply(ei, jk);
  };
  if (dim <= 64) {
    for (std::uint32_t i = 0; i < dim; ++i)
      for (std::uint32_t j = 0; j < dim; ++j)
        for (std::uint32_t k = 0; k < dim; ++k)
          require(assoc(i, j, k), ErrorCode::InvalidArgument,
                  "structure constants are not associative");
  } else {
    Rng rng(check_seed);
    for (int t = 0; t < 512; ++t) {
      const auto i = static_cast<std::uint32_t>(rng.below(dim));
      const auto j = static_cast<std::uint32_t>(rng.below(dim));
      const auto k = static_cast<std::uint32_t>(rng.below(dim));
      require(assoc(i, j, k), ErrorCode::InvalidArgument,
              "structure constants are not associative");
    }
  }
  return a;
}

Matrix FdAlgebra::multiply(const Matrix& u, const Matrix& v) const {
  require(u.rows() == dim && u.cols() == 1 && v.rows() == dim && v.cols() == 1,
          ErrorCode::DimensionMismatch, "product needs coordinate columns");
  Matrix out(field, dim, 1);
  for (std::uint32_t i = 0; i < dim; ++i) {
    if (u.at(i, 0).is_zero()) continue;
    for (std::uint32_t j = 0; j < dim; ++j) {
      if (v.at(j, 0).is_zero()) continue;
      const Scalar c = u.at(i, 0) * v.at(j, 0);
      for (const auto& [k, s] : mult[i * dim + j])
        out.at(k, 0) = out.at(k, 0) + c * s;
    }
  }
  return out;
}

Matrix FdAlgebra::left_mult(const Matrix& u) const {
  require(u.rows() == dim && u.cols() == 1, ErrorCode::DimensionMismatch,
          "left_mult needs a coordinate column");
  Matrix out(field, dim, dim);
  for (std::uint32_t i = 0; i < dim; ++i) {
    if (u.at(i, 0).is_zero()) continue;
    for (std::uint32_t j = 0; j < dim; ++j)
      for (const auto& [k, s] : mult[i * dim + j])
        out.at(k, j) = out.at(k, j) + u.at(i, 0) * s;
  }
  return out;
}

Matrix FdAlgebra::right_mult(const Matrix& u) const {
  require(u.rows() == dim && u.cols() == 1, ErrorCode::DimensionMismatch,
          "right_mult needs a coordinate column");
  Matrix out(field, dim, dim);
  for (std::uint32_t j = 0; j < dim; ++j) {
    if (u.at(j, 0).is_zero()) continue;
    for (std::uint32_t i = 0; i < dim; ++i)
      for (const auto& [k, s] : mult[i * dim + j])
        out.at(k, i) = out.at(k, i) + u.at(j, 0) * s;
  }
  return out;
}

bool FdAlgebra::is_commutative() const {
  for (std::uint32_t i = 0; i < dim; ++i)
    for (std::uint32_t j = i + 1; j < dim; ++j)
      if (mult[i * dim + j] != mult[j * dim + i]) return false;
  return true;
}

Matrix algebra_radical_basis(const FdAlgebra& a) {
  require(a.field.characteristic() == 0, ErrorCode::PositiveCharacteristic,
          "the trace-form radical needs characteristic zero");
  // trace of left multiplication by each basis element
  std::vector<Scalar> traces;
  for (std::uint32_t k = 0; k < a.dim; ++k) {
    Scalar t = a.field.zero();
    for (std::uint32_t j = 0; j < a.dim; ++j)
      for (const auto& [r, s] : a.mult[k * a.dim + j])
        if (r == j) t = t + s;
    traces.push_back(t);
  }
  Matrix form(a.field, a.dim, a.dim);
  for (std::uint32_t i = 0; i < a.dim; ++i)
    for (std::uint32_t j = 0; j < a.dim; ++j) {
      Scalar t = a.field.zero();
      for (const auto& [k, s] : a.mult[i * a.dim + j]) t = t + s * traces[k];
      form.at(i, j) = t;
    }
  return kernel_basis(form);
}

AlgebraQuotient semisimple_quotient(const FdAlgebra& a) {
  const Matrix rad = algebra_radical_basis(a);
  const std::vector<std::size_t> keep = complement_indices(rad, a.dim);
  const auto qdim = static_cast<std::uint32_t>(keep.size());
  require(qdim >= 1, ErrorCode::Internal, "the radical cannot be everything");

  Matrix lift(a.field, a.dim, qdim);
  for (std::uint32_t c = 0; c < qdim; ++c) lift.at(keep[c], c) = a.field.one();
  const Matrix glue = hstack(rad, lift);
  const auto inv = solve(glue, Matrix::identity(a.field, a.dim));
  require(inv.has_value(), ErrorCode::Internal,
          "radical complement failed to span");
  Matrix proj(a.field, qdim, a.dim);
  for (std::uint32_t r = 0; r < qdim; ++r)
    for (std::uint32_t c = 0; c < a.dim; ++c)
      proj.at(r, c) = inv->at(rad.cols() + r, c);

  std::vector<SparseVec> qmult;
  qmult.reserve(static_cast<std::size_t>(qdim) * qdim);
  for (std::uint32_t i = 0; i < qdim; ++i)
    for (std::uint32_t j = 0; j < qdim; ++j)
      qmult.push_back(
          sparsify(proj * a.multiply(lift.col(i), lift.col(j))));
  FdAlgebra q = FdAlgebra::create(a.field, qdim, std::move(qmult),
                                  proj * a.unit);
  return AlgebraQuotient{std::move(q), std::move(proj), std::move(lift)};
}

namespace {

// subalgebra eAe with its basis as columns inside A
struct CornerAlgebra {
  FdAlgebra algebra;
  Matrix basis;  // dimA x dimCorner
};

CornerAlgebra corner(const FdAlgebra& a, const Matrix& e) {
  const Matrix proj_mat = a.left_mult(e) * a.right_mult(e);  // x -> e x e
  Matrix basis = column_space_basis(proj_mat);
  const auto cdim = static_cast<std::uint32_t>(basis.cols());
  require(cdim >= 1, ErrorCode::Internal, "corner of a nonzero idempotent");
  std::vector<SparseVec> cmult;
  cmult.reserve(static_cast<std::size_t>(cdim) * cdim);
  for (std::uint32_t i = 0; i < cdim; ++i)
    for (std::uint32_t j = 0; j < cdim; ++j) {
      const auto coords = solve(basis, a.multiply(basis.col(i), basis.col(j)));
      require(coords.has_value(), ErrorCode::Internal,
              "corner product left the corner");
      cmult.push_back(sparsify(*coords));
    }
  const auto unit_coords = solve(basis, e);
  require(unit_coords.has_value(), ErrorCode::Internal,
          "idempotent not inside its own corner");
  FdAlgebra c =
      FdAlgebra::create(a.field, cdim, std::move(cmult), *unit_coords);
  return CornerAlgebra{std::move(c), std::move(basis)};
}

// monic minimal polynomial of v, low degree first
std::vector<Scalar> minimal_polynomial(const FdAlgebra& a, const Matrix& v) {
  Matrix krylov = a.unit;
  Matrix power = a.unit;
  for (std::uint32_t d = 1; d <= a.dim + 1; ++d) {
    power = a.multiply(power, v);
    const auto dep = solve(krylov, power);
    if (dep.has_value()) {
      std::vector<Scalar> poly;  // x^d - sum dep_i x^i, returned monic
      for (std::uint32_t i = 0; i < d; ++i) poly.push_back(-dep->at(i, 0));
      poly.push_back(a.field.one());
      return poly;
    }
    krylov = hstack(krylov, power);
  }
  fail(ErrorCode::Internal, "minimal polynomial search did not terminate");
}

Scalar eval_poly(const Field& f, const std::vector<Scalar>& poly,
                 const Scalar& x) {
  Scalar acc = f.zero();
  for (std::size_t i = poly.size(); i-- > 0;) acc = acc * x + poly[i];
  return acc;
}

Matrix eval_poly_at(const FdAlgebra& a, const std::vector<Scalar>& poly,
                    const Matrix& v) {
  Matrix acc(a.field, a.dim, 1);
  for (std::size_t i = poly.size(); i-- > 0;) {
    acc = a.multiply(acc, v);
    acc = acc + a.unit.scaled(poly[i]);
  }
  return acc;
}

std::vector<Scalar> root_candidates(const Field& f) {
  std::vector<Scalar> out;
  for (int v = -64; v <= 64; ++v) out.push_back(f.from_int(v));
  for (int den = 2; den <= 4; ++den)
    for (int num = -8; num <= 8; ++num) {
      if (num % den == 0) continue;
      out.push_back(f.from_int(num) * f.from_int(den).inverse());
    }
  return out;
}

// a proper idempotent of a semisimple algebra, or nothing if every candidate
// element has an irrational or inseparable spectrum
std::optional<Matrix> split_semisimple(const FdAlgebra& b,
                                       const std::vector<Scalar>& roots) {
  if (b.dim <= 1) return std::nullopt;
  std::vector<Matrix> candidates;
  for (std::uint32_t i = 0; i < b.dim; ++i) {
    Matrix ei(b.field, b.dim, 1);
    ei.at(i, 0) = b.field.one();
    candidates.push_back(std::move(ei));
  }
  Rng rng(0x5eed);
  for (int t = 0; t < 16; ++t) {
    Matrix combo(b.field, b.dim, 1);
    for (std::uint32_t i = 0; i < b.dim; ++i)
      combo.at(i, 0) = b.field.from_int(
          static_cast<std::int64_t>(rng.between(0, 8)));
    candidates.push_back(std::move(combo));
  }
  for (const Matrix& v : candidates) {
    const std::vector<Scalar> poly = minimal_polynomial(b, v);
    if (poly.size() <= 2) continue;  // v is scalar, no split from it
    for (const Scalar& lam : roots) {
      if (!eval_poly(b.field, poly, lam).is_zero()) continue;
      // synthetic division by (x - lam)
      std::vector<Scalar> g(poly.size() - 1, b.field.zero());
      Scalar carry = b.field.zero();
      for (std::size_t i = poly.size(); i-- > 1;) {
        carry = poly[i] + carry * lam;
        g[i - 1] = carry;
      }
      const Scalar glam = eval_poly(b.field, g, lam);
      if (glam.is_zero()) continue;  // repeated root, cannot separate
      std::vector<Scalar> h;
      const Scalar inv = glam.inverse();
      for (const Scalar& c : g) h.push_back(c * inv);
      const Matrix f = eval_poly_at(b, h, v);
      if (f.is_zero() || (b.unit - f).is_zero()) continue;
      if (b.multiply(f, f) == f) return f;
    }
  }
  return std::nullopt;
}

Matrix newton_lift_idempotent(const FdAlgebra& a, Matrix e) {
  for (int it = 0; it < 100; ++it) {
    if (a.multiply(e, e) == e) return e;
    const Matrix e2 = a.multiply(e, e);
    const Matrix e3 = a.multiply(e2, e);
    e = e2.scaled(a.field.from_int(3)) - e3.scaled(a.field.from_int(2));
  }
  fail(ErrorCode::Internal, "idempotent lifting did not converge");
}

}  // namespace

std::vector<Matrix> complete_primitive_idempotents(const FdAlgebra& a,
                                                   std::vector<Matrix> seeds) {
  require(a.field.characteristic() == 0, ErrorCode::PositiveCharacteristic,
          "idempotent analysis needs characteristic zero");
  for (const Matrix& e : seeds)
    require(a.multiply(e, e) == e, ErrorCode::InvalidArgument,
            "seed is not idempotent");
  for (std::size_t i = 0; i < seeds.size(); ++i)
    for (std::size_t j = 0; j < seeds.size(); ++j)
      if (i != j)
        require(a.multiply(seeds[i], seeds[j]).is_zero(),
                ErrorCode::InvalidArgument, "seeds are not orthogonal");
  std::vector<Matrix> queue = std::move(seeds);
  if (queue.empty()) {
    queue.push_back(a.unit);
  } else {
    Matrix sum(a.field, a.dim, 1);
    for (const Matrix& e : queue) sum = sum + e;
    const Matrix rest = a.unit - sum;
    if (!rest.is_zero()) {
      require(a.multiply(rest, rest) == rest, ErrorCode::InvalidArgument,
              "seed complement is not idempotent");
      queue.push_back(rest);
    }
  }

  const std::vector<Scalar> roots = root_candidates(a.field);
  std::vector<Matrix> primitive;
  while (!queue.empty()) {
    Matrix e = std::move(queue.back());
    queue.pop_back();
    if (e.is_zero()) continue;
    const CornerAlgebra c = corner(a, e);
    const AlgebraQuotient q = semisimple_quotient(c.algebra);
    if (q.algebra.dim == 1) {
      primitive.push_back(std::move(e));
      continue;
    }
    const auto split = split_semisimple(q.algebra, roots);
    if (!split.has_value())
      fail(ErrorCode::CannotDecide,
           "a semisimple block has no rational splitting in reach");
    const Matrix lifted =
        newton_lift_idempotent(c.algebra, q.lift * *split);
    const Matrix f = c.basis * lifted;  // back to coordinates of a
    queue.push_back(f);
    queue.push_back(e - f);
  }

  std::sort(primitive.begin(), primitive.end(),
            [&](const Matrix& x, const Matrix& y) {
              std::size_t fx = x.rows(), fy = y.rows();
              for (std::size_t r = 0; r < x.rows(); ++r)
                if (!x.at(r, 0).is_zero()) {
                  fx = r;
                  break;
                }
              for (std::size_t r = 0; r < y.rows(); ++r)
                if (!y.at(r, 0).is_zero()) {
                  fy = r;
                  break;
                }
              if (fx != fy) return fx < fy;
              return x.to_string() < y.to_string();
            });
  return primitive;
}

bool simples_one_dimensional(const FdAlgebra& a) {
  const AlgebraQuotient q = semisimple_quotient(a);
  if (!q.algebra.is_commutative()) return false;
  const std::vector<Matrix> idems =
      complete_primitive_idempotents(q.algebra);
  return idems.size() == q.algebra.dim;
}

nlohmann::json GldimReport::to_json() const {
  nlohmann::json j;
  nlohmann::json pds = nlohmann::json::array();
  for (const ProjDimension& p : simple_pds)
    pds.push_back({{"exact", p.exact}, {"value", p.value}});
  j["simple_pds"] = pds;
  j["gldim_exact"] = gldim.exact;
  j["gldim"] = gldim.value;
  j["max_steps"] = max_steps;
  return j;
}

namespace {

// u acting on a vector of A^t, componentwise left multiplication
Matrix block_apply(const FdAlgebra& a, const Matrix& lu, const Matrix& vec,
                   std::size_t t) {
  Matrix out(a.field, vec.rows(), vec.cols());
  for (std::size_t b = 0; b < t; ++b) {
    Matrix piece(a.field, a.dim, vec.cols());
    for (std::uint32_t r = 0; r < a.dim; ++r)
      for (std::size_t c = 0; c < vec.cols(); ++c)
        piece.at(r, c) = vec.at(b * a.dim + r, c);
    piece = lu * piece;
    for (std::uint32_t r = 0; r < a.dim; ++r)
      for (std::size_t c = 0; c < vec.cols(); ++c)
        out.at(b * a.dim + r, c) = piece.at(r, c);
  }
  return out;
}

}  // namespace

GldimReport global_dimension(const FdAlgebra& a, std::uint32_t max_steps,
                             const std::vector<Matrix>& seeds) {
  const std::vector<Matrix> idems = complete_primitive_idempotents(a, seeds);
  const Matrix rad = algebra_radical_basis(a);
  std::vector<Matrix> rad_lmult;
  for (std::size_t r = 0; r < rad.cols(); ++r)
    rad_lmult.push_back(a.left_mult(rad.col(r)));
  std::vector<Matrix> idem_lmult;
  std::vector<Matrix> proj_basis;  // basis of A e_j as columns in A
  for (const Matrix& e : idems) {
    idem_lmult.push_back(a.left_mult(e));
    proj_basis.push_back(column_space_basis(a.right_mult(e)));
  }

  auto radical_of = [&](const Matrix& m, std::size_t t) {
    if (m.cols() == 0 || rad.cols() == 0)
      return Matrix(a.field, m.rows(), 0);
    Matrix all(a.field, m.rows(), m.cols() * rad.cols());
    std::size_t c = 0;
    for (const Matrix& lr : rad_lmult) {
      const Matrix img = block_apply(a, lr, m, t);
      for (std::size_t i = 0; i < img.cols(); ++i) all.set_col(c++, img.col(i));
    }
    return column_space_basis(all);
  };

  GldimReport rep;
  rep.max_steps = max_steps;
  for (std::size_t j = 0; j < idems.size(); ++j) {
    // Omega of the simple: the radical of its projective cover A e_j
    Matrix m = radical_of(proj_basis[j], 1);
    std::size_t t = 1;
    ProjDimension pd;
    bool settled = m.cols() == 0;
    for (std::uint32_t step = 1; !settled && step <= max_steps; ++step) {
      // pick minimal idempotent-homogeneous generators of m above rad m
      const Matrix radm = radical_of(m, t);
      std::vector<Matrix> cand;
      std::vector<std::size_t> cand_type;
      for (std::size_t c = 0; c < m.cols(); ++c)
        for (std::size_t i = 0; i < idems.size(); ++i) {
          Matrix img = block_apply(a, idem_lmult[i], m.col(c), t);
          if (img.is_zero()) continue;
          cand.push_back(std::move(img));
          cand_type.push_back(i);
        }
      Matrix glue(a.field, m.rows(), radm.cols() + cand.size());
      for (std::size_t c = 0; c < radm.cols(); ++c)
        glue.set_col(c, radm.col(c));
      for (std::size_t c = 0; c < cand.size(); ++c)
        glue.set_col(radm.cols() + c, cand[c]);
      std::vector<std::size_t> gen_idx;
      for (std::size_t piv : pivot_columns(glue))
        if (piv >= radm.cols()) gen_idx.push_back(piv - radm.cols());

      std::size_t cover_cols = 0;
      for (std::size_t g : gen_idx)
        cover_cols += proj_basis[cand_type[g]].cols();
      Matrix cover(a.field, m.rows(), cover_cols);
      std::size_t cc = 0;
      std::vector<std::size_t> types;
      for (std::size_t g : gen_idx) {
        const Matrix& pb = proj_basis[cand_type[g]];
        types.push_back(cand_type[g]);
        for (std::size_t b = 0; b < pb.cols(); ++b)
          cover.set_col(cc++,
                        block_apply(a, a.left_mult(pb.col(b)), cand[g], t));
      }

      const Matrix ker = kernel_basis(cover);
      if (ker.cols() == 0) {
        pd.value = step;
        settled = true;
        break;
      }
      // rewrite kernel coordinates (over the projective bases) as vectors
      // in A^{#generators}
      const std::size_t tn = gen_idx.size();
      Matrix next(a.field, tn * a.dim, ker.cols());
      std::size_t row0 = 0;
      for (std::size_t b = 0; b < tn; ++b) {
        const Matrix& pb = proj_basis[types[b]];
        for (std::size_t kc = 0; kc < ker.cols(); ++kc) {
          Matrix coords(a.field, pb.cols(), 1);
          for (std::size_t i = 0; i < pb.cols(); ++i)
            coords.at(i, 0) = ker.at(row0 + i, kc);
          const Matrix vec = pb * coords;
          for (std::uint32_t r = 0; r < a.dim; ++r)
            next.at(b * a.dim + r, kc) = vec.at(r, 0);
        }
        row0 += pb.cols();
      }
      m = next;
      t = tn;
    }
    if (!settled) {
      pd.exact = false;
      pd.value = max_steps;
    }
    rep.simple_pds.push_back(pd);
    if (!pd.exact) {
      rep.gldim.exact = false;
      rep.gldim.value = max_steps;
    } else if (rep.gldim.exact) {
      rep.gldim.value = std::max(rep.gldim.value, pd.value);
    }
  }
  return rep;
}

}  // namespace qci
