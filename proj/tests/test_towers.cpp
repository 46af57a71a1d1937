#include "doctest.h"

#include "error.hpp"
#include "towers.hpp"

using namespace qci;

namespace {

const Field Q = Field::cyclotomic(2);  // the rationals

PresentationPtr quantum_plane_f5() {
  return Presentation::homogeneous(Field::prime(5), 2, 2);
}

}  // namespace

TEST_CASE("graded modules verify their degrees") {
  const PresentationPtr p = quantum_plane_f5();
  const ModulePtr reg = regular_module(p);
  std::vector<std::vector<std::int64_t>> degrees;
  for (std::uint64_t i = 0; i < p->dimension(); ++i) {
    const Monomial m = p->monomial_at(i);
    degrees.push_back({m[0], m[1]});
  }
  const GradedModule g = make_graded(reg, degrees);
  CHECK(g.module->dim == 4);

  // wrong degrees are rejected
  std::vector<std::vector<std::int64_t>> bad = degrees;
  bad[1][0] = 7;
  CHECK_THROWS_AS(make_graded(reg, bad), QciError);
}

TEST_CASE("restricting the regular module to a subalgebra") {
  const PresentationPtr p = quantum_plane_f5();
  const SubalgebraInclusion inc = subalgebra(p, {0});
  const ModulePtr r = restrict_module(inc, regular_module(p));
  CHECK(r->dim == 4);
  CHECK(r->pres->n == 1);
  // x1 still acts with rank 2 on the restricted module
  CHECK(rank(r->actions[0]) == 2);
}

TEST_CASE("one-sided freeness along a tower step") {
  const PresentationPtr p2 = quantum_plane_f5();
  const FreenessCheck c = verify_freeness(p2, {0}, 1);
  CHECK(c.pass);
  CHECK(c.expected_rank == 4);
  CHECK(c.left_rank == 4);
  CHECK(c.right_rank == 4);

  const PresentationPtr p3 = Presentation::homogeneous(Field::prime(5), 3, 2);
  const FreenessCheck c3 = verify_freeness(p3, {0, 1}, 2);
  CHECK(c3.pass);
  CHECK(c3.expected_rank == 8);

  // the added generator must be new
  CHECK_THROWS_AS(verify_freeness(p3, {0, 1}, 1), QciError);
  const nlohmann::json j = c.to_json();
  CHECK(j.contains("left_free"));
}

TEST_CASE("towers of homogeneous algebras imply lower bounds") {
  const PresentationPtr p = Presentation::homogeneous(Field::prime(5), 3, 2);
  const TowerReport r = tower_report(p, {});
  CHECK(r.all_free);
  CHECK(r.steps.size() == 3);
  CHECK(r.homogeneous_prefix == 3);
  CHECK(r.implied_lower_bound == 4);
  CHECK(r.to_json().contains("steps"));
}

TEST_CASE("mixed towers are free but only the first prefix is homogeneous") {
  const Field f = Field::prime(7);
  const PresentationPtr p = Presentation::create(
      f, {2, 3, 2, 3}, std::vector<Scalar>(6, f.one()));
  const TowerReport r = tower_report(p, {});
  CHECK(r.all_free);
  CHECK(r.steps.size() == 4);
  for (const FreenessCheck& c : r.steps) CHECK(c.pass);
  CHECK(r.homogeneous_prefix == 1);
  CHECK(r.implied_lower_bound == 2);

  // a custom insertion order is respected
  const TowerReport rev = tower_report(p, {3, 2, 1, 0});
  CHECK(rev.all_free);
  CHECK(rev.order == std::vector<std::uint32_t>{3, 2, 1, 0});

  CHECK_THROWS_AS(tower_report(p, {0, 0, 1, 2}), QciError);
}

TEST_CASE("one-variable generator-cogenerator") {
  const GeneratorModule g = auslander_generator_n1(Q, 2);
  CHECK(g.graded.module->dim == 3);
  REQUIRE(g.decomp.parts.size() == 2);
  CHECK(g.decomp.parts[0]->dim == 1);
  CHECK(g.decomp.parts[1]->dim == 2);
  CHECK(g.regular_part == 1);

  const SummandWitness w = regular_summand_witness(g);
  CHECK(w.split_identity);
  CHECK(w.iso_to_regular);
  CHECK(w.pass);

  const GeneratorModule g3 = auslander_generator_n1(Q, 3);
  CHECK(g3.graded.module->dim == 6);
  CHECK(regular_summand_witness(g3).pass);
}

TEST_CASE("endomorphism algebras of the one-variable generator") {
  const GeneratorModule g = auslander_generator_n1(Q, 2);

  const EndAlgebra full = endomorphism_algebra(g, false);
  CHECK(full.algebra.dim == 5);
  CHECK(simples_one_dimensional(full.algebra));

  const EndAlgebra graded = endomorphism_algebra(g, true);
  CHECK(graded.algebra.dim == 3);

  // degree-zero maps into a shorter summand vanish, so the graded algebra
  // is triangular and hereditary; the full algebra resolves in two steps
  const GldimReport gg =
      global_dimension(graded.algebra, 8, graded.part_identity);
  CHECK(gg.gldim.exact);
  CHECK(gg.gldim.value == 1);

  const GldimReport gf =
      global_dimension(full.algebra, 8, full.part_identity);
  CHECK(gf.gldim.exact);
  CHECK(gf.gldim.value == 2);

  const GeneratorModule g3 = auslander_generator_n1(Q, 3);
  CHECK(endomorphism_algebra(g3, false).algebra.dim == 14);
  CHECK(endomorphism_algebra(g3, true).algebra.dim == 6);
}

TEST_CASE("endomorphisms of the zero module are refused") {
  const PresentationPtr p = quantum_plane_f5();
  const ModulePtr z = zero_module(p);
  GeneratorModule g;
  g.graded = make_graded(z, {});
  g.decomp = direct_sum({z});
  bool threw = false;
  try {
    endomorphism_algebra(g, false);
  } catch (const QciError& e) {
    threw = true;
    CHECK(e.code() == ErrorCode::InvalidModule);
  }
  CHECK(threw);
}

TEST_CASE("the regular module sees the opposite algebra") {
  CHECK(end_regular_is_opposite(quantum_plane_f5()));
  CHECK(end_regular_is_opposite(
      Presentation::homogeneous(Field::prime(7), 2, 3)));
  CHECK(end_regular_is_opposite(
      Presentation::create(Field::prime(5), {3}, {})));
}

TEST_CASE("tensor generator over two variables") {
  const PresentationPtr big = Presentation::homogeneous(Q, 2, 2);
  const GeneratorModule m1 = auslander_generator_n1(Q, 2);
  const GeneratorModule m2 = auslander_generator_n1(Q, 2);
  const GeneratorModule t = tensor_generator(big, m1, m2);
  CHECK(t.graded.module->dim == 9);
  CHECK(t.decomp.parts.size() == 4);
  CHECK(regular_summand_witness(t).pass);

  // the iterated construction agrees in shape
  const GeneratorModule direct = auslander_generator(big);
  CHECK(direct.graded.module->dim == 9);
  CHECK(regular_summand_witness(direct).pass);
}

TEST_CASE("algebras match their twisted tensor reconstruction") {
  CHECK(adjoined_matches_twisted_tensor(quantum_plane_f5()));
  CHECK(adjoined_matches_twisted_tensor(Presentation::homogeneous(Q, 2, 2)));
  CHECK(adjoined_matches_twisted_tensor(
      Presentation::homogeneous(Field::prime(7), 2, 3)));
  CHECK(adjoined_matches_twisted_tensor(
      Presentation::homogeneous(Field::prime(5), 3, 2)));
}

TEST_CASE("twisted tensor of structure-constant algebras") {
  const PresentationPtr big = Presentation::homogeneous(Q, 2, 2);
  const SubalgebraInclusion first = subalgebra(big, {0});
  const AlgebraWithDegrees a1 = algebra_as_fdalgebra(first.sub);
  const PresentationPtr last = Presentation::create(Q, {2}, {});
  const AlgebraWithDegrees a2 = algebra_as_fdalgebra(last);

  std::vector<std::int64_t> deg2;
  for (const auto& d : a2.degrees) deg2.push_back(d[0]);
  const FdAlgebra tt =
      twisted_tensor_algebra(big, a1.algebra, a1.degrees, a2.algebra, deg2);
  CHECK(tt.dim == 4);

  // entrywise equal to the two-variable algebra's own constants
  const AlgebraWithDegrees whole = algebra_as_fdalgebra(big);
  CHECK(tt.unit == whole.algebra.unit);
  for (std::size_t i = 0; i < 16; ++i) CHECK(tt.mult[i] == whole.algebra.mult[i]);
}

TEST_CASE("endomorphism algebra of a tensor generator factors") {
  const PresentationPtr big = Presentation::homogeneous(Q, 2, 2);
  const GeneratorModule m1 = auslander_generator_n1(Q, 2);
  const GeneratorModule m2 = auslander_generator_n1(Q, 2);
  const GeneratorModule t = tensor_generator(big, m1, m2);
  const EndTensorReport r = end_tensor_factorizes(big, m1, m2, t);
  CHECK(r.pass);
  CHECK(r.spans_match);
  CHECK(r.constants_match);
  CHECK(r.dim_gamma == 9);
  CHECK(r.dim_gamma1 == 3);
  CHECK(r.dim_gamma2 == 3);
  CHECK(r.to_json().contains("spans_match"));
}

TEST_CASE("graded endomorphism algebra of the tensor generator resolves") {
  const PresentationPtr big = Presentation::homogeneous(Q, 2, 2);
  const GeneratorModule t = auslander_generator(big);
  const EndAlgebra e = endomorphism_algebra(t, true);
  CHECK(e.algebra.dim == 9);
  CHECK(simples_one_dimensional(e.algebra));
  const GldimReport g = global_dimension(e.algebra, 12, e.part_identity);
  CHECK(g.gldim.exact);
  CHECK(g.gldim.value <= 4);
}
