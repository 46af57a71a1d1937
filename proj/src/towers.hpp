#pragma once

#include <cstdint>
#include <vector>

#include "json.hpp"

#include "algebra.hpp"
#include "fdalgebra.hpp"
#include "modules.hpp"

namespace qci {

// Module together with a multidegree on each basis vector.  Construction
// verifies that the action of the i-th generator raises the degree by the
// i-th unit vector, so a GradedModule is genuinely graded.
struct GradedModule {
  ModulePtr module;
  std::vector<std::vector<std::int64_t>> degrees;
};
GradedModule make_graded(ModulePtr m,
                         std::vector<std::vector<std::int64_t>> degrees);

// View a module over the ambient algebra as a module over a subalgebra by
// forgetting the complementary generator actions.
ModulePtr restrict_module(const SubalgebraInclusion& inc, const ModulePtr& m);

// One step of a subalgebra tower: the subalgebra on sub_indices, enlarged by
// added_index.  The check assembles the matrix whose columns are w * x_v^j
// (and x_v^j * w on the other side) over the monomial basis w of the smaller
// subalgebra and j < a_v, and asks for full rank: the larger subalgebra is
// then free as a one-sided module over the smaller one, with the powers of
// the added generator as a basis.
struct FreenessCheck {
  std::vector<std::uint32_t> sub_indices;
  std::uint32_t added_index = 0;
  std::size_t expected_rank = 0;
  std::size_t left_rank = 0;
  std::size_t right_rank = 0;
  bool left_free = false;
  bool right_free = false;
  bool pass = false;
  nlohmann::json to_json() const;
};
FreenessCheck verify_freeness(const PresentationPtr& ambient,
                              const std::vector<std::uint32_t>& sub_indices,
                              std::uint32_t added_index);

// Freeness of every step of the tower built by adjoining the generators in
// the given order, plus the lower bound implied by the largest homogeneous
// prefix subalgebra: a homogeneous subalgebra on t generators forces the
// representation dimension of the ambient algebra to be at least t + 1.
struct TowerReport {
  std::vector<std::uint32_t> order;
  std::vector<FreenessCheck> steps;
  std::uint32_t homogeneous_prefix = 0;
  std::uint32_t implied_lower_bound = 0;
  bool all_free = false;
  nlohmann::json to_json() const;
};
TowerReport tower_report(const PresentationPtr& p,
                         std::vector<std::uint32_t> order);

// A graded module with a chosen direct-sum decomposition, one summand of
// which is the regular module; used as the generator-cogenerator whose
// endomorphism algebra bounds the representation dimension from above.
struct GeneratorModule {
  GradedModule graded;
  DecomposedModule decomp;
  std::size_t regular_part = 0;       // summand isomorphic to the algebra
  std::size_t regular_generator = 0;  // basis index of its cyclic generator
};

// sum_{i=1}^{a} k[x]/(x^i) over the one-variable algebra, each summand
// generated in degree zero; the i = a summand is the algebra itself.
GeneratorModule auslander_generator_n1(const Field& f, std::uint32_t a);

// The twisted tensor product M1 (x) M2 over `big`, where M1 lives over the
// subalgebra on all but the last generator and M2 over the last generator
// alone.  The last generator acts through the bicharacter twist
// (1 (x) x)(m1 (x) m2) = g(|m1|, 1) m1 (x) x m2.
GeneratorModule tensor_generator(const PresentationPtr& big,
                                 const GeneratorModule& m1,
                                 const GeneratorModule& m2);

// Iterate the tensor construction along the generators of p.
GeneratorModule auslander_generator(const PresentationPtr& p);

// The distinguished summand really is a copy of the regular module: the
// split maps compose to the identity, and sending 1 to the distinguished
// generator extends to an equivariant bijection.
struct SummandWitness {
  bool split_identity = false;
  bool iso_to_regular = false;
  bool pass = false;
};
SummandWitness regular_summand_witness(const GeneratorModule& g);

// Endomorphism algebra of a decomposed module, with multiplication given by
// composition of maps.  The basis is assembled blockwise from hom spaces
// between the summands; with graded = true only the degree-preserving maps
// are kept.  part_identity holds the coordinates of each summand's identity
// map: a ready-made family of orthogonal idempotent seeds.
struct EndAlgebra {
  FdAlgebra algebra;
  bool graded = false;
  std::vector<Matrix> basis_maps;     // the endomorphisms, as dim x dim maps
  std::vector<Matrix> part_identity;  // coordinates, one per summand
  std::vector<std::vector<std::int64_t>> induced_degrees;  // graded case only
};
EndAlgebra endomorphism_algebra(const GeneratorModule& m, bool graded);

// End of the regular module is the algebra with reversed multiplication:
// every endomorphism is right multiplication by an element, and composing
// right multiplications reverses the order of the factors.
bool end_regular_is_opposite(const PresentationPtr& p);

// Twisted tensor product of two structure-constant algebras graded over the
// variables of `big`: (u1 (x) v1)(u2 (x) v2) = g(|u2|, |v1|) u1u2 (x) v1v2,
// with g the bicharacter of the last generator of `big`.
FdAlgebra twisted_tensor_algebra(const PresentationPtr& big,
                                 const FdAlgebra& a1,
                                 const std::vector<std::vector<std::int64_t>>& degrees1,
                                 const FdAlgebra& a2,
                                 const std::vector<std::int64_t>& degrees2);

// The algebra itself as structure constants on its monomial basis, with the
// exponent vectors as degrees.
struct AlgebraWithDegrees {
  FdAlgebra algebra;
  std::vector<std::vector<std::int64_t>> degrees;
};
AlgebraWithDegrees algebra_as_fdalgebra(const PresentationPtr& p);

// The algebra on n generators equals the twisted tensor product of the
// subalgebra on the first n-1 generators with the last one-variable algebra,
// compared entrywise on structure constants.
bool adjoined_matches_twisted_tensor(const PresentationPtr& big);

// The graded endomorphism algebra of a tensor generator factors as the
// twisted tensor product of the graded endomorphism algebras of the factors:
// the Kronecker images of the factor bases span it, and the structure
// constants transported through that spanning set match the twisted tensor
// product's constants.
struct EndTensorReport {
  std::size_t dim_gamma = 0;
  std::size_t dim_gamma1 = 0;
  std::size_t dim_gamma2 = 0;
  bool spans_match = false;
  bool constants_match = false;
  bool pass = false;
  nlohmann::json to_json() const;
};
EndTensorReport end_tensor_factorizes(const PresentationPtr& big,
                                      const GeneratorModule& m1,
                                      const GeneratorModule& m2,
                                      const GeneratorModule& tensor);

}  // namespace qci
