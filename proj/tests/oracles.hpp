#pragma once

// Independent reference implementations used to cross-check the library.
// These deliberately avoid the library's own normal-form multiplication:
// products are computed by literal letter-by-letter rewriting of words.

#include <cstdint>
#include <vector>

#include "algebra.hpp"

namespace qci_test {

// Product of the basis monomials with exponent vectors e and f, computed by
// concatenating the two words, bubble-sorting the letters with the relation
// x_b x_a = q_ab^{-1} x_a x_b (a < b), and truncating when any letter count
// reaches its exponent bound.
qci::Element oracle_monomial_product(const qci::PresentationPtr& p,
                                     const std::vector<std::uint32_t>& e,
                                     const std::vector<std::uint32_t>& f);

// Normal form of an arbitrary word of generator indices, by the same
// letter-level rewriting.
qci::Element oracle_word(const qci::PresentationPtr& p,
                         const std::vector<std::uint32_t>& letters);

}  // namespace qci_test
