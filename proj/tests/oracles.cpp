#include "oracles.hpp"

namespace qci_test {

using qci::Element;
using qci::PresentationPtr;
using qci::Scalar;

Element oracle_word(const PresentationPtr& p,
                    const std::vector<std::uint32_t>& letters) {
  std::vector<std::uint32_t> w = letters;
  Scalar coeff = p->field.one();
  // bubble sort; each adjacent swap of (x_b, x_a) with a < b costs q_ab^{-1}
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] > w[i + 1]) {
        coeff = coeff * p->q_inv(w[i + 1], w[i]);
        std::swap(w[i], w[i + 1]);
        changed = true;
      }
    }
  }
  std::vector<std::uint32_t> counts(p->n, 0);
  for (std::uint32_t letter : w) {
    ++counts[letter];
    if (counts[letter] >= p->exponents[letter]) return Element::zero(p);
  }
  return Element::monomial_term(p, counts, coeff);
}

Element oracle_monomial_product(const PresentationPtr& p,
                                const std::vector<std::uint32_t>& e,
                                const std::vector<std::uint32_t>& f) {
  std::vector<std::uint32_t> letters;
  for (std::uint32_t v = 0; v < p->n; ++v)
    for (std::uint32_t k = 0; k < e[v]; ++k) letters.push_back(v);
  for (std::uint32_t v = 0; v < p->n; ++v)
    for (std::uint32_t k = 0; k < f[v]; ++k) letters.push_back(v);
  return oracle_word(p, letters);
}

}  // namespace qci_test
