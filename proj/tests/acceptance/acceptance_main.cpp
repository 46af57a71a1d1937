// Acceptance checks.  Each check prints one PASS/FAIL line; the process
// exits nonzero when any line fails.  Everything is seeded, so two runs of
// this binary behave identically.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "certificates.hpp"
#include "error.hpp"
#include "fdalgebra.hpp"
#include "oracles.hpp"
#include "reports.hpp"
#include "stable.hpp"
#include "towers.hpp"

using namespace qci;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(const Clock::time_point& t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

Field prime_for(std::uint32_t a) {
  return Field::prime(a == 2 ? 5 : 7);
}

// ---- 1: defining identities on sampled linear forms -------------------

Outcome check_identities() {
  const Clock::time_point t0 = Clock::now();
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> suites{
      {1, 2}, {2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}};
  std::size_t tuples = 0;
  for (const auto& [n, a] : suites) {
    for (const Field& f : {prime_for(a), Field::cyclotomic(a)}) {
      const PresentationPtr p = Presentation::homogeneous(f, n, a);
      for (std::uint64_t t = 0; t < 100; ++t) {
        Rng rng = trial_rng(0x1001, t);
        const std::vector<Scalar> alpha = sample_tuple(p, rng);
        const Element sigma = linear_form(p, alpha);
        std::vector<Element> pw{Element::one(p)};
        for (std::uint32_t k = 1; k <= a; ++k)
          pw.push_back(pw.back() * sigma);
        if (!pw[a].is_zero())
          return {false, "a power of a linear form failed to vanish (n=" +
                             std::to_string(n) + ", a=" + std::to_string(a) +
                             ", field " + f.spec_string() + ")"};
        for (std::uint32_t i = 0; i < n; ++i) {
          Element total = Element::zero(p);
          const Element xi = Element::generator(p, i);
          for (std::uint32_t j = 0; j < a; ++j)
            total = total + pw[j] * xi * pw[a - 1 - j];
          if (!total.is_zero())
            return {false,
                    "a sandwich sum failed to vanish (n=" + std::to_string(n) +
                        ", a=" + std::to_string(a) + ", i=" +
                        std::to_string(i) + ", field " + f.spec_string() + ")"};
        }
        ++tuples;
      }
    }
  }
  const double el = seconds_since(t0);
  if (el >= 60.0)
    return {false, "identities hold but took " + std::to_string(el) + "s"};
  return {true, std::to_string(tuples) + " sampled tuples, all identities"};
}

// ---- 2: normal-form products against letter rewriting -----------------

Outcome check_products_against_oracle() {
  std::vector<PresentationPtr> catalog;
  auto hom = [&](std::uint64_t p, std::uint32_t n, std::uint32_t a) {
    catalog.push_back(Presentation::homogeneous(Field::prime(p), n, a));
  };
  hom(5, 1, 2), hom(7, 1, 3), hom(5, 1, 4), hom(11, 1, 5);
  hom(5, 2, 2), hom(7, 2, 3), hom(5, 2, 4), hom(11, 2, 5);
  hom(5, 3, 2), hom(7, 3, 3), hom(5, 3, 4);
  hom(5, 4, 2), hom(7, 4, 3);
  hom(5, 5, 2), hom(5, 6, 2), hom(5, 7, 2), hom(5, 8, 2);
  catalog.push_back(Presentation::homogeneous(Field::cyclotomic(2), 2, 2));
  catalog.push_back(Presentation::homogeneous(Field::cyclotomic(3), 2, 3));
  {
    const Field f = Field::prime(11);
    Rng rng(0x1002);
    auto rq = [&] { return sample_nonzero_scalar(f, rng); };
    catalog.push_back(Presentation::create(f, {2, 3}, {rq()}));
    catalog.push_back(Presentation::create(f, {3, 4}, {rq()}));
    catalog.push_back(Presentation::create(f, {2, 3, 2}, {rq(), rq(), rq()}));
    catalog.push_back(Presentation::create(
        f, {2, 2, 3, 3}, {rq(), rq(), rq(), rq(), rq(), rq()}));
  }

  std::size_t pairs = 0;
  for (const PresentationPtr& p : catalog) {
    if (p->dimension() > 256)
      return {false, "catalog entry exceeds the dimension cap"};
    for (std::uint64_t i = 0; i < p->dimension(); ++i) {
      const Monomial a = p->monomial_at(i);
      const Element ea = Element::monomial_term(p, a, p->field.one());
      for (std::uint64_t j = 0; j < p->dimension(); ++j) {
        const Monomial b = p->monomial_at(j);
        const Element eb = Element::monomial_term(p, b, p->field.one());
        if (ea * eb != qci_test::oracle_monomial_product(p, a, b))
          return {false, "normal form disagrees with rewriting on " +
                             ea.to_string() + " * " + eb.to_string()};
        ++pairs;
      }
    }
  }
  return {true, std::to_string(pairs) + " monomial pairs across " +
                    std::to_string(catalog.size()) + " presentations"};
}

// ---- 3: the certificate coefficient forces non-membership -------------

Outcome check_certificate_implication() {
  const PresentationPtr p = Presentation::homogeneous(Field::prime(5), 4, 2);
  std::size_t nonzero = 0, violations = 0;
  for (std::uint64_t t = 0; t < 500; ++t) {
    Rng rng = trial_rng(0x1003, t);
    std::vector<Scalar> alpha = sample_tuple(p, rng);
    alpha[0] = sample_nonzero_scalar(p->field, rng);
    const MembershipReport r =
        membership_two_sided(p, alpha, witness_word(p, alpha));
    if (r.lambda_applicable && !r.lambda_coeff.is_zero()) {
      ++nonzero;
      if (r.member) ++violations;
    }
  }
  if (violations != 0)
    return {false, std::to_string(violations) +
                       " members with nonzero certificate coefficient"};
  if (nonzero == 0) return {false, "certificate never fired"};

  std::size_t dist_inside = 0;
  for (std::uint64_t t = 0; t < 50; ++t) {
    Rng rng = trial_rng(0x1033, t);
    const std::vector<Scalar> alpha =
        distinguished_tuple(p, sample_nonzero_scalar(p->field, rng));
    if (membership_two_sided(p, alpha, witness_word(p, alpha)).member)
      ++dist_inside;
  }
  if (dist_inside != 0)
    return {false,
            std::to_string(dist_inside) + " distinguished tuples were inside"};
  return {true, "500 tuples, " + std::to_string(nonzero) +
                    " nonzero certificates, 0 violations; 50 distinguished "
                    "tuples all outside"};
}

// ---- 4: degree-restricted and full ideal membership agree -------------

Outcome check_membership_spans_agree() {
  std::vector<PresentationPtr> catalog{
      Presentation::homogeneous(Field::prime(5), 2, 2),
      Presentation::homogeneous(Field::prime(7), 2, 3),
      Presentation::homogeneous(Field::prime(5), 2, 4),
      Presentation::homogeneous(Field::prime(5), 4, 2)};
  std::size_t agreements = 0;
  for (const PresentationPtr& p : catalog) {
    if (p->dimension() > 64)
      return {false, "catalog entry exceeds the dimension cap"};
    for (std::uint64_t t = 0; t < 30; ++t) {
      Rng rng = trial_rng(0x1004, t);
      const std::vector<Scalar> alpha = sample_tuple(p, rng);
      const Element s = linear_form(p, alpha);
      const Element w = witness_word(p, alpha);
      if (in_two_sided(w, s, s).member != in_two_sided_full(w, s, s).member)
        return {false, "restricted and full spans disagree on a witness"};
      const Monomial m = p->monomial_at(rng.below(p->dimension()));
      const Element u = Element::monomial_term(p, m, p->field.one());
      if (in_two_sided(u, s, s).member != in_two_sided_full(u, s, s).member)
        return {false, "restricted and full spans disagree on a monomial"};
      agreements += 2;
    }
  }
  return {true, std::to_string(agreements) + " span comparisons"};
}

// ---- 5: two-periodicity diagrams ---------------------------------------

Outcome check_periodicity() {
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> suites{
      {2, 2}, {2, 3}, {3, 2}};
  std::size_t diagrams = 0;
  for (const auto& [n, a] : suites) {
    const PresentationPtr p = Presentation::homogeneous(prime_for(a), n, a);
    for (std::uint64_t t = 0; t < 20; ++t) {
      Rng rng = trial_rng(0x1005, t);
      std::vector<Scalar> alpha = sample_tuple(p, rng);
      while (linear_form(p, alpha).is_zero()) alpha = sample_tuple(p, rng);
      for (std::uint32_t v = 0; v < n; ++v) {
        if (!periodicity_diagrams_check(p, alpha, v).pass)
          return {false, "a diagram failed (n=" + std::to_string(n) +
                             ", a=" + std::to_string(a) + ")"};
        ++diagrams;
      }
    }
  }
  return {true, std::to_string(diagrams) + " commuting diagrams"};
}

// ---- 6: ghost chains certify the lower bound ---------------------------

Outcome check_ghost_chains() {
  double n4_seconds = 0.0;
  std::size_t witnesses = 0;
  for (std::uint32_t n : {2u, 4u}) {
    const Clock::time_point t0 = Clock::now();
    const PresentationPtr p = Presentation::homogeneous(Field::prime(5), n, 2);
    std::vector<ModulePtr> modules{simple_module(p)};
    for (std::uint64_t i = 0; i < 5; ++i) {
      Rng rng = trial_rng(0x1006 + n, i);
      std::vector<Scalar> beta = sample_tuple(p, rng);
      while (linear_form(p, beta).is_zero()) beta = sample_tuple(p, rng);
      modules.push_back(cyclic_quotient(p, linear_form(p, beta)).module);
    }
    for (std::size_t mi = 0; mi < modules.size(); ++mi) {
      bool found = false;
      for (std::uint64_t t = 0; t < 60 && !found; ++t) {
        Rng rng = trial_rng(0x1066 + n, t);
        const std::vector<Scalar> alpha = sample_tuple(p, rng);
        if (linear_form(p, alpha).is_zero()) continue;
        if (membership_two_sided(p, alpha, witness_word(p, alpha)).member)
          continue;
        const GhostReport g =
            ghost_chain_witness(p, alpha, modules[mi], -2, 2);
        if (g.pass && g.implied_lower_bound == n + 1) {
          found = true;
          ++witnesses;
        }
      }
      if (!found)
        return {false, "no ghost witness for module " + std::to_string(mi) +
                           " at n=" + std::to_string(n)};
    }
    if (n == 4) n4_seconds = seconds_since(t0);
  }
  if (n4_seconds >= 300.0)
    return {false, "witnesses found but the n=4 sweep took " +
                       std::to_string(n4_seconds) + "s"};
  char buf[128];
  std::snprintf(buf, sizeof(buf),
                "%zu witnesses over 12 test modules; n=4 sweep %.1fs",
                witnesses, n4_seconds);
  return {true, buf};
}

// ---- 7: stable vanishing of the witness map equals membership ----------

Outcome check_stable_vs_membership() {
  const PresentationPtr p = Presentation::homogeneous(Field::prime(5), 4, 2);
  std::size_t compared = 0;
  for (std::uint64_t t = 0; t < 500; ++t) {
    Rng rng = trial_rng(0x1003, t);  // the same tuples as the certificate run
    std::vector<Scalar> alpha = sample_tuple(p, rng);
    alpha[0] = sample_nonzero_scalar(p->field, rng);
    const bool member =
        membership_two_sided(p, alpha, witness_word(p, alpha)).member;
    const FactorChain chain = build_chain(p, alpha);
    StableZeroTester tester(chain.mod_sigma_pow.module(),
                            chain.mod_sigma.module());
    if (tester.stably_zero(chain.composition.matrix) != member)
      return {false, "stable vanishing disagrees with membership"};
    ++compared;
  }
  return {true, std::to_string(compared) + " tuples, full agreement"};
}

// ---- 8: subalgebra towers are two-sided free ----------------------------

Outcome check_towers() {
  const Field f5 = Field::prime(5);
  const PresentationPtr mixed = Presentation::create(
      f5, {2, 3, 2, 3}, std::vector<Scalar>(6, f5.one()));
  const TowerReport rm = tower_report(mixed, {});
  if (!rm.all_free) return {false, "a mixed tower step was not free"};
  for (const FreenessCheck& c : rm.steps) {
    if (!c.pass || c.left_rank != c.expected_rank ||
        c.right_rank != c.expected_rank)
      return {false, "a mixed tower step missed its expected rank"};
  }
  if (rm.implied_lower_bound != 2)
    return {false, "unexpected mixed-tower lower bound"};

  const PresentationPtr hom = Presentation::homogeneous(f5, 4, 2);
  const TowerReport rh = tower_report(hom, {});
  if (!rh.all_free) return {false, "a homogeneous tower step was not free"};
  if (rh.homogeneous_prefix != 4 || rh.implied_lower_bound != 5)
    return {false, "the homogeneous tower bound is wrong"};
  return {true, "mixed (2,3,2,3) and homogeneous n=4 towers free; "
                "implied bounds 2 and 5"};
}

// ---- 9: endomorphism algebras resolve within the bracket ---------------

Outcome check_endomorphism_gldim() {
  for (std::uint32_t a : {2u, 3u}) {
    const Field f = Field::cyclotomic(a);
    const GeneratorModule g = auslander_generator_n1(f, a);
    const EndAlgebra full = endomorphism_algebra(g, false);
    const GldimReport gld =
        global_dimension(full.algebra, 10, full.part_identity);
    if (!gld.gldim.exact || gld.gldim.value != 2)
      return {false, "the one-variable endomorphism algebra at a=" +
                         std::to_string(a) + " did not resolve to 2"};
    if (!simples_one_dimensional(full.algebra))
      return {false, "simples are not one-dimensional at a=" +
                         std::to_string(a)};
  }

  const PresentationPtr big =
      Presentation::homogeneous(Field::cyclotomic(2), 2, 2);
  if (!adjoined_matches_twisted_tensor(big))
    return {false, "the two-variable algebra is not its twisted tensor"};

  const GeneratorModule m1 = auslander_generator(subalgebra(big, {0}).sub);
  const GeneratorModule m2 = auslander_generator_n1(big->field, 2);
  const GeneratorModule tensor = tensor_generator(big, m1, m2);
  const EndTensorReport et = end_tensor_factorizes(big, m1, m2, tensor);
  if (!et.pass || et.dim_gamma != 9 || et.dim_gamma1 != 3 ||
      et.dim_gamma2 != 3)
    return {false, "the tensor endomorphism algebra did not factor"};

  const EndAlgebra graded = endomorphism_algebra(tensor, true);
  const GldimReport g2 =
      global_dimension(graded.algebra, 12, graded.part_identity);
  if (!g2.gldim.exact || g2.gldim.value > 4)
    return {false, "the tensor endomorphism algebra resolves too slowly"};
  if (!simples_one_dimensional(graded.algebra))
    return {false, "tensor endomorphism simples are not one-dimensional"};
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "one-variable global dimensions exactly 2 (a=2,3); tensor "
                "factorization 9=3*3; graded global dimension %u <= 4",
                g2.gldim.value);
  return {true, buf};
}

// ---- 10: identical configurations give identical bytes -----------------

Outcome check_determinism() {
  std::vector<nlohmann::json> configs;
  auto base = [](const char* cmd) {
    nlohmann::json c;
    c["command"] = cmd;
    c["field"] = "p:5";
    c["n"] = 2;
    c["a"] = 2;
    c["seed"] = 5;
    c["trials"] = 6;
    return c;
  };
  configs.push_back(base("verify-lemmas"));
  configs.push_back(base("sweep-membership"));
  {
    nlohmann::json c = base("sweep-membership");
    c["format"] = "csv";
    configs.push_back(c);
  }
  configs.push_back(base("ghost"));
  configs.push_back(base("periodicity"));
  {
    nlohmann::json c = base("tower");
    c["n"] = 3;
    configs.push_back(c);
  }
  {
    nlohmann::json c = base("upper");
    c["field"] = "cyclo:2";
    c["n"] = 1;
    configs.push_back(c);
  }
  for (const nlohmann::json& cfg : configs) {
    const RunResult a = run_command(cfg);
    const RunResult b = run_command(cfg);
    if (a.report != b.report || a.exit_code != b.exit_code)
      return {false, "two runs of " + cfg.at("command").get<std::string>() +
                         " differed"};
  }
  return {true, std::to_string(configs.size()) +
                    " configurations, byte-identical reruns"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* blurb;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"defining identities on sampled linear forms", check_identities},
      {"normal-form products equal letter rewriting",
       check_products_against_oracle},
      {"certificate coefficient forces non-membership",
       check_certificate_implication},
      {"degree-restricted membership equals full membership",
       check_membership_spans_agree},
      {"syzygy two-periodicity diagrams commute", check_periodicity},
      {"ghost chains certify the lower bound", check_ghost_chains},
      {"stable vanishing of the witness map equals membership",
       check_stable_vs_membership},
      {"subalgebra towers are two-sided free", check_towers},
      {"endomorphism algebras resolve within the bracket",
       check_endomorphism_gldim},
      {"reports are byte-identical across reruns", check_determinism},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Clock::time_point t0 = Clock::now();
    Outcome out;
    try {
      out = criteria[i].run();
    } catch (const QciError& e) {
      out = {false, std::string("error (") + error_code_name(e.code()) +
                        "): " + e.what()};
    } catch (const std::exception& e) {
      out = {false, std::string("unexpected error: ") + e.what()};
    }
    if (!out.pass) ++failures;
    std::printf("%s criterion-%zu [%6.2fs] %s -- %s\n",
                out.pass ? "PASS" : "FAIL", i + 1, seconds_since(t0),
                criteria[i].blurb, out.detail.c_str());
    std::fflush(stdout);
  }
  if (failures != 0)
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  else
    std::printf("all %zu criteria passed\n", criteria.size());
  return failures == 0 ? 0 : 1;
}
