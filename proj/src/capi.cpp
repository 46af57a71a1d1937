#include "qci.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "certificates.hpp"
#include "error.hpp"
#include "reports.hpp"
#include "scalar.hpp"

struct qci_presentation {
  qci::PresentationPtr p;
};

struct qci_element {
  qci::Element e;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
qci_status guarded(Fn&& fn) {
  g_last_error.clear();
  try {
    fn();
    return QCI_OK;
  } catch (const qci::QciError& e) {
    g_last_error = e.what();
    return static_cast<qci_status>(static_cast<int>(e.code()));
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return QCI_ERR_INTERNAL;
  }
}

const qci::PresentationPtr& need_pres(const qci_presentation* p) {
  qci::require(p != nullptr && p->p != nullptr,
               qci::ErrorCode::InvalidArgument, "null presentation handle");
  return p->p;
}

const qci::Element& need_elem(const qci_element* e) {
  qci::require(e != nullptr, qci::ErrorCode::InvalidArgument,
               "null element handle");
  return e->e;
}

std::vector<qci::Scalar> parse_tuple(const qci::PresentationPtr& p,
                                     const char* const* alpha) {
  qci::require(alpha != nullptr, qci::ErrorCode::InvalidArgument,
               "null coefficient array");
  std::vector<qci::Scalar> out;
  for (std::uint32_t i = 0; i < p->n; ++i) {
    qci::require(alpha[i] != nullptr, qci::ErrorCode::InvalidArgument,
                 "null coefficient string");
    out.push_back(p->field.parse(alpha[i]));
  }
  return out;
}

void write_string(char** out, const std::string& s) {
  qci::require(out != nullptr, qci::ErrorCode::InvalidArgument,
               "null output parameter");
  char* dup = dup_string(s);
  qci::require(dup != nullptr, qci::ErrorCode::Internal,
               "allocation failure");
  *out = dup;
}

void write_element(qci_element** out, qci::Element e) {
  qci::require(out != nullptr, qci::ErrorCode::InvalidArgument,
               "null output parameter");
  *out = new qci_element{std::move(e)};
}

}  // namespace

extern "C" {

const char* qci_version(void) { return "1.0.0"; }

const char* qci_status_name(qci_status status) {
  if (status == QCI_OK) return "Ok";
  return qci::error_code_name(static_cast<qci::ErrorCode>(status));
}

const char* qci_last_error(void) { return g_last_error.c_str(); }

void qci_string_free(char* s) { std::free(s); }

qci_status qci_presentation_create(const char* field_spec, uint32_t n,
                                   const uint32_t* exponents,
                                   const char* const* commutators,
                                   qci_presentation** out) {
  return guarded([&] {
    qci::require(field_spec != nullptr && exponents != nullptr &&
                     out != nullptr,
                 qci::ErrorCode::InvalidArgument, "null argument");
    const qci::Field f = qci::Field::parse_spec(field_spec);
    std::vector<std::uint32_t> exps(exponents, exponents + n);
    const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::vector<qci::Scalar> comms;
    qci::require(pairs == 0 || commutators != nullptr,
                 qci::ErrorCode::InvalidArgument,
                 "null commutator array");
    for (std::size_t i = 0; i < pairs; ++i) {
      qci::require(commutators[i] != nullptr,
                   qci::ErrorCode::InvalidArgument,
                   "null commutator string");
      comms.push_back(f.parse(commutators[i]));
    }
    *out = new qci_presentation{
        qci::Presentation::create(f, std::move(exps), std::move(comms))};
  });
}

qci_status qci_presentation_homogeneous(const char* field_spec, uint32_t n,
                                        uint32_t a, qci_presentation** out) {
  return guarded([&] {
    qci::require(field_spec != nullptr && out != nullptr,
                 qci::ErrorCode::InvalidArgument, "null argument");
    const qci::Field f = qci::Field::parse_spec(field_spec);
    *out = new qci_presentation{qci::Presentation::homogeneous(f, n, a)};
  });
}

void qci_presentation_destroy(qci_presentation* p) { delete p; }

qci_status qci_presentation_dimension(const qci_presentation* p,
                                      uint64_t* out) {
  return guarded([&] {
    const qci::PresentationPtr& pres = need_pres(p);
    qci::require(out != nullptr, qci::ErrorCode::InvalidArgument,
                 "null output parameter");
    *out = pres->dimension();
  });
}

qci_status qci_presentation_is_homogeneous(const qci_presentation* p,
                                           int* out) {
  return guarded([&] {
    const qci::PresentationPtr& pres = need_pres(p);
    qci::require(out != nullptr, qci::ErrorCode::InvalidArgument,
                 "null output parameter");
    *out = pres->is_homogeneous() ? 1 : 0;
  });
}

qci_status qci_presentation_to_json(const qci_presentation* p, char** out) {
  return guarded(
      [&] { write_string(out, need_pres(p)->to_json().dump()); });
}

qci_status qci_presentation_from_json(const char* json_text,
                                      qci_presentation** out) {
  return guarded([&] {
    qci::require(json_text != nullptr && out != nullptr,
                 qci::ErrorCode::InvalidArgument, "null argument");
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
      qci::fail(qci::ErrorCode::ParseError,
                std::string("presentation is not valid JSON: ") + e.what());
    }
    *out = new qci_presentation{qci::Presentation::from_json(j)};
  });
}

qci_status qci_element_zero(const qci_presentation* p, qci_element** out) {
  return guarded(
      [&] { write_element(out, qci::Element::zero(need_pres(p))); });
}

qci_status qci_element_one(const qci_presentation* p, qci_element** out) {
  return guarded(
      [&] { write_element(out, qci::Element::one(need_pres(p))); });
}

qci_status qci_element_generator(const qci_presentation* p, uint32_t index,
                                 qci_element** out) {
  return guarded([&] {
    const qci::PresentationPtr& pres = need_pres(p);
    qci::require(index < pres->n, qci::ErrorCode::InvalidArgument,
                 "generator index out of range");
    write_element(out, qci::Element::generator(pres, index));
  });
}

qci_status qci_element_linear_form(const qci_presentation* p,
                                   const char* const* alpha,
                                   qci_element** out) {
  return guarded([&] {
    const qci::PresentationPtr& pres = need_pres(p);
    write_element(out, qci::linear_form(pres, parse_tuple(pres, alpha)));
  });
}

void qci_element_destroy(qci_element* e) { delete e; }

qci_status qci_element_add(const qci_element* a, const qci_element* b,
                           qci_element** out) {
  return guarded([&] { write_element(out, need_elem(a) + need_elem(b)); });
}

qci_status qci_element_mul(const qci_element* a, const qci_element* b,
                           qci_element** out) {
  return guarded([&] { write_element(out, need_elem(a) * need_elem(b)); });
}

qci_status qci_element_scale(const qci_element* a, const char* scalar,
                             qci_element** out) {
  return guarded([&] {
    const qci::Element& e = need_elem(a);
    qci::require(scalar != nullptr, qci::ErrorCode::InvalidArgument,
                 "null scalar string");
    qci::require(e.valid(), qci::ErrorCode::InvalidArgument,
                 "element has no presentation");
    const qci::Scalar s = e.presentation()->field.parse(scalar);
    write_element(out, e.scaled(s));
  });
}

int qci_element_is_zero(const qci_element* e) {
  if (e == nullptr) return -1;
  return e->e.is_zero() ? 1 : 0;
}

qci_status qci_element_to_string(const qci_element* e, char** out) {
  return guarded([&] { write_string(out, need_elem(e).to_string()); });
}

qci_status qci_element_to_json(const qci_element* e, char** out) {
  return guarded([&] { write_string(out, need_elem(e).to_json().dump()); });
}

qci_status qci_witness_word(const qci_presentation* p,
                            const char* const* alpha, qci_element** out) {
  return guarded([&] {
    const qci::PresentationPtr& pres = need_pres(p);
    write_element(out, qci::witness_word(pres, parse_tuple(pres, alpha)));
  });
}

qci_status qci_membership(const qci_presentation* p,
                          const char* const* alpha, int* member_out,
                          char** report_json_out) {
  return guarded([&] {
    const qci::PresentationPtr& pres = need_pres(p);
    qci::require(member_out != nullptr, qci::ErrorCode::InvalidArgument,
                 "null output parameter");
    const std::vector<qci::Scalar> a = parse_tuple(pres, alpha);
    const qci::Element w = qci::witness_word(pres, a);
    const qci::MembershipReport r = qci::membership_two_sided(pres, a, w);
    if (report_json_out != nullptr)
      write_string(report_json_out, r.to_json().dump(2) + "\n");
    *member_out = r.member ? 1 : 0;
  });
}

int qci_run_command(const char* config_json, char** report_out) {
  g_last_error.clear();
  try {
    qci::require(config_json != nullptr, qci::ErrorCode::InvalidArgument,
                 "null configuration");
    const qci::RunResult r = qci::run_command(std::string(config_json));
    if (report_out != nullptr) write_string(report_out, r.report);
    return r.exit_code;
  } catch (const qci::QciError& e) {
    g_last_error = e.what();
    return e.is_config_error() ? 2 : 1;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return 2;
  }
}

}  // extern "C"
