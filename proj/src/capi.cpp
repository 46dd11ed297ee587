// C interface: thin exception-to-status wrappers around the core modules.

#include "horoquot.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "core/analysis.hpp"
#include "core/io.hpp"
#include "core/verify.hpp"

struct hq_root_system {
  hq::RootSystem rs;
};

namespace {

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

hq::Format to_format(hq_format f) {
  return f == HQ_FORMAT_JSON ? hq::Format::json : hq::Format::text;
}

void clear(char** out, char** err) {
  if (out) *out = nullptr;
  if (err) *err = nullptr;
}

hq_status fail(char** err, const char* what, hq_status status) {
  if (err) *err = dup_string(what);
  return status;
}

// Runs fn() and stores the rendered document; maps the exception hierarchy
// onto status codes.
template <typename Fn>
hq_status wrap(char** out, char** err, Fn&& fn) {
  clear(out, err);
  try {
    std::string text = fn();
    if (out) *out = dup_string(text);
    return HQ_OK;
  } catch (const hq::invalid_input& e) {
    return fail(err, e.what(), HQ_ERR_PARSE);
  } catch (const hq::cap_exceeded& e) {
    return fail(err, e.what(), HQ_ERR_CAP);
  } catch (const std::exception& e) {
    return fail(err, e.what(), HQ_ERR_INTERNAL);
  }
}

const hq::RootSystem& deref(const hq_root_system* rs) {
  if (!rs) throw hq::invalid_input("null root-system handle");
  return rs->rs;
}

long cap_or(long value, long fallback) { return value > 0 ? value : fallback; }

hq_status cone_report(const hq::RootSystem& rs, hq::Cone cone, int dual, const char* contains,
                      const char* interior, hq_format format, char** out, char** err) {
  (void)rs;
  return wrap(out, err, [&]() {
    if (contains && interior)
      throw hq::invalid_input("choose one of the membership queries, not both");
    hq::Cone c = dual ? hq::dual_cone(cone) : std::move(cone);
    const char* probe = contains ? contains : interior;
    if (probe) {
      hq::QVec x = hq::parse_weight(probe, c.ambient_dim).fw;
      return hq::render_cone_membership(c, x, hq::cone_contains(c, x),
                                        hq::cone_interior_contains(c, x), to_format(format));
    }
    return hq::render_cone(c, to_format(format));
  });
}

}  // namespace

extern "C" {

hq_status hq_root_system_create(const char* type, hq_root_system** out, char** err) {
  if (err) *err = nullptr;
  if (!out) return HQ_ERR_PARSE;
  *out = nullptr;
  try {
    auto* handle = new hq_root_system{hq::parse_type(type ? type : "")};
    *out = handle;
    return HQ_OK;
  } catch (const hq::invalid_input& e) {
    return fail(err, e.what(), HQ_ERR_PARSE);
  } catch (const hq::cap_exceeded& e) {
    return fail(err, e.what(), HQ_ERR_CAP);
  } catch (const std::exception& e) {
    return fail(err, e.what(), HQ_ERR_INTERNAL);
  }
}

void hq_root_system_free(hq_root_system* rs) { delete rs; }

int hq_root_system_rank(const hq_root_system* rs) { return rs ? rs->rs.rank : -1; }

hq_status hq_analyze(const hq_root_system* rs, const char* weight_list, hq_format format,
                     char** out, char** err) {
  return wrap(out, err, [&]() {
    const auto& r = deref(rs);
    hq::MonoidSpec spec{hq::parse_weight_list(weight_list ? weight_list : "", r.rank)};
    return hq::render_analysis(r, hq::s_variety_report(r, spec), to_format(format));
  });
}

hq_status hq_hv(const hq_root_system* rs, const char* weight, hq_format format, char** out,
                char** err) {
  return wrap(out, err, [&]() {
    const auto& r = deref(rs);
    hq::Weight lam = hq::parse_weight(weight ? weight : "", r.rank);
    return hq::render_hv(r, hq::hv_report(r, lam), to_format(format));
  });
}

hq_status hq_nullcone(const hq_root_system* rs, const char* weight, hq_format format, char** out,
                      char** err) {
  return wrap(out, err, [&]() {
    const auto& r = deref(rs);
    hq::Weight lam = hq::parse_weight(weight ? weight : "", r.rank);
    return hq::render_nullcone(r, lam, hq::nullcone_codim2_witness(r, lam), to_format(format));
  });
}

hq_status hq_sparse_check(const hq_root_system* rs, const char* nodes, hq_format format,
                          char** out, char** err) {
  return wrap(out, err, [&]() {
    const auto& r = deref(rs);
    auto set = hq::parse_nodes(nodes ? nodes : "", r.rank);
    return hq::render_sparse_check(r, hq::is_sparse(r, set), to_format(format));
  });
}

hq_status hq_sparse_list(const hq_root_system* rs, hq_format format, char** out, char** err) {
  return wrap(out, err, [&]() {
    const auto& r = deref(rs);
    return hq::render_sparse_list(r, hq::enumerate_sparse_sets(r), to_format(format));
  });
}

hq_status hq_hm(const hq_root_system* rs, const char* coweight, hq_format format, char** out,
                char** err) {
  return wrap(out, err, [&]() {
    const auto& r = deref(rs);
    hq::Coweight tau = hq::parse_coweight(coweight ? coweight : "", r.rank);
    return hq::render_hm(r, tau, hq::hm_admissible(r, tau), to_format(format));
  });
}

hq_status hq_cofree(const hq_root_system* rs, const char* weight, hq_format format, char** out,
                    char** err) {
  return wrap(out, err, [&]() {
    const auto& r = deref(rs);
    hq::Weight lam = hq::parse_weight(weight ? weight : "", r.rank);
    return hq::render_cofree(r, lam, hq::classify_cofree(r, lam), to_format(format));
  });
}

hq_status hq_contraction(const hq_root_system* rs, const char* weight_list, hq_format format,
                         char** out, char** err) {
  return wrap(out, err, [&]() {
    const auto& r = deref(rs);
    auto weights = hq::parse_weight_list(weight_list ? weight_list : "", r.rank);
    return hq::render_contraction(r, weights, hq::check_contraction_hypotheses(r, weights),
                                  to_format(format));
  });
}

hq_status hq_roots(const hq_root_system* rs, hq_format format, char** out, char** err) {
  return wrap(out, err, [&]() { return hq::render_roots(deref(rs), to_format(format)); });
}

hq_status hq_weyl_summary(const hq_root_system* rs, hq_format format, char** out, char** err) {
  return wrap(out, err, [&]() { return hq::render_weyl_summary(deref(rs), to_format(format)); });
}

hq_status hq_weyl_list(const hq_root_system* rs, long max_order, hq_format format, char** out,
                       char** err) {
  return wrap(out, err, [&]() {
    const auto& r = deref(rs);
    auto elements = hq::enumerate_weyl(r, cap_or(max_order, hq::kDefaultMaxWeylOrder));
    return hq::render_weyl_list(r, elements, to_format(format));
  });
}

hq_status hq_weyl_coset_reps(const hq_root_system* rs, const char* nodes, long max_order,
                             hq_format format, char** out, char** err) {
  return wrap(out, err, [&]() {
    const auto& r = deref(rs);
    auto set = hq::parse_nodes(nodes ? nodes : "", r.rank);
    auto reps = hq::minimal_coset_reps(r, set, cap_or(max_order, hq::kDefaultMaxWeylOrder));
    return hq::render_coset_reps(r, reps, to_format(format));
  });
}

hq_status hq_weyl_min_length(const hq_root_system* rs, const char* nodes, long max_order,
                             hq_format format, char** out, char** err) {
  return wrap(out, err, [&]() {
    const auto& r = deref(rs);
    auto set = hq::parse_nodes(nodes ? nodes : "", r.rank);
    auto len = hq::min_length_satisfying(r, set, cap_or(max_order, hq::kDefaultMaxWeylOrder));
    return hq::render_min_length(r, set, len, to_format(format));
  });
}

hq_status hq_weyl_orbit(const hq_root_system* rs, const char* weight, long max_size,
                        hq_format format, char** out, char** err) {
  return wrap(out, err, [&]() {
    const auto& r = deref(rs);
    hq::Weight w = hq::parse_weight(weight ? weight : "", r.rank);
    auto elements = hq::weyl_orbit(r, w, cap_or(max_size, 1000000));
    hq::Weight dominant = w;
    for (const auto& v : elements)
      if (hq::vec_is_nonnegative(v)) {
        dominant = hq::Weight{v};
        break;
      }
    return hq::render_orbit(r, w, hq::Int(static_cast<long>(elements.size())), dominant, elements,
                            to_format(format));
  });
}

hq_status hq_cone_from_weights(const hq_root_system* rs, const char* weight_list, int dual,
                               const char* contains, const char* interior, hq_format format,
                               char** out, char** err) {
  clear(out, err);
  try {
    const auto& r = deref(rs);
    auto weights = hq::parse_weight_list(weight_list ? weight_list : "", r.rank);
    std::vector<hq::QVec> vecs;
    vecs.reserve(weights.size());
    for (const auto& w : weights) vecs.push_back(w.fw);
    hq::Cone cone = hq::cone_from(vecs, r.rank, hq::ConeSpace::weight);
    return cone_report(r, std::move(cone), dual, contains, interior, format, out, err);
  } catch (const hq::invalid_input& e) {
    return fail(err, e.what(), HQ_ERR_PARSE);
  } catch (const hq::cap_exceeded& e) {
    return fail(err, e.what(), HQ_ERR_CAP);
  } catch (const std::exception& e) {
    return fail(err, e.what(), HQ_ERR_INTERNAL);
  }
}

hq_status hq_cone_roots_minus_simple(const hq_root_system* rs, int dual, const char* contains,
                                     const char* interior, hq_format format, char** out,
                                     char** err) {
  clear(out, err);
  try {
    const auto& r = deref(rs);
    return cone_report(r, hq::positive_roots_minus_simple_cone(r), dual, contains, interior,
                       format, out, err);
  } catch (const hq::invalid_input& e) {
    return fail(err, e.what(), HQ_ERR_PARSE);
  } catch (const hq::cap_exceeded& e) {
    return fail(err, e.what(), HQ_ERR_CAP);
  } catch (const std::exception& e) {
    return fail(err, e.what(), HQ_ERR_INTERNAL);
  }
}

hq_status hq_verify(const char* suite, hq_format format, char** out, char** err) {
  clear(out, err);
  try {
    auto results = hq::run_suites(suite && *suite ? suite : "all");
    std::string text = hq::render_suites(results, to_format(format));
    long failed = 0;
    for (const auto& s : results) failed += s.failures;
    if (out) *out = dup_string(text);
    if (failed > 0)
      return fail(err, (std::to_string(failed) + " verification checks failed").c_str(),
                  HQ_ERR_INTERNAL);
    return HQ_OK;
  } catch (const hq::invalid_input& e) {
    return fail(err, e.what(), HQ_ERR_PARSE);
  } catch (const hq::cap_exceeded& e) {
    return fail(err, e.what(), HQ_ERR_CAP);
  } catch (const std::exception& e) {
    return fail(err, e.what(), HQ_ERR_INTERNAL);
  }
}

void hq_string_free(char* s) { std::free(s); }

const char* hq_version(void) { return "1.0.0"; }

}  // extern "C"
