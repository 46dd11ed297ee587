// Command-line front end.  All functionality is reached through the C
// interface in horoquot.h; exit codes are the hq_status values (0 success,
// 1 internal invariant failure, 2 usage or input error, 3 resource cap).

#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "horoquot.h"

namespace {

int emit(hq_status status, char* out, char* err) {
  if (out) {
    std::fputs(out, stdout);
    hq_string_free(out);
  }
  if (err) {
    std::fprintf(stderr, "error: %s\n", err);
    hq_string_free(err);
  }
  return static_cast<int>(status);
}

hq_format to_format(const std::string& f) {
  return f == "json" ? HQ_FORMAT_JSON : HQ_FORMAT_TEXT;
}

// Builds the root system, runs one report function against it, prints the
// result, and frees everything.
template <typename Fn>
int with_rs(const std::string& type, const std::string& format, Fn&& fn) {
  hq_root_system* rs = nullptr;
  char* err = nullptr;
  hq_status status = hq_root_system_create(type.c_str(), &rs, &err);
  if (status != HQ_OK) return emit(status, nullptr, err);
  char* out = nullptr;
  err = nullptr;
  status = fn(rs, to_format(format), &out, &err);
  int code = emit(status, out, err);
  hq_root_system_free(rs);
  return code;
}

int usage_error(const char* message) {
  std::fprintf(stderr, "error: %s\n", message);
  return static_cast<int>(HQ_ERR_PARSE);
}

void add_format(CLI::App* sub, std::string& fmt) {
  sub->add_option("--format", fmt, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact criteria for quotients of affine horospherical varieties by the derived group of a "
      "maximal unipotent subgroup"};
  app.set_version_flag("--version", hq_version());
  app.require_subcommand(1);
  int rc = 0;

  // analyze
  std::string an_type, an_gens, an_fmt = "text";
  auto* analyze = app.add_subcommand(
      "analyze", "Monoid analysis: minimal generators, dimensions, polynomiality, "
                 "equidimensionality");
  analyze->add_option("type", an_type, "Root-system type, e.g. A3 or A1xA2")->required();
  analyze->add_option("--gens", an_gens, "':'-separated generator weights, e.g. 1,0,0:0,0,1")
      ->required();
  add_format(analyze, an_fmt);
  analyze->callback([&] {
    rc = with_rs(an_type, an_fmt, [&](hq_root_system* rs, hq_format f, char** out, char** err) {
      return hq_analyze(rs, an_gens.c_str(), f, out, err);
    });
  });

  // hv
  std::string hv_type, hv_weight, hv_fmt = "text";
  bool hv_nullcone = false;
  auto* hv = app.add_subcommand(
      "hv", "Highest-weight-vector orbit closure: dimensions; --nullcone for the "
            "codimension-two null-fibre witness");
  hv->add_option("type", hv_type, "Root-system type")->required();
  hv->add_option("--weight", hv_weight, "Highest weight, e.g. 1,0,2")->required();
  hv->add_flag("--nullcone", hv_nullcone, "Report the null-fibre witness instead");
  add_format(hv, hv_fmt);
  hv->callback([&] {
    rc = with_rs(hv_type, hv_fmt, [&](hq_root_system* rs, hq_format f, char** out, char** err) {
      return hv_nullcone ? hq_nullcone(rs, hv_weight.c_str(), f, out, err)
                         : hq_hv(rs, hv_weight.c_str(), f, out, err);
    });
  });

  // sparse
  std::string sp_type, sp_nodes, sp_fmt = "text";
  bool sp_list = false;
  auto* sparse = app.add_subcommand("sparse", "Sparseness of a node set, or list all sparse sets");
  sparse->add_option("type", sp_type, "Root-system type")->required();
  auto* sp_nodes_opt = sparse->add_option("--nodes", sp_nodes, "1-based node set, e.g. 1,4");
  sparse->add_flag("--list", sp_list, "Enumerate every sparse set");
  add_format(sparse, sp_fmt);
  sparse->callback([&] {
    bool have_nodes = sp_nodes_opt->count() > 0;
    if (sp_list == have_nodes) {
      rc = usage_error("sparse: give exactly one of --nodes or --list");
      return;
    }
    rc = with_rs(sp_type, sp_fmt, [&](hq_root_system* rs, hq_format f, char** out, char** err) {
      return sp_list ? hq_sparse_list(rs, f, out, err)
                     : hq_sparse_check(rs, sp_nodes.c_str(), f, out, err);
    });
  });

  // hm
  std::string hm_type, hm_tau, hm_fmt = "text";
  auto* hm = app.add_subcommand("hm", "Admissibility of a one-parameter subgroup");
  hm->add_option("type", hm_type, "Root-system type")->required();
  hm->add_option("--coweight", hm_tau, "Coweight in fundamental-coweight coordinates")->required();
  add_format(hm, hm_fmt);
  hm->callback([&] {
    rc = with_rs(hm_type, hm_fmt, [&](hq_root_system* rs, hq_format f, char** out, char** err) {
      return hq_hm(rs, hm_tau.c_str(), f, out, err);
    });
  });

  // cofree
  std::string cf_type, cf_weight, cf_fmt = "text";
  auto* cofree = app.add_subcommand("cofree", "Cofreeness classification of a simple module");
  cofree->add_option("type", cf_type, "Simple root-system type of rank >= 2")->required();
  cofree->add_option("--weight", cf_weight, "Highest weight")->required();
  add_format(cofree, cf_fmt);
  cofree->callback([&] {
    rc = with_rs(cf_type, cf_fmt, [&](hq_root_system* rs, hq_format f, char** out, char** err) {
      return hq_cofree(rs, cf_weight.c_str(), f, out, err);
    });
  });

  // contraction
  std::string ct_type, ct_weights, ct_fmt = "text";
  auto* contraction =
      app.add_subcommand("contraction", "Free-generator hypotheses for the contraction family");
  contraction->add_option("type", ct_type, "Root-system type")->required();
  contraction->add_option("--weights", ct_weights, "':'-separated generator weights")->required();
  add_format(contraction, ct_fmt);
  contraction->callback([&] {
    rc = with_rs(ct_type, ct_fmt, [&](hq_root_system* rs, hq_format f, char** out, char** err) {
      return hq_contraction(rs, ct_weights.c_str(), f, out, err);
    });
  });

  // roots
  std::string rt_type, rt_fmt = "text";
  auto* roots = app.add_subcommand("roots", "Cartan matrix and positive roots");
  roots->add_option("type", rt_type, "Root-system type")->required();
  add_format(roots, rt_fmt);
  roots->callback([&] {
    rc = with_rs(rt_type, rt_fmt, [&](hq_root_system* rs, hq_format f, char** out, char** err) {
      return hq_roots(rs, f, out, err);
    });
  });

  // weyl
  std::string wl_type, wl_reps, wl_minlen, wl_orbit, wl_fmt = "text";
  bool wl_list = false;
  long wl_cap = 0;
  auto* weyl = app.add_subcommand(
      "weyl", "Weyl group: summary, element list, coset representatives, minimal lengths, orbits");
  weyl->add_option("type", wl_type, "Root-system type")->required();
  weyl->add_flag("--list", wl_list, "List every element (capped)");
  auto* wl_reps_opt =
      weyl->add_option("--reps", wl_reps, "Minimal coset representatives for a node set");
  auto* wl_minlen_opt = weyl->add_option(
      "--min-length", wl_minlen, "Minimal length moving each listed fundamental weight strictly "
                                 "below its simple-root shift");
  auto* wl_orbit_opt = weyl->add_option("--orbit", wl_orbit, "Orbit of a weight");
  weyl->add_option("--max-weyl-order", wl_cap, "Enumeration cap (default 51840)");
  add_format(weyl, wl_fmt);
  weyl->callback([&] {
    int modes = (wl_list ? 1 : 0) + (wl_reps_opt->count() > 0 ? 1 : 0) +
                (wl_minlen_opt->count() > 0 ? 1 : 0) + (wl_orbit_opt->count() > 0 ? 1 : 0);
    if (modes > 1) {
      rc = usage_error("weyl: choose at most one of --list, --reps, --min-length, --orbit");
      return;
    }
    rc = with_rs(wl_type, wl_fmt, [&](hq_root_system* rs, hq_format f, char** out, char** err) {
      if (wl_list) return hq_weyl_list(rs, wl_cap, f, out, err);
      if (wl_reps_opt->count() > 0)
        return hq_weyl_coset_reps(rs, wl_reps.c_str(), wl_cap, f, out, err);
      if (wl_minlen_opt->count() > 0)
        return hq_weyl_min_length(rs, wl_minlen.c_str(), wl_cap, f, out, err);
      if (wl_orbit_opt->count() > 0) return hq_weyl_orbit(rs, wl_orbit.c_str(), wl_cap, f, out, err);
      return hq_weyl_summary(rs, f, out, err);
    });
  });

  // cone
  std::string cn_type, cn_gens, cn_contains, cn_interior, cn_fmt = "text";
  bool cn_dmp = false, cn_dual = false;
  auto* cone = app.add_subcommand("cone", "Rational cone reports over weight space");
  cone->add_option("type", cn_type, "Root-system type")->required();
  auto* cn_gens_opt = cone->add_option("--gens", cn_gens, "':'-separated generator weights");
  cone->add_flag("--delta-minus-pi", cn_dmp,
                 "Use the cone spanned by the non-simple positive roots");
  cone->add_flag("--dual", cn_dual, "Report the dual cone");
  auto* cn_contains_opt =
      cone->add_option("--contains", cn_contains, "Report membership of this vector");
  auto* cn_interior_opt = cone->add_option("--interior", cn_interior,
                                           "Report relative-interior membership of this vector");
  add_format(cone, cn_fmt);
  cone->callback([&] {
    bool have_gens = cn_gens_opt->count() > 0;
    if (have_gens == cn_dmp) {
      rc = usage_error("cone: give exactly one of --gens or --delta-minus-pi");
      return;
    }
    if (cn_contains_opt->count() > 0 && cn_interior_opt->count() > 0) {
      rc = usage_error("cone: choose one of --contains or --interior, not both");
      return;
    }
    const char* contains = cn_contains_opt->count() > 0 ? cn_contains.c_str() : nullptr;
    const char* interior = cn_interior_opt->count() > 0 ? cn_interior.c_str() : nullptr;
    rc = with_rs(cn_type, cn_fmt, [&](hq_root_system* rs, hq_format f, char** out, char** err) {
      return have_gens ? hq_cone_from_weights(rs, cn_gens.c_str(), cn_dual ? 1 : 0, contains,
                                              interior, f, out, err)
                       : hq_cone_roots_minus_simple(rs, cn_dual ? 1 : 0, contains, interior, f,
                                                    out, err);
    });
  });

  // verify
  std::string vf_suite = "all", vf_fmt = "text";
  auto* verify = app.add_subcommand("verify", "Run the deterministic verification suites");
  verify->add_option("suite", vf_suite, "Suite name, or 'all'");
  add_format(verify, vf_fmt);
  verify->callback([&] {
    char* out = nullptr;
    char* err = nullptr;
    hq_status status = hq_verify(vf_suite.c_str(), to_format(vf_fmt), &out, &err);
    rc = emit(status, out, err);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(HQ_ERR_PARSE);
  }
  return rc;
}
