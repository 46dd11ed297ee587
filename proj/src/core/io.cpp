#include "core/io.hpp"

#include <cctype>
#include <sstream>

#include "json.hpp"

namespace hq {

namespace {

using nlohmann::json;  // std::map-backed: object keys serialize sorted

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

// ---- text fragments ----

std::string tnodes(const std::vector<int>& nodes) {
  std::string out = "{";
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(nodes[i] + 1);
  }
  return out + "}";
}

std::string tword(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string out;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) out += "*";
    out += "s" + std::to_string(word[i] + 1);
  }
  return out;
}

std::string tivec(const IVec& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

std::string tzvec(const ZVec& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].get_str();
  }
  return out + ")";
}

std::string tviolation(const SparseViolation& v) {
  std::string out = v.kind + " nodes=" + tnodes(v.nodes);
  if (v.via >= 0) out += " via=" + std::to_string(v.via + 1);
  return out;
}

std::string tweights(const std::vector<Weight>& ws) {
  std::string out;
  for (size_t i = 0; i < ws.size(); ++i) {
    if (i) out += " ";
    out += qvec_str(ws[i].fw);
  }
  return out;
}

std::string tzvecs(const std::vector<ZVec>& vs) {
  std::string out;
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i) out += " ";
    out += tzvec(vs[i]);
  }
  return out;
}

const char* onoff(bool b) { return b ? "true" : "false"; }

const char* space_name(ConeSpace s) {
  switch (s) {
    case ConeSpace::weight: return "weight";
    case ConeSpace::coweight: return "coweight";
    default: return "generic";
  }
}

// ---- json fragments ----

json jqvec(const QVec& v) {
  json a = json::array();
  for (const Rat& q : v) a.push_back(rat_str(q));
  return a;
}

json jivec(const IVec& v) {
  json a = json::array();
  for (long x : v) a.push_back(x);
  return a;
}

json jzvec(const ZVec& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(x.get_str());
  return a;
}

json jzvecs(const std::vector<ZVec>& vs) {
  json a = json::array();
  for (const ZVec& v : vs) a.push_back(jzvec(v));
  return a;
}

json jnodes(const std::vector<int>& nodes) {
  json a = json::array();
  for (int i : nodes) a.push_back(i + 1);
  return a;
}

json jweights(const std::vector<Weight>& ws) {
  json a = json::array();
  for (const Weight& w : ws) a.push_back(jqvec(w.fw));
  return a;
}

json jviolation(const SparseViolation& v) {
  json o;
  o["kind"] = v.kind;
  o["nodes"] = jnodes(v.nodes);
  if (v.via >= 0) o["via"] = v.via + 1;
  return o;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

Format parse_format(const std::string& text) {
  if (text == "text") return Format::text;
  if (text == "json") return Format::json;
  throw invalid_input("unknown format '" + text + "' (expected text or json)");
}

RootSystem parse_type(const std::string& text) {
  std::vector<SimpleType> factors;
  if (strip(text).empty()) throw invalid_input("empty type string");
  for (const std::string& raw : split(text, 'x')) {
    std::string tok = strip(raw);
    if (tok.size() < 2 || tok[0] < 'A' || tok[0] > 'G')
      throw invalid_input("bad type token '" + tok + "' (expected e.g. A3, B4, G2)");
    for (size_t i = 1; i < tok.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(tok[i])))
        throw invalid_input("bad rank in type token '" + tok + "'");
    long rank = std::stol(tok.substr(1));
    if (rank < 1 || rank > 32) throw invalid_input("rank out of range in '" + tok + "'");
    factors.push_back(SimpleType{static_cast<Family>(tok[0]), static_cast<int>(rank)});
  }
  RootSystem rs = build_root_system(factors);
  if (rs.rank > 32) throw invalid_input("total rank exceeds 32");
  return rs;
}

Weight parse_weight(const std::string& text, int rank) {
  std::vector<std::string> parts = split(text, ',');
  if (static_cast<int>(parts.size()) != rank)
    throw invalid_input("weight '" + text + "' has " + std::to_string(parts.size()) +
                        " coordinates, expected " + std::to_string(rank));
  QVec v;
  for (const std::string& p : parts) v.push_back(parse_rat(strip(p)));
  return Weight{std::move(v)};
}

Coweight parse_coweight(const std::string& text, int rank) {
  return Coweight{parse_weight(text, rank).fw};
}

std::vector<Weight> parse_weight_list(const std::string& text, int rank) {
  if (strip(text).empty()) throw invalid_input("empty weight list");
  std::vector<Weight> out;
  for (const std::string& part : split(text, ':')) out.push_back(parse_weight(strip(part), rank));
  return out;
}

std::vector<int> parse_nodes(const std::string& text, int rank) {
  std::vector<int> out;
  if (strip(text).empty()) return out;
  for (const std::string& raw : split(text, ',')) {
    std::string tok = strip(raw);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw invalid_input("bad node index '" + tok + "'");
    long n = std::stol(tok);
    if (n < 1 || n > rank)
      throw invalid_input("node index " + tok + " out of range 1.." + std::to_string(rank));
    out.push_back(static_cast<int>(n) - 1);
  }
  return out;
}

std::string render_analysis(const RootSystem& rs, const AnalysisReport& rep, Format f) {
  if (f == Format::json) {
    json j;
    j["type"] = rs.type_string();
    j["monoid"] = json{{"generators", jweights(rep.monoid.generators)}};
    j["minimal_generators"] = jweights(rep.minimal.generators);
    j["rk_S"] = rep.rk_S;
    j["srk_L"] = rep.srk_L;
    j["dim_gp"] = rep.dim_gp;
    j["dim_X"] = rep.dim_X;
    j["dim_quotient_U"] = rep.dim_quotient_U;
    j["dim_quotient_U2"] = rep.dim_quotient_U2;
    j["polynomial"] = rep.polynomial;
    j["equidimensional"] = rep.equidimensional;
    j["polynomial_and_equidim"] = rep.polynomial_and_equidim;
    json w = json::object();
    if (rep.witnesses.non_fundamental_generator)
      w["non_fundamental_generator"] = jqvec(rep.witnesses.non_fundamental_generator->fw);
    if (rep.witnesses.non_fundamental_ray)
      w["non_fundamental_ray"] = jzvec(*rep.witnesses.non_fundamental_ray);
    if (rep.witnesses.sparse_violation)
      w["sparse_violation"] = jviolation(*rep.witnesses.sparse_violation);
    if (!rep.witnesses.ray_nodes.empty()) w["ray_nodes"] = jnodes(rep.witnesses.ray_nodes);
    j["witnesses"] = w;
    return dump(j);
  }
  std::ostringstream os;
  os << "type = " << rs.type_string() << "\n";
  os << "generators = " << tweights(rep.monoid.generators) << "\n";
  os << "minimal_generators = " << tweights(rep.minimal.generators) << "\n";
  os << "rk_S = " << rep.rk_S << "\n";
  os << "srk_L = " << rep.srk_L << "\n";
  os << "dim_gp = " << rep.dim_gp << "\n";
  os << "dim_X = " << rep.dim_X << "\n";
  os << "dim_quotient_U = " << rep.dim_quotient_U << "\n";
  os << "dim_quotient_U2 = " << rep.dim_quotient_U2 << "\n";
  os << "polynomial = " << onoff(rep.polynomial) << "\n";
  os << "equidimensional = " << onoff(rep.equidimensional) << "\n";
  os << "polynomial_and_equidim = " << onoff(rep.polynomial_and_equidim) << "\n";
  if (rep.witnesses.non_fundamental_generator)
    os << "witness_non_fundamental_generator = "
       << qvec_str(rep.witnesses.non_fundamental_generator->fw) << "\n";
  if (rep.witnesses.non_fundamental_ray)
    os << "witness_non_fundamental_ray = " << tzvec(*rep.witnesses.non_fundamental_ray) << "\n";
  if (rep.witnesses.sparse_violation)
    os << "witness_sparse_violation = " << tviolation(*rep.witnesses.sparse_violation) << "\n";
  if (!rep.witnesses.ray_nodes.empty())
    os << "witness_ray_nodes = " << tnodes(rep.witnesses.ray_nodes) << "\n";
  return os.str();
}

std::string render_hv(const RootSystem& rs, const HvReport& rep, Format f) {
  if (f == Format::json) {
    json j;
    j["type"] = rs.type_string();
    j["lambda"] = jqvec(rep.lambda.fw);
    j["k"] = rep.k;
    j["dim_X"] = rep.dim_X;
    j["dim_quotient"] = rep.dim_quotient;
    j["ed"] = rep.ed.get_str();
    j["hd"] = rep.hd.get_str();
    return dump(j);
  }
  std::ostringstream os;
  os << "type = " << rs.type_string() << "\n";
  os << "lambda = " << qvec_str(rep.lambda.fw) << "\n";
  os << "k = " << rep.k << "\n";
  os << "dim_X = " << rep.dim_X << "\n";
  os << "dim_quotient = " << rep.dim_quotient << "\n";
  os << "ed = " << rep.ed.get_str() << "\n";
  os << "hd = " << rep.hd.get_str() << "\n";
  return os.str();
}

std::string render_nullcone(const RootSystem& rs, const Weight& lambda, const NullconeWitness& w,
                            Format f) {
  if (f == Format::json) {
    json j;
    j["type"] = rs.type_string();
    j["lambda"] = jqvec(lambda.fw);
    j["witness_word"] = jnodes(w.w.word);
    j["witness_length"] = w.w.length;
    j["node_i"] = w.node_i + 1;
    j["node_iprime"] = w.node_iprime + 1;
    j["image"] = jqvec(w.image.fw);
    j["box_defect"] = jivec(w.box_defect);
    j["length1_nodes"] = jnodes(w.length1_nodes);
    j["length1_all_inside"] = w.length1_all_inside;
    return dump(j);
  }
  std::ostringstream os;
  os << "type = " << rs.type_string() << "\n";
  os << "lambda = " << qvec_str(lambda.fw) << "\n";
  os << "witness = " << tword(w.w.word) << "\n";
  os << "length = " << w.w.length << "\n";
  os << "node_i = " << w.node_i + 1 << "\n";
  os << "node_iprime = " << w.node_iprime + 1 << "\n";
  os << "image = " << qvec_str(w.image.fw) << "\n";
  os << "box_defect = " << tivec(w.box_defect) << "\n";
  os << "length1_nodes = " << tnodes(w.length1_nodes) << "\n";
  os << "length1_all_inside = " << onoff(w.length1_all_inside) << "\n";
  return os.str();
}

std::string render_sparse_check(const RootSystem& rs, const SparseCheck& check, Format f) {
  if (f == Format::json) {
    json j;
    j["type"] = rs.type_string();
    j["nodes"] = jnodes(check.nodes);
    j["sparse"] = check.sparse;
    if (check.violation) j["violation"] = jviolation(*check.violation);
    return dump(j);
  }
  std::ostringstream os;
  os << "type = " << rs.type_string() << "\n";
  os << "nodes = " << tnodes(check.nodes) << "\n";
  os << "sparse = " << onoff(check.sparse) << "\n";
  if (check.violation) os << "violation = " << tviolation(*check.violation) << "\n";
  return os.str();
}

std::string render_sparse_list(const RootSystem& rs, const std::vector<std::vector<int>>& sets,
                               Format f) {
  if (f == Format::json) {
    json j;
    j["type"] = rs.type_string();
    j["count"] = sets.size();
    json a = json::array();
    for (const auto& s : sets) a.push_back(jnodes(s));
    j["sets"] = a;
    return dump(j);
  }
  std::ostringstream os;
  os << "type = " << rs.type_string() << "\n";
  os << "count = " << sets.size() << "\n";
  os << "sets:\n";
  for (const auto& s : sets) os << "  " << tnodes(s) << "\n";
  return os.str();
}

std::string render_hm(const RootSystem& rs, const Coweight& tau, const HmVerdict& verdict,
                      Format f) {
  if (f == Format::json) {
    json j;
    j["type"] = rs.type_string();
    j["tau"] = jqvec(tau.fcw);
    j["within_hypotheses"] = verdict.within_hypotheses;
    j["admissible"] = verdict.admissible;
    j["pairings_fundamental"] = jqvec(verdict.pairings_fundamental);
    j["pairings_shifted"] = jqvec(verdict.pairings_shifted);
    return dump(j);
  }
  std::ostringstream os;
  os << "type = " << rs.type_string() << "\n";
  os << "tau = " << qvec_str(tau.fcw) << "\n";
  os << "within_hypotheses = " << onoff(verdict.within_hypotheses) << "\n";
  os << "admissible = " << onoff(verdict.admissible) << "\n";
  os << "pairings_fundamental = " << qvec_str(verdict.pairings_fundamental) << "\n";
  os << "pairings_shifted = " << qvec_str(verdict.pairings_shifted) << "\n";
  return os.str();
}

std::string render_cofree(const RootSystem& rs, const Weight& lambda, const CofreeVerdict& verdict,
                          Format f) {
  if (f == Format::json) {
    json j;
    j["type"] = rs.type_string();
    j["lambda"] = jqvec(lambda.fw);
    j["normalized"] = jqvec(verdict.normalized.fw);
    j["status"] = verdict.status;
    j["cofree"] = verdict.cofree;
    return dump(j);
  }
  std::ostringstream os;
  os << "type = " << rs.type_string() << "\n";
  os << "lambda = " << qvec_str(lambda.fw) << "\n";
  os << "normalized = " << qvec_str(verdict.normalized.fw) << "\n";
  os << "status = " << verdict.status << "\n";
  os << "cofree = " << onoff(verdict.cofree) << "\n";
  return os.str();
}

std::string render_contraction(const RootSystem& rs, const std::vector<Weight>& weights,
                               const ContractionVerdict& verdict, Format f) {
  if (f == Format::json) {
    json j;
    j["type"] = rs.type_string();
    j["weights"] = jweights(weights);
    j["passes"] = verdict.passes;
    j["ignored_invariant_generators"] = verdict.ignored_invariant_generators;
    json fails = json::array();
    for (const ContractionFailure& fl : verdict.failures) {
      json o;
      o["kind"] = fl.kind;
      json idx = json::array();
      for (int i : fl.indices) idx.push_back(i);
      o["indices"] = idx;
      if (fl.sparse) o["violation"] = jviolation(*fl.sparse);
      fails.push_back(o);
    }
    j["failures"] = fails;
    if (!verdict.node_set.empty()) j["node_set"] = jnodes(verdict.node_set);
    if (verdict.krull_dim) j["krull_dim"] = verdict.krull_dim->get_str();
    return dump(j);
  }
  std::ostringstream os;
  os << "type = " << rs.type_string() << "\n";
  os << "weights = " << tweights(weights) << "\n";
  os << "passes = " << onoff(verdict.passes) << "\n";
  os << "ignored_invariant_generators = " << verdict.ignored_invariant_generators << "\n";
  if (!verdict.failures.empty()) {
    os << "failures:\n";
    for (const ContractionFailure& fl : verdict.failures) {
      os << "  " << fl.kind;
      if (!fl.indices.empty()) {
        os << " indices=";
        for (size_t i = 0; i < fl.indices.size(); ++i) os << (i ? "," : "") << fl.indices[i];
      }
      if (fl.sparse) os << " " << tviolation(*fl.sparse);
      os << "\n";
    }
  }
  if (!verdict.node_set.empty()) os << "node_set = " << tnodes(verdict.node_set) << "\n";
  if (verdict.krull_dim) os << "krull_dim = " << verdict.krull_dim->get_str() << "\n";
  return os.str();
}

std::string render_roots(const RootSystem& rs, Format f) {
  if (f == Format::json) {
    json j;
    j["type"] = rs.type_string();
    j["rank"] = rs.rank;
    json cart = json::array();
    for (int i = 0; i < rs.rank; ++i) {
      json row = json::array();
      for (int k = 0; k < rs.rank; ++k) row.push_back(rs.cartan.at(i, k));
      cart.push_back(row);
    }
    j["cartan"] = cart;
    j["count"] = rs.positive_roots.size();
    json roots = json::array();
    for (const PosRoot& beta : rs.positive_roots) {
      json o;
      o["height"] = beta.height;
      o["root"] = jivec(beta.root);
      o["fw"] = jivec(beta.fw);
      roots.push_back(o);
    }
    j["roots"] = roots;
    return dump(j);
  }
  std::ostringstream os;
  os << "type = " << rs.type_string() << "\n";
  os << "rank = " << rs.rank << "\n";
  os << "count = " << rs.positive_roots.size() << "\n";
  os << "roots:\n";
  for (size_t k = 0; k < rs.positive_roots.size(); ++k) {
    const PosRoot& beta = rs.positive_roots[k];
    os << "  " << k + 1 << ": height=" << beta.height << " root=" << tivec(beta.root)
       << " fw=" << tivec(beta.fw) << "\n";
  }
  return os.str();
}

std::string render_weyl_summary(const RootSystem& rs, Format f) {
  Int order = weyl_order(rs);
  if (f == Format::json) {
    json j;
    j["type"] = rs.type_string();
    j["rank"] = rs.rank;
    j["order"] = order.get_str();
    j["positive_roots"] = rs.positive_roots.size();
    return dump(j);
  }
  std::ostringstream os;
  os << "type = " << rs.type_string() << "\n";
  os << "rank = " << rs.rank << "\n";
  os << "order = " << order.get_str() << "\n";
  os << "positive_roots = " << rs.positive_roots.size() << "\n";
  return os.str();
}

std::string render_weyl_list(const RootSystem& rs, const std::vector<WeylElement>& elements,
                             Format f) {
  if (f == Format::json) {
    json j;
    j["type"] = rs.type_string();
    j["order"] = elements.size();
    json a = json::array();
    for (const WeylElement& w : elements) {
      json o;
      o["word"] = jnodes(w.word);
      o["length"] = w.length;
      a.push_back(o);
    }
    j["elements"] = a;
    return dump(j);
  }
  std::ostringstream os;
  os << "type = " << rs.type_string() << "\n";
  os << "order = " << elements.size() << "\n";
  os << "elements:\n";
  for (const WeylElement& w : elements)
    os << "  " << tword(w.word) << " length=" << w.length << "\n";
  return os.str();
}

std::string render_coset_reps(const RootSystem& rs, const CosetReps& reps, Format f) {
  if (f == Format::json) {
    json j;
    j["type"] = rs.type_string();
    j["nodes"] = jnodes(reps.nodes);
    j["count"] = reps.reps.size();
    json a = json::array();
    for (const WeylElement& w : reps.reps) {
      json o;
      o["word"] = jnodes(w.word);
      o["length"] = w.length;
      a.push_back(o);
    }
    j["reps"] = a;
    return dump(j);
  }
  std::ostringstream os;
  os << "type = " << rs.type_string() << "\n";
  os << "nodes = " << tnodes(reps.nodes) << "\n";
  os << "count = " << reps.reps.size() << "\n";
  os << "reps:\n";
  for (const WeylElement& w : reps.reps)
    os << "  " << tword(w.word) << " length=" << w.length << "\n";
  return os.str();
}

std::string render_min_length(const RootSystem& rs, const std::vector<int>& nodes,
                              const std::optional<int>& length, Format f) {
  if (f == Format::json) {
    json j;
    j["type"] = rs.type_string();
    j["nodes"] = jnodes(nodes);
    if (length)
      j["min_length"] = *length;
    else
      j["min_length"] = nullptr;
    return dump(j);
  }
  std::ostringstream os;
  os << "type = " << rs.type_string() << "\n";
  os << "nodes = " << tnodes(nodes) << "\n";
  os << "min_length = " << (length ? std::to_string(*length) : "none") << "\n";
  return os.str();
}

std::string render_orbit(const RootSystem& rs, const Weight& w, const Int& size,
                         const Weight& dominant, const std::vector<QVec>& elements, Format f) {
  if (f == Format::json) {
    json j;
    j["type"] = rs.type_string();
    j["weight"] = jqvec(w.fw);
    j["orbit_size"] = size.get_str();
    j["dominant"] = jqvec(dominant.fw);
    if (!elements.empty()) {
      json a = json::array();
      for (const QVec& v : elements) a.push_back(jqvec(v));
      j["elements"] = a;
    }
    return dump(j);
  }
  std::ostringstream os;
  os << "type = " << rs.type_string() << "\n";
  os << "weight = " << qvec_str(w.fw) << "\n";
  os << "orbit_size = " << size.get_str() << "\n";
  os << "dominant = " << qvec_str(dominant.fw) << "\n";
  if (!elements.empty()) {
    os << "elements:\n";
    for (const QVec& v : elements) os << "  " << qvec_str(v) << "\n";
  }
  return os.str();
}

std::string render_cone(const Cone& c, Format f) {
  if (f == Format::json) {
    json j;
    j["space"] = space_name(c.space);
    j["ambient_dim"] = c.ambient_dim;
    json gens = json::array();
    for (const QVec& g : c.generators) gens.push_back(jqvec(g));
    j["generators"] = gens;
    j["rays"] = jzvecs(c.rays);
    j["lineality"] = jzvecs(c.lineality);
    j["facets"] = jzvecs(c.facets);
    j["span_eq"] = jzvecs(c.span_eq);
    j["pointed"] = c.pointed();
    return dump(j);
  }
  std::ostringstream os;
  os << "space = " << space_name(c.space) << "\n";
  os << "ambient_dim = " << c.ambient_dim << "\n";
  os << "generators =";
  for (const QVec& g : c.generators) os << " " << qvec_str(g);
  os << "\n";
  os << "rays =" << (c.rays.empty() ? "" : " ") << tzvecs(c.rays) << "\n";
  os << "lineality =" << (c.lineality.empty() ? "" : " ") << tzvecs(c.lineality) << "\n";
  os << "facets =" << (c.facets.empty() ? "" : " ") << tzvecs(c.facets) << "\n";
  os << "span_eq =" << (c.span_eq.empty() ? "" : " ") << tzvecs(c.span_eq) << "\n";
  os << "pointed = " << onoff(c.pointed()) << "\n";
  return os.str();
}

std::string render_cone_membership(const Cone& c, const QVec& x, bool contains, bool interior,
                                   Format f) {
  if (f == Format::json) {
    json j;
    j["space"] = space_name(c.space);
    j["point"] = jqvec(x);
    j["contains"] = contains;
    j["interior"] = interior;
    return dump(j);
  }
  std::ostringstream os;
  os << "space = " << space_name(c.space) << "\n";
  os << "point = " << qvec_str(x) << "\n";
  os << "contains = " << onoff(contains) << "\n";
  os << "interior = " << onoff(interior) << "\n";
  return os.str();
}

}  // namespace hq
