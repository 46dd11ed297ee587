// Parsing of the textual input syntax (type strings, weights, weight lists,
// node sets) and deterministic rendering of every report in text or JSON.
//
// Syntax: types "A3", "G2", products "A1xA2" (factor order significant);
// weights "1,0,2" with exact rationals "1/2" allowed, in fundamental-weight
// coordinates; weight lists use ":" between weights; node sets "1,4" are
// 1-based.  All rendered node indices are 1-based; rationals render as "p/q".
#pragma once

#include <string>

#include "core/analysis.hpp"
#include "core/weylgroup.hpp"

namespace hq {

enum class Format { text, json };

Format parse_format(const std::string& text);

RootSystem parse_type(const std::string& text);
Weight parse_weight(const std::string& text, int rank);
Coweight parse_coweight(const std::string& text, int rank);
std::vector<Weight> parse_weight_list(const std::string& text, int rank);
// 1-based on the wire, 0-based in memory.  Empty text means the empty set.
std::vector<int> parse_nodes(const std::string& text, int rank);

// Each renderer returns the complete, newline-terminated output and is
// byte-deterministic for fixed inputs.
std::string render_analysis(const RootSystem& rs, const AnalysisReport& rep, Format f);
std::string render_hv(const RootSystem& rs, const HvReport& rep, Format f);
std::string render_nullcone(const RootSystem& rs, const Weight& lambda, const NullconeWitness& w,
                            Format f);
std::string render_sparse_check(const RootSystem& rs, const SparseCheck& check, Format f);
std::string render_sparse_list(const RootSystem& rs, const std::vector<std::vector<int>>& sets,
                               Format f);
std::string render_hm(const RootSystem& rs, const Coweight& tau, const HmVerdict& verdict,
                      Format f);
std::string render_cofree(const RootSystem& rs, const Weight& lambda, const CofreeVerdict& verdict,
                          Format f);
std::string render_contraction(const RootSystem& rs, const std::vector<Weight>& weights,
                               const ContractionVerdict& verdict, Format f);
std::string render_roots(const RootSystem& rs, Format f);
std::string render_weyl_summary(const RootSystem& rs, Format f);
std::string render_weyl_list(const RootSystem& rs, const std::vector<WeylElement>& elements,
                             Format f);
std::string render_coset_reps(const RootSystem& rs, const CosetReps& reps, Format f);
std::string render_min_length(const RootSystem& rs, const std::vector<int>& nodes,
                              const std::optional<int>& length, Format f);
std::string render_orbit(const RootSystem& rs, const Weight& w, const Int& size,
                         const Weight& dominant, const std::vector<QVec>& elements, Format f);
std::string render_cone(const Cone& c, Format f);
std::string render_cone_membership(const Cone& c, const QVec& x, bool contains, bool interior,
                                   Format f);

}  // namespace hq
