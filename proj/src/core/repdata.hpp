// Representation-theoretic oracles: Weyl dimension formula, Freudenthal
// weight multiplicities, and the weight set of the U'-invariant subspace of a
// simple module (the "box" {lambda - sum b_i alpha_i, 0 <= b_i <= a_i}).
#pragma once

#include <map>

#include "core/weylgroup.hpp"

namespace hq {

// Weights of R(lambda)^{U'}.  Members are integral, so they are stored as
// integer fw-coordinate vectors, sorted lexicographically.
struct WeightSet {
  Weight base;                // the highest weight lambda
  std::vector<IVec> members;
};

// Weight multiplicities of R(highest).  Entries are stored on dominant
// representatives only; mult() extends W-invariantly.
struct MultiplicityTable {
  Weight highest;
  std::map<IVec, Int> dominant_entries;
};

// dim R(lambda) by the Weyl product formula, exact.
Int weyl_dimension(const RootSystem& rs, const Weight& lambda);

// Multiplicity of mu in R(lambda) by the Freudenthal recursion, top-down from
// lambda with memoization on dominant representatives.  Non-weights give 0.
Int freudenthal_multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& mu);

// All dominant weights of R(lambda) with their multiplicities.  max_entries
// caps the dominant-weight search box.
MultiplicityTable multiplicity_table(const RootSystem& rs, const Weight& lambda,
                                     long max_entries = 1000000);

// Full multiplicity lookup against a table (W-invariant extension).
Int table_multiplicity(const RootSystem& rs, const MultiplicityTable& table, const Weight& mu);

// Orbit size |W mu| for an integral weight, via |W| / |W_stab| where the
// stabiliser of the dominant representative is the parabolic on its zero
// coordinates.
Int weyl_orbit_size(const RootSystem& rs, const IVec& mu_fw);

// The U'-invariant weight set of R(lambda).  max_size caps the box
// cardinality prod (a_i + 1).
WeightSet uprime_weight_set(const RootSystem& rs, const Weight& lambda, long max_size = 10000000);

// prod (a_i + 1) = dim R(lambda)^{U'}; never materialises the set.
Int uprime_invariant_dim(const RootSystem& rs, const Weight& lambda);

// mu = omega_{i1} - alpha_{i1} - ... - alpha_{il} for a path of pairwise
// distinct nodes with consecutive nodes adjacent; such a weight always has
// multiplicity 1 in R(omega_{i1}) (checked against Freudenthal in tests).
Weight chain_weight(const RootSystem& rs, const std::vector<int>& nodes);

}  // namespace hq
