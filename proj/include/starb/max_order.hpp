#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "starb/constructions.hpp"
#include "starb/star_core.hpp"

namespace starb {

// Shape of the repeated block I_c (x) block used for an extremal template.
enum class BlockKind {
  HadamardHadamard,      // H(p) (x) H(q)
  HadamardConference,    // H(p) (x) C(q+1)
  ConferenceConference,  // C(p+1) (x) C(q+1)
  HadamardOnes,          // H(p) (x) j_q
  ConferenceOnes,        // C(p+1) (x) j_q
};

std::string to_string(BlockKind kind);

struct FactorizationPlan {
  std::int64_t p = 1;
  std::int64_t q = 1;
  OrderClass p_class;
  OrderClass q_class;
  BlockKind kind = BlockKind::HadamardOnes;
  std::int64_t c = 1;  // copies of the block; maximal with c * block_rows() <= s

  std::int64_t block_rows() const;
  std::int64_t block_cols() const;
  std::int64_t columns() const { return c * block_cols(); }
  std::string describe() const;
};

// Block kinds whose factor requirements (p, q) meet, in BlockKind order.
std::vector<BlockKind> applicable_kinds(const OrderClass& p, const OrderClass& q);

// Every ordered divisor pair (p, q) of mu_sq, p ascending, with each applicable block kind
// whose block fits in s rows. Throws std::invalid_argument if existence fails.
std::vector<FactorizationPlan> enumerate_factorization_plans(std::int64_t s, std::int64_t mu_sq);

// I_c (x) block, padded with zero rows at the bottom up to s rows.
// Throws std::invalid_argument when the plan does not match (s, mu_sq) or a factor is unreachable.
BipartiteTemplate build_extremal_template(std::int64_t s, std::int64_t mu_sq, const FactorizationPlan& plan);

struct MaxOrderResult {
  enum class Verdict { Exact, Bounds, Unknown };

  std::int64_t s = 0;
  std::int64_t mu_sq = 0;
  Verdict verdict = Verdict::Unknown;
  std::int64_t lo = 0;  // order n; lo == hi for Exact
  std::int64_t hi = 0;
  std::optional<BipartiteTemplate> witness;  // achieves lo
  std::optional<FactorizationPlan> witness_plan;
  std::vector<std::string> provenance;  // every clause attaining the reported value

  std::string verdict_string() const;  // "Exact 8", "Bounds 16..30", "Unknown 13..14"
  std::string provenance_string() const;
};

/// Closed-form maximum order of a signed bipartite graph with sK_1 as a star
/// complement for +-sqrt(mu_sq).
///
/// Every exact clause is evaluated and the largest value wins; its witness is built
/// from the matching plan. Lower-bound clauses only matter when no exact clause fires,
/// and the generic fallback reports the best constructible plan against hi = 2s.
/// Throws std::invalid_argument if existence_check fails.
MaxOrderResult formula_max_order(std::int64_t s, std::int64_t mu_sq);

}  // namespace starb
