#include <stdexcept>
#include <string>

#include "starb/max_order.hpp"

namespace starb {

std::string to_string(BlockKind kind) {
  switch (kind) {
    case BlockKind::HadamardHadamard: return "H(p)xH(q)";
    case BlockKind::HadamardConference: return "H(p)xC(q+1)";
    case BlockKind::ConferenceConference: return "C(p+1)xC(q+1)";
    case BlockKind::HadamardOnes: return "H(p)xj(q)";
    case BlockKind::ConferenceOnes: return "C(p+1)xj(q)";
  }
  return "?";
}

std::int64_t FactorizationPlan::block_rows() const {
  switch (kind) {
    case BlockKind::HadamardHadamard: return p * q;
    case BlockKind::HadamardConference: return p * (q + 1);
    case BlockKind::ConferenceConference: return (p + 1) * (q + 1);
    case BlockKind::HadamardOnes: return p * q;
    case BlockKind::ConferenceOnes: return (p + 1) * q;
  }
  return 0;
}

std::int64_t FactorizationPlan::block_cols() const {
  switch (kind) {
    case BlockKind::HadamardHadamard: return p * q;
    case BlockKind::HadamardConference: return p * (q + 1);
    case BlockKind::ConferenceConference: return (p + 1) * (q + 1);
    case BlockKind::HadamardOnes: return p;
    case BlockKind::ConferenceOnes: return p + 1;
  }
  return 0;
}

std::string FactorizationPlan::describe() const {
  return to_string(kind) + " p=" + std::to_string(p) + " q=" + std::to_string(q) + " c=" + std::to_string(c);
}

std::vector<BlockKind> applicable_kinds(const OrderClass& p, const OrderClass& q) {
  std::vector<BlockKind> out;
  if (p.in_nh && q.in_nh) out.push_back(BlockKind::HadamardHadamard);
  if (p.in_nh && q.in_nc) out.push_back(BlockKind::HadamardConference);
  if (p.in_nc && q.in_nc) out.push_back(BlockKind::ConferenceConference);
  if (p.in_nh) out.push_back(BlockKind::HadamardOnes);
  if (p.in_nc) out.push_back(BlockKind::ConferenceOnes);
  return out;
}

std::vector<FactorizationPlan> enumerate_factorization_plans(std::int64_t s, std::int64_t mu_sq) {
  if (!existence_check(s, mu_sq)) throw std::invalid_argument("no graph exists for s < mu^2 or mu^2 < 1");
  std::vector<FactorizationPlan> plans;
  for (std::int64_t p = 1; p <= mu_sq; ++p) {
    if (mu_sq % p != 0) continue;
    const std::int64_t q = mu_sq / p;
    const auto pc = classify_order(p), qc = classify_order(q);
    for (auto kind : applicable_kinds(pc, qc)) {
      FactorizationPlan plan{p, q, pc, qc, kind, 0};
      const auto rows = plan.block_rows();
      if (rows > s) continue;
      plan.c = s / rows;
      plans.push_back(plan);
    }
  }
  return plans;
}

BipartiteTemplate build_extremal_template(std::int64_t s, std::int64_t mu_sq, const FactorizationPlan& plan) {
  if (plan.p * plan.q != mu_sq) throw std::invalid_argument("plan: p*q != mu^2");
  if (plan.c < 1 || plan.c * plan.block_rows() > s) throw std::invalid_argument("plan: c copies do not fit in s rows");

  auto hadamard = [](std::int64_t n) {
    auto h = hadamard_of_order(n);
    if (!h) throw std::invalid_argument("no constructible Hadamard matrix of order " + std::to_string(n));
    return h->matrix();
  };
  auto conference = [](std::int64_t q) {
    if (!conference_parameter(q))
      throw std::invalid_argument("no constructible conference matrix of order " + std::to_string(q + 1));
    return paley_conference(q).matrix();
  };

  IntMatrix block;
  switch (plan.kind) {
    case BlockKind::HadamardHadamard: block = kronecker(hadamard(plan.p), hadamard(plan.q)); break;
    case BlockKind::HadamardConference: block = kronecker(hadamard(plan.p), conference(plan.q)); break;
    case BlockKind::ConferenceConference: block = kronecker(conference(plan.p), conference(plan.q)); break;
    case BlockKind::HadamardOnes:
      block = kronecker(hadamard(plan.p), IntMatrix::ones(static_cast<std::size_t>(plan.q), 1));
      break;
    case BlockKind::ConferenceOnes:
      block = kronecker(conference(plan.p), IntMatrix::ones(static_cast<std::size_t>(plan.q), 1));
      break;
  }
  auto b = direct_sum_copies(block, static_cast<std::size_t>(plan.c));
  b = b.pad_rows(static_cast<std::size_t>(s) - b.rows());
  BipartiteTemplate t{std::move(b), mu_sq};
  if (!verify_template(t)) throw std::logic_error("extremal template failed verification: " + plan.describe());
  return t;
}

}  // namespace starb
