#include <algorithm>
#include <stdexcept>
#include <string>

#include "starb/max_order.hpp"

namespace starb {

namespace {

struct Candidate {
  std::int64_t n;
  FactorizationPlan plan;
  std::string label;
};

// Plan of the given kind for (p, q) with c maximal for s rows, if the factors allow it.
std::optional<FactorizationPlan> plan_for(std::int64_t s, std::int64_t p, std::int64_t q, BlockKind kind) {
  const auto pc = classify_order(p), qc = classify_order(q);
  const auto kinds = applicable_kinds(pc, qc);
  if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end()) return std::nullopt;
  FactorizationPlan plan{p, q, pc, qc, kind, 0};
  if (plan.block_rows() > s) return std::nullopt;
  plan.c = s / plan.block_rows();
  return plan;
}

std::string pq(const FactorizationPlan& plan) {
  return " p=" + std::to_string(plan.p) + " q=" + std::to_string(plan.q) + " c=" + std::to_string(plan.c);
}

void add(std::vector<Candidate>& out, std::int64_t s, const std::optional<FactorizationPlan>& plan, std::string label) {
  if (plan) out.push_back({s + plan->columns(), *plan, std::move(label)});
}

std::vector<Candidate> exact_clauses(std::int64_t s, std::int64_t m) {
  std::vector<Candidate> out;
  if (m == 1) {
    add(out, s, plan_for(s, 1, 1, BlockKind::HadamardHadamard), "unit eigenvalue: identity block");
    return out;
  }
  const auto mc = classify_order(m);

  // mu^2 itself a Hadamard order / conference parameter: c full blocks.
  if (mc.in_nh)
    if (auto p = plan_for(s, m, 1, BlockKind::HadamardHadamard))
      add(out, s, p, "hadamard blocks H(mu^2) c=" + std::to_string(p->c));
  if (mc.in_nc)
    if (auto p = plan_for(s, 1, m, BlockKind::HadamardConference))
      add(out, s, p, "conference blocks C(mu^2+1) c=" + std::to_string(p->c));

  // s = mu^2 with no Hadamard matrix of order mu^2.
  if (s == m && m % 2 == 1) add(out, s, plan_for(s, 1, m, BlockKind::HadamardOnes), "square odd: single all-ones column");
  if (s == m && m % 4 == 2) add(out, s, plan_for(s, 2, m / 2, BlockKind::HadamardOnes), "square 2 mod 4: H(2)xj");
  if (s == m + 1 && m % 4 == 2)
    add(out, s, plan_for(s, 2, m / 2, BlockKind::HadamardOnes), "square plus one 2 mod 4: H(2)xj + isolated vertex");

  for (std::int64_t p = 1; p <= m; ++p) {
    if (m % p != 0) continue;
    const std::int64_t q = m / p;
    const auto pc = classify_order(p), qc = classify_order(q);
    if (pc.in_nh && qc.in_nh)
      if (auto plan = plan_for(s, p, q, BlockKind::HadamardHadamard))
        add(out, s, plan, "hadamard x hadamard" + pq(*plan));
    if (qc.in_nc) {
      if (p == 2 && (s == 2 * q || s == 2 * q + 1))
        add(out, s, plan_for(s, 2, q, BlockKind::HadamardOnes), "double column H(2)xj q=" + std::to_string(q));
      if (pc.in_nh)
        if (auto plan = plan_for(s, p, q, BlockKind::HadamardConference))
          add(out, s, plan, "hadamard x conference" + pq(*plan));
      if (pc.in_nc)
        if (auto plan = plan_for(s, p, q, BlockKind::ConferenceConference))
          add(out, s, plan, "conference x conference" + pq(*plan));
    }
  }
  return out;
}

std::vector<Candidate> lower_bound_clauses(std::int64_t s, std::int64_t m) {
  std::vector<Candidate> out;
  for (std::int64_t p = 1; p <= m; ++p) {
    if (m % p != 0) continue;
    const std::int64_t q = m / p;
    if (p <= q) continue;
    const auto pc = classify_order(p), qc = classify_order(q);
    if (pc.in_nh && qc.in_nc && p * q <= s && s < p * (q + 1))
      add(out, s, plan_for(s, p, q, BlockKind::HadamardOnes), "hadamard x ones lower bound p=" + std::to_string(p) + " q=" + std::to_string(q));
    if (pc.in_nc && qc.in_nc && p * q <= s && s < (p + 1) * q)
      add(out, s, plan_for(s, 1, m, BlockKind::HadamardOnes), "single column lower bound p=" + std::to_string(p) + " q=" + std::to_string(q));
    if (pc.in_nc && qc.in_nc && (p + 1) * q <= s && s < (p + 1) * (q + 1))
      add(out, s, plan_for(s, p, q, BlockKind::ConferenceOnes), "conference x ones lower bound p=" + std::to_string(p) + " q=" + std::to_string(q));
  }
  return out;
}

void settle(MaxOrderResult& r, const std::vector<Candidate>& cands) {
  const auto best = std::max_element(cands.begin(), cands.end(), [](const auto& a, const auto& b) { return a.n < b.n; });
  r.lo = best->n;
  for (const auto& c : cands) {
    if (c.n != best->n) continue;
    if (!r.witness_plan) {
      r.witness_plan = c.plan;
      r.witness = build_extremal_template(r.s, r.mu_sq, c.plan);
    }
    r.provenance.push_back(c.label);
  }
}

}  // namespace

std::string MaxOrderResult::verdict_string() const {
  switch (verdict) {
    case Verdict::Exact: return "Exact " + std::to_string(lo);
    case Verdict::Bounds: return "Bounds " + std::to_string(lo) + ".." + std::to_string(hi);
    case Verdict::Unknown: return "Unknown " + std::to_string(lo) + ".." + std::to_string(hi);
  }
  return "?";
}

std::string MaxOrderResult::provenance_string() const {
  std::string out;
  for (const auto& p : provenance) {
    if (!out.empty()) out += "; ";
    out += p;
  }
  return out;
}

MaxOrderResult formula_max_order(std::int64_t s, std::int64_t mu_sq) {
  if (!existence_check(s, mu_sq))
    throw std::invalid_argument("no signed bipartite graph exists for s=" + std::to_string(s) +
                                ", mu^2=" + std::to_string(mu_sq) + " (need mu^2 >= 1 and s >= mu^2)");
  MaxOrderResult r;
  r.s = s;
  r.mu_sq = mu_sq;
  r.hi = 2 * s;

  if (auto exact = exact_clauses(s, mu_sq); !exact.empty()) {
    r.verdict = MaxOrderResult::Verdict::Exact;
    settle(r, exact);
    r.hi = r.lo;
    return r;
  }
  if (auto bounds = lower_bound_clauses(s, mu_sq); !bounds.empty()) {
    r.verdict = MaxOrderResult::Verdict::Bounds;
    settle(r, bounds);
    return r;
  }

  r.verdict = MaxOrderResult::Verdict::Unknown;
  std::vector<Candidate> all;
  for (const auto& plan : enumerate_factorization_plans(s, mu_sq))
    all.push_back({s + plan.columns(), plan, "best constructible plan " + plan.describe()});
  settle(r, all);
  return r;
}

}  // namespace starb
