#include <omp.h>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <json.hpp>
#include <sstream>

#include "starb/catalog.hpp"
#include "starb/cli.hpp"
#include "starb/constructions.hpp"
#include "starb/errors.hpp"
#include "starb/max_order.hpp"
#include "starb/search.hpp"

namespace starb::cli {

namespace {

std::optional<std::int64_t> parse_int(std::string_view text) {
  std::int64_t v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return v;
}

std::int64_t require_int(std::string_view what, std::string_view text) {
  if (auto v = parse_int(text)) return *v;
  throw std::invalid_argument(std::string(what) + " must be an integer, got '" + std::string(text) + "'");
}

std::string mu_text(std::int64_t mu_sq) {
  for (std::int64_t r = 0; r * r <= mu_sq; ++r)
    if (r * r == mu_sq) return std::to_string(r);
  return "sqrt(" + std::to_string(mu_sq) + ")";
}

std::string spectrum_text(const SpectrumClaim& c) {
  return "mu^" + std::to_string(c.plus_mu) + " 0^" + std::to_string(c.zero) + " (-mu)^" + std::to_string(c.minus_mu);
}

std::string srg_text(const std::optional<SrgParams>& p) {
  if (!p) return "none";
  return "SRG(" + std::to_string(p->n) + "," + std::to_string(p->r) + "," + std::to_string(p->a) + "," +
         std::to_string(p->b) + "," + std::to_string(p->c) + ")";
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  return out;
}

void emit_matrix(RunReport& r, const IntMatrix& m, const std::string& path) {
  if (path.empty()) {
    std::ostringstream text;
    write_sign_matrix(text, m);
    std::istringstream rows(text.str());
    for (std::string row; std::getline(rows, row);) r.add("row", row);
    return;
  }
  auto out = open_out(path);
  write_sign_matrix(out, m);
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
  r.files.push_back(path);
  r.add("file", path);
}

void emit_graph(RunReport& r, const SignedGraph& g, const std::string& path) {
  if (path.empty()) {
    std::ostringstream text;
    write_edge_list(text, g);
    std::istringstream rows(text.str());
    for (std::string row; std::getline(rows, row);) r.add("edge", row);
    return;
  }
  auto out = open_out(path);
  write_edge_list(out, g);
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
  r.files.push_back(path);
  r.add("file", path);
}

// Runs `body`, turning exceptions into report lines and exit codes.
RunReport guarded(std::string command, const std::function<void(RunReport&)>& body) {
  RunReport r;
  r.command = std::move(command);
  try {
    body(r);
  } catch (const ParseError& e) {
    r.add("error", e.what());
    r.fail(kInputError);
  } catch (const BudgetExceeded& e) {
    r.add("error", std::string("budget: ") + e.what());
    r.fail(kBudget);
  } catch (const InternalInconsistency& e) {
    r.add("error", std::string("internal: ") + e.what());
    r.fail(kFailure);
  } catch (const std::invalid_argument& e) {
    r.add("error", e.what());
    r.fail(kInputError);
  } catch (const std::logic_error& e) {
    r.add("error", std::string("internal: ") + e.what());
    r.fail(kFailure);
  } catch (const std::runtime_error& e) {
    r.add("error", e.what());
    r.fail(kInputError);
  }
  return r;
}

OracleOptions oracle_options(std::int64_t budget_ms, std::uint64_t column_budget, int threads) {
  OracleOptions o;
  o.time_budget_ms = budget_ms;
  if (column_budget) o.column_budget = column_budget;
  o.threads = threads;
  return o;
}

enum class Agreement { Agree, Disagree, Undecided };

Agreement compare(const MaxOrderResult& f, const OracleResult& o) {
  if (o.n > f.hi) return Agreement::Disagree;
  if (o.exact) return o.n >= f.lo ? Agreement::Agree : Agreement::Disagree;
  return Agreement::Undecided;
}

std::string to_string(Agreement a) {
  switch (a) {
    case Agreement::Agree:
      return "AGREE";
    case Agreement::Disagree:
      return "DISAGREE";
    case Agreement::Undecided:
      return "UNDECIDED";
  }
  return "?";
}

std::string oracle_text(const OracleResult& o) {
  return std::to_string(o.n) + (o.exact ? "" : " (lower bound, time budget exhausted)");
}

bool looks_like_sign_matrix(const std::string& line) {
  return !line.empty() && line.find_first_not_of("+-0 \t\r") == std::string::npos &&
         line.find_first_of("+-") != std::string::npos;
}

// "sign", "edges" or "int" from the first lines of the file.
std::string detect_format(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> content;
  for (std::string line; content.size() < 2 && std::getline(in, line);)
    if (line.find_first_not_of(" \t\r") != std::string::npos) content.push_back(line);
  if (content.empty()) throw ParseError("empty file", 1);
  if (looks_like_sign_matrix(content[0])) return "sign";
  if (content.size() > 1) {
    std::istringstream row(content[1]);
    std::string a, b, c;
    row >> a >> b >> c;
    if (c == "+" || c == "-") return "edges";
  }
  return "int";
}

// Largest t with both [0, t) and [t, n) independent.
std::optional<std::size_t> bipartite_split(const SignedGraph& g) {
  const std::size_t n = g.order();
  for (std::size_t t = n + 1; t-- > 0;) {
    bool ok = true;
    for (std::size_t u = 0; u < n && ok; ++u)
      for (std::size_t v = u + 1; v < n && ok; ++v)
        if (g.adjacent(u, v) && ((u < t) == (v < t))) ok = false;
    if (ok) return t;
  }
  return std::nullopt;
}

void report_template(RunReport& r, const BipartiteTemplate& t) {
  r.add("s", std::to_string(t.s()));
  r.add("k", std::to_string(t.k()));
  r.add("mu2", std::to_string(t.mu_sq));
  const auto violations = template_violations(t);
  if (!violations.empty()) {
    r.add("template", "invalid");
    for (const auto& v : violations) r.add("violation", v);
    r.fail(kFailure);
    return;
  }
  const auto claim = spectrum_check(t);
  r.add("template", "valid");
  r.add("n", std::to_string(claim.n));
  r.add("mu", mu_text(t.mu_sq));
  r.add("spectrum", spectrum_text(claim));
  r.add("srg", srg_text(srg_check(assemble_graph(t))));
}

struct GridCell {
  std::int64_t s;
  std::int64_t mu_sq;
};

std::optional<std::vector<GridCell>> parse_grid(const std::string& grid) {
  std::int64_t max_s = 0, max_mu = 8;
  if (grid == "default") {
    max_s = 12;
  } else if (grid == "huge") {
    max_s = 32;
    max_mu = 16;
  } else if (grid.starts_with("s<=")) {
    auto v = parse_int(std::string_view(grid).substr(3));
    if (!v || *v < 1) return std::nullopt;
    max_s = *v;
  } else {
    return std::nullopt;
  }
  std::vector<GridCell> cells;
  for (std::int64_t m = 1; m <= max_mu; ++m)
    for (std::int64_t s = m; s <= max_s; ++s) cells.push_back({s, m});
  return cells;
}

struct NamedCheck {
  std::int64_t mu_sq;
  std::int64_t s;
  const char* id;
};

constexpr NamedCheck kNamedChecks[] = {
    {2, 2, "K22_negK2"}, {3, 3, "K13"},           {4, 4, "K44_negC6"},
    {2, 3, "K13_K1"},    {3, 4, "K44m4K2_negP4K2"}, {5, 6, "BR_signed"},
};

}  // namespace

void RunReport::fail(int code) {
  if (exit_code == kFailure) return;
  if (code == kFailure || exit_code == kOk) exit_code = code;
}

void RunReport::write_text(std::ostream& out, bool timing) const {
  out << "command: " << command << '\n';
  for (const auto& [k, v] : lines) out << k << ": " << v << '\n';
  out << "exit: " << exit_code << '\n';
  if (timing) out << "wall_ms: " << wall_ms << '\n';
}

void RunReport::write_json(std::ostream& out, bool timing) const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["lines"] = nlohmann::ordered_json::array();
  for (const auto& [k, v] : lines) j["lines"].push_back({k, v});
  j["files"] = files;
  j["exit"] = exit_code;
  if (timing) j["wall_ms"] = wall_ms;
  out << j.dump(2) << '\n';
}

std::int64_t budget_from_env(std::int64_t fallback) {
  if (const char* env = std::getenv("STARB_BUDGET_MS"))
    if (auto v = parse_int(env); v && *v > 0) return *v;
  return fallback;
}

RunReport cmd_construct(const ConstructOptions& opts) {
  return guarded("construct " + opts.kind, [&](RunReport& r) {
    auto out = opts.out;
    auto positional = opts.args;
    if (opts.kind == "hadamard" || opts.kind == "conference") {
      if (positional.empty()) throw std::invalid_argument(opts.kind + " needs an order");
      if (positional.size() > 2) throw std::invalid_argument("too many arguments");
      if (positional.size() == 2 && out.empty()) out = positional[1];
      const auto n = require_int("order", positional[0]);
      if (opts.kind == "hadamard") {
        const auto route = hadamard_route(n);
        if (n < 1 || !route) throw std::invalid_argument("no constructible Hadamard matrix of order " + std::to_string(n));
        const auto h = hadamard_of_order(n);
        r.add("order", std::to_string(n));
        r.add("route", route->describe());
        r.add("certified", "H^T H = " + std::to_string(n) + "I");
        emit_matrix(r, h->matrix(), out);
      } else {
        const auto c = paley_conference(n);
        r.add("order", std::to_string(c.order()));
        r.add("symmetric", c.symmetric() ? "yes" : "no");
        r.add("certified", "C^T C = " + std::to_string(n) + "I");
        emit_matrix(r, c.matrix(), out);
      }
      return;
    }
    if (opts.kind == "template") {
      if (!opts.s || !opts.mu_sq) throw std::invalid_argument("template needs --s and --mu2");
      if (positional.size() > 1) throw std::invalid_argument("too many arguments");
      if (positional.size() == 1 && out.empty()) out = positional[0];
      const auto f = formula_max_order(*opts.s, *opts.mu_sq);
      r.add("s", std::to_string(*opts.s));
      r.add("mu2", std::to_string(*opts.mu_sq));
      r.add("formula", f.verdict_string());
      r.add("provenance", f.provenance_string());
      r.add("plan", f.witness_plan->describe());
      r.add("k", std::to_string(f.witness->k()));
      r.add("certified", "B^T B = " + std::to_string(*opts.mu_sq) + "I");
      emit_matrix(r, f.witness->b, out);
      return;
    }
    if (opts.kind == "named") {
      if (positional.empty()) throw std::invalid_argument("named needs a family id (see catalog --list)");
      const auto id = positional.front();
      std::vector<std::int64_t> params;
      for (std::size_t i = 1; i < positional.size(); ++i) {
        if (auto v = parse_int(positional[i])) {
          params.push_back(*v);
        } else if (i + 1 == positional.size() && out.empty()) {
          out = positional[i];
        } else {
          throw std::invalid_argument("parameter '" + positional[i] + "' is not an integer");
        }
      }
      const auto g = build_named(id, params);
      std::size_t negative = 0;
      for (const auto& e : g.edges()) negative += e.sign < 0;
      r.add("family", id);
      r.add("vertices", std::to_string(g.order()));
      r.add("edges", std::to_string(g.edge_count()));
      r.add("negative_edges", std::to_string(negative));
      r.add("components", std::to_string(g.components().size()));
      r.add("srg", srg_text(srg_check(g)));
      emit_graph(r, g, out);
      return;
    }
    throw std::invalid_argument("unknown kind '" + opts.kind + "' (hadamard, conference, template, named)");
  });
}

RunReport cmd_maxorder(const MaxOrderOptions& opts) {
  return guarded("maxorder", [&](RunReport& r) {
    const auto f = formula_max_order(opts.s, opts.mu_sq);
    r.add("s", std::to_string(opts.s));
    r.add("mu2", std::to_string(opts.mu_sq));
    r.add("mu", mu_text(opts.mu_sq));
    r.add("formula", f.verdict_string());
    r.add("provenance", f.provenance_string());
    r.add("plan", f.witness_plan->describe());
    r.add("witness_k", std::to_string(f.witness->k()));
    if (!opts.oracle) return;
    const auto o = brute_force_max_order(opts.s, opts.mu_sq, oracle_options(opts.budget_ms, opts.column_budget, opts.threads));
    r.add("oracle", oracle_text(o));
    r.add("oracle_k", std::to_string(o.k));
    r.add("columns", std::to_string(o.column_count));
    const auto a = compare(f, o);
    r.add("agreement", to_string(a));
    if (a == Agreement::Disagree) r.fail(kFailure);
    if (a == Agreement::Undecided) r.fail(kBudget);
  });
}

RunReport cmd_search(const SearchOptions& opts) {
  return guarded("search", [&](RunReport& r) {
    const auto o = brute_force_max_order(opts.s, opts.mu_sq, oracle_options(opts.budget_ms, opts.column_budget, opts.threads));
    r.add("s", std::to_string(opts.s));
    r.add("mu2", std::to_string(opts.mu_sq));
    r.add("columns", std::to_string(o.column_count));
    r.add("k", std::to_string(o.k));
    r.add("n", std::to_string(o.n));
    r.add("exact", o.exact ? "yes" : "no (time budget exhausted, n is a lower bound)");
    r.add("nodes", std::to_string(o.nodes));
    r.add("witness", verify_template(o.witness) ? "valid" : "INVALID");
    if (!verify_template(o.witness)) r.fail(kFailure);
    if (!opts.emit_witness.empty()) emit_matrix(r, o.witness.b, opts.emit_witness);
    if (!o.exact) r.fail(kBudget);
  });
}

RunReport cmd_verify(const VerifyOptions& opts) {
  return guarded("verify", [&](RunReport& r) {
    std::ifstream file(opts.path);
    if (!file) throw std::runtime_error("cannot read '" + opts.path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    const auto text = buffer.str();
    const auto format = opts.format == "auto" ? detect_format(text) : opts.format;
    std::istringstream in(text);
    r.add("path", opts.path);
    r.add("format", format);

    if (format == "edges") {
      const auto g = read_edge_list(in);
      r.add("vertices", std::to_string(g.order()));
      r.add("edges", std::to_string(g.edge_count()));
      r.add("srg", srg_text(srg_check(g)));
      const auto split = opts.s ? std::optional<std::size_t>(static_cast<std::size_t>(*opts.s)) : bipartite_split(g);
      if (!split) {
        r.add("bipartite", "no");
        return;
      }
      const auto b = bipartite_block(g, *split);
      const auto mu_sq = opts.mu_sq ? *opts.mu_sq : (b.cols() ? (b.transpose() * b)(0, 0) : 0);
      report_template(r, {b, mu_sq});
      return;
    }
    if (format != "sign" && format != "int") throw std::invalid_argument("unknown format '" + format + "'");
    auto b = format == "sign" ? read_sign_matrix(in) : read_int_matrix(in);
    if (opts.s && static_cast<std::size_t>(*opts.s) != b.rows()) {
      if (static_cast<std::size_t>(*opts.s) < b.rows())
        throw std::invalid_argument("--s is smaller than the matrix row count");
      b = b.pad_rows(static_cast<std::size_t>(*opts.s) - b.rows());
    }
    const auto mu_sq = opts.mu_sq ? *opts.mu_sq : (b.cols() ? (b.transpose() * b)(0, 0) : 0);
    report_template(r, {b, mu_sq});
  });
}

RunReport cmd_reproduce(const ReproduceOptions& opts) {
  return guarded("reproduce", [&](RunReport& r) {
    const auto cells = parse_grid(opts.grid);
    if (!cells) throw std::invalid_argument("unknown grid '" + opts.grid + "' (default, huge, s<=N)");
    const auto oracle = oracle_options(opts.budget_ms, opts.column_budget, 1);
    r.add("grid", opts.grid);
    r.add("cells", std::to_string(cells->size()));
    for (const auto& c : *cells)
      if (column_count(c.s, c.mu_sq) > oracle.column_budget)
        throw BudgetExceeded("cell s=" + std::to_string(c.s) + " mu2=" + std::to_string(c.mu_sq) + " needs " +
                             std::to_string(column_count(c.s, c.mu_sq)) + " columns, budget " +
                             std::to_string(oracle.column_budget));

    struct Outcome {
      MaxOrderResult formula;
      OracleResult oracle;
      Agreement agreement = Agreement::Undecided;
    };
    std::vector<Outcome> outcomes(cells->size());
    const int team = opts.threads > 0 ? opts.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(team)
    for (std::size_t i = 0; i < cells->size(); ++i) {
      const auto [s, m] = (*cells)[i];
      outcomes[i].formula = formula_max_order(s, m);
      outcomes[i].oracle = brute_force_max_order(s, m, oracle);
      outcomes[i].agreement = compare(outcomes[i].formula, outcomes[i].oracle);
    }

    std::size_t disagree = 0, undecided = 0, witness_failures = 0;
    std::map<std::string, std::size_t> clauses;
    for (std::size_t i = 0; i < cells->size(); ++i) {
      const auto& [f, o, a] = outcomes[i];
      r.add("cell", "mu2=" + std::to_string(f.mu_sq) + " s=" + std::to_string(f.s) + " formula=" + f.verdict_string() +
                        " oracle=" + oracle_text(o) + " " + to_string(a));
      disagree += a == Agreement::Disagree;
      undecided += a == Agreement::Undecided;
      if (!verify_template(*f.witness) || !verify_template(o.witness)) ++witness_failures;
      for (const auto& p : f.provenance) {
        // Group clause labels by their leading words, dropping parameters.
        const auto cut = p.find_first_of("=");
        const auto head = cut == std::string::npos ? p : p.substr(0, p.rfind(' ', cut));
        ++clauses[head];
      }
    }
    for (const auto& [clause, count] : clauses) r.add("clause", clause + ": " + std::to_string(count));

    std::size_t iso_failures = 0;
    for (const auto& check : kNamedChecks) {
      if (std::none_of(cells->begin(), cells->end(),
                       [&](const GridCell& c) { return c.s == check.s && c.mu_sq == check.mu_sq; }))
        continue;
      const auto witness = assemble_graph(*formula_max_order(check.s, check.mu_sq).witness);
      const auto named = build_named(check.id);
      const bool iso = switching_isomorphic(witness, named).has_value();
      iso_failures += !iso;
      r.add("named", "mu2=" + std::to_string(check.mu_sq) + " s=" + std::to_string(check.s) + " " + check.id + " " +
                         (iso ? "switching isomorphic" : "NOT switching isomorphic (witness has " +
                                                             std::to_string(witness.edge_count()) + " edges, named graph " +
                                                             std::to_string(named.edge_count()) + ")"));
    }

    r.add("disagreements", std::to_string(disagree));
    r.add("undecided", std::to_string(undecided));
    r.add("witness_failures", std::to_string(witness_failures));
    r.add("isomorphism_failures", std::to_string(iso_failures));
    const auto failures = disagree + witness_failures + iso_failures;
    r.add("failures", std::to_string(failures));
    if (failures) r.fail(kFailure);
    if (undecided) r.fail(kBudget);
  });
}

RunReport cmd_iso(const IsoOptions& opts) {
  return guarded("iso", [&](RunReport& r) {
    auto load = [](const std::string& path) {
      std::ifstream in(path);
      if (!in) throw std::runtime_error("cannot read '" + path + "'");
      return read_edge_list(in);
    };
    const auto g1 = load(opts.first);
    const auto g2 = load(opts.second);
    r.add("first", opts.first + " (" + std::to_string(g1.order()) + " vertices, " + std::to_string(g1.edge_count()) + " edges)");
    r.add("second", opts.second + " (" + std::to_string(g2.order()) + " vertices, " + std::to_string(g2.edge_count()) +
                        " edges)");
    const auto verdict = switching_equivalence(g1, g2);
    r.add("verdict", to_string(verdict));
    if (verdict == Equivalence::Isomorphic) {
      const auto cert = switching_isomorphic(g1, g2);
      std::string perm, signs;
      for (std::size_t u = 0; u < cert->perm.size(); ++u) {
        perm += (u ? " " : "") + std::to_string(cert->perm[u]);
        signs += (u ? " " : "") + std::string(cert->signs[u] > 0 ? "+" : "-");
      }
      r.add("perm", perm);
      r.add("signs", signs);
    }
    if (verdict == Equivalence::NotIsomorphic) r.fail(kFailure);
  });
}

RunReport cmd_catalog_list() {
  return guarded("catalog --list", [](RunReport& r) {
    for (const auto& f : list_families())
      r.add("family", f.id + (f.params.empty() ? "" : " [" + f.params + "]") + " - " + f.description);
  });
}

}  // namespace starb::cli
