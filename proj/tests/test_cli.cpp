#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "starb/catalog.hpp"
#include "starb/cli.hpp"

using namespace starb::cli;
namespace fs = std::filesystem;

namespace {

std::string value_of(const RunReport& r, const std::string& key) {
  for (const auto& [k, v] : r.lines)
    if (k == key) return v;
  return "";
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "starb_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("maxorder with oracle agrees") {
    MaxOrderOptions o;
    o.s = 4;
    o.mu_sq = 4;
    o.oracle = true;
    const auto r = cmd_maxorder(o);
    CHECK(r.exit_code == kOk);
    CHECK(value_of(r, "formula") == "Exact 8");
    CHECK(value_of(r, "oracle") == "8");
    CHECK(value_of(r, "agreement") == "AGREE");
  }

  TEST_CASE("maxorder reports disagreement and input errors") {
    MaxOrderOptions o;
    o.s = 7;
    o.mu_sq = 3;
    o.oracle = true;
    const auto r = cmd_maxorder(o);
    CHECK(value_of(r, "agreement") == "DISAGREE");
    CHECK(r.exit_code == kFailure);
    o.s = 2;
    CHECK(cmd_maxorder(o).exit_code == kInputError);
    o.s = 9;
    o.mu_sq = 8;
    o.oracle = false;
    CHECK(value_of(cmd_maxorder(o), "formula") == "Exact 17");
  }

  TEST_CASE("construct and verify round trip") {
    const auto path = scratch("h12.mat").string();
    ConstructOptions c;
    c.kind = "hadamard";
    c.args = {"12", path};
    const auto r = cmd_construct(c);
    CHECK(r.exit_code == kOk);
    CHECK(value_of(r, "certified") == "H^T H = 12I");
    VerifyOptions v;
    v.path = path;
    const auto rv = cmd_verify(v);
    CHECK(rv.exit_code == kOk);
    CHECK(value_of(rv, "template") == "valid");
    CHECK(value_of(rv, "spectrum") == "mu^12 0^0 (-mu)^12");
    c.args = {"6"};
    CHECK(cmd_construct(c).exit_code == kInputError);
  }

  TEST_CASE("construct template and named graph") {
    ConstructOptions t;
    t.kind = "template";
    t.s = 6;
    t.mu_sq = 5;
    const auto r = cmd_construct(t);
    CHECK(r.exit_code == kOk);
    CHECK(value_of(r, "k") == "6");
    const auto path = scratch("br.el").string();
    ConstructOptions n;
    n.kind = "named";
    n.args = {"BR_signed", path};
    CHECK(cmd_construct(n).exit_code == kOk);
    VerifyOptions v;
    v.path = path;
    const auto rv = cmd_verify(v);
    CHECK(value_of(rv, "format") == "edges");
    CHECK(value_of(rv, "template") == "valid");
    CHECK(value_of(rv, "srg") == "SRG(12,5,0,0,0)");
    n.args = {"K2s_negK1s", "6", "2"};
    CHECK(value_of(cmd_construct(n), "vertices") == "10");
  }

  TEST_CASE("verify reports parse errors with line numbers") {
    const auto path = scratch("bad.mat");
    write_file(path, "++++\n+-+-\n++x-\n");
    VerifyOptions v;
    v.path = path.string();
    const auto r = cmd_verify(v);
    CHECK(r.exit_code == kInputError);
    CHECK(value_of(r, "error").find("line 3") != std::string::npos);
    v.path = scratch("missing.mat").string();
    CHECK(cmd_verify(v).exit_code == kInputError);
  }

  TEST_CASE("verify names non-orthogonal columns") {
    const auto path = scratch("dup.mat");
    write_file(path, "+++++\n+-+--\n++--+\n+--+-\n");
    VerifyOptions v;
    v.path = path.string();
    v.mu_sq = 4;
    const auto r = cmd_verify(v);
    CHECK(r.exit_code == kFailure);
    bool found = false;
    for (const auto& [k, val] : r.lines) found |= k == "violation" && val.starts_with("columns 2,5 not orthogonal");
    CHECK(found);
  }

  TEST_CASE("search writes a witness") {
    const auto path = scratch("w.mat").string();
    SearchOptions s;
    s.s = 6;
    s.mu_sq = 5;
    s.emit_witness = path;
    const auto r = cmd_search(s);
    CHECK(r.exit_code == kOk);
    CHECK(value_of(r, "n") == "12");
    VerifyOptions v;
    v.path = path;
    CHECK(value_of(cmd_verify(v), "template") == "valid");
    s.s = 25;
    s.mu_sq = 12;
    s.emit_witness.clear();
    CHECK(cmd_search(s).exit_code == kBudget);
  }

  TEST_CASE("reproduce grids") {
    ReproduceOptions o;
    o.grid = "huge";
    CHECK(cmd_reproduce(o).exit_code == kBudget);
    o.grid = "nonsense";
    CHECK(cmd_reproduce(o).exit_code == kInputError);
    o.grid = "s<=5";
    const auto r = cmd_reproduce(o);
    CHECK(value_of(r, "cells") == "15");
    CHECK(value_of(r, "disagreements") == "0");
  }

  TEST_CASE("reports are deterministic and mirrored in json") {
    ReproduceOptions o;
    o.grid = "s<=4";
    std::ostringstream a, b;
    cmd_reproduce(o).write_text(a, false);
    o.threads = 1;
    cmd_reproduce(o).write_text(b, false);
    CHECK(a.str() == b.str());
    std::ostringstream js;
    const auto r = cmd_reproduce(o);
    r.write_json(js, false);
    const auto j = nlohmann::json::parse(js.str());
    CHECK(j["command"] == "reproduce");
    CHECK(j["lines"].size() == r.lines.size());
    CHECK(j["exit"] == r.exit_code);
  }

  TEST_CASE("iso") {
    const auto p1 = scratch("c4a.el"), p2 = scratch("c4b.el"), p3 = scratch("c4c.el");
    write_file(p1, "4 4\n0 1 +\n1 2 +\n2 3 +\n0 3 -\n");
    write_file(p2, "4 4\n0 2 -\n2 1 -\n1 3 -\n0 3 +\n");
    write_file(p3, "4 4\n0 1 +\n1 2 +\n2 3 +\n0 3 +\n");
    const auto yes = cmd_iso({p1.string(), p2.string()});
    CHECK(yes.exit_code == kOk);
    CHECK(value_of(yes, "verdict") == "isomorphic");
    CHECK_FALSE(value_of(yes, "perm").empty());
    CHECK(cmd_iso({p1.string(), p3.string()}).exit_code == kFailure);
  }

  TEST_CASE("catalog list") {
    const auto r = cmd_catalog_list();
    CHECK(r.lines.size() == starb::list_families().size());
    CHECK(r.lines.front().second.starts_with("sK2"));
  }

  TEST_CASE("exit codes only escalate to failure") {
    RunReport r;
    r.fail(kBudget);
    CHECK(r.exit_code == kBudget);
    r.fail(kFailure);
    CHECK(r.exit_code == kFailure);
    r.fail(kInputError);
    CHECK(r.exit_code == kFailure);
  }
}
