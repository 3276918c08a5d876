#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "od/chain.hpp"
#include "od/enumerate.hpp"
#include "od/order.hpp"
#include "od/qpart.hpp"
#include "od/selftest.hpp"
#include "od/textio.hpp"
#include "od/validity.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;

json report_to_json(const od::ValidityReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks)
    checks.push_back({{"label", c.label}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"subject", rep.subject.empty() ? "" : od::print_term(rep.subject)},
          {"checks", checks},
          {"valid", rep.valid}};
}

void print_report(const od::ValidityReport& rep, bool as_json, std::ostream& out) {
  if (as_json) {
    out << report_to_json(rep).dump(2) << "\n";
    return;
  }
  out << "subject: " << (rep.subject.empty() ? "-" : od::print_term(rep.subject)) << "\n";
  for (const auto& c : rep.checks) {
    out << "  " << (c.passed ? "pass" : "FAIL") << "  " << c.label;
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << "\n";
  }
  out << (rep.valid ? "valid" : "invalid") << "\n";
}

od::SourceText read_desc_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw od::error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return {ss.str(), path};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ordinal diagram toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false;
  int n_levels = 4;
  app.add_flag("--json", as_json, "machine-readable output");
  app.add_option("--n", n_levels, "level count N (at least 4)")->capture_default_str();

  std::string term_arg, lhs_arg, rhs_arg, desc_path;
  int max_size = 5;
  long count_cap = 200000;
  std::uint64_t seed = 1;

  auto* validate = app.add_subcommand("validate", "check a diagram against every condition");
  validate->add_option("term", term_arg, "diagram spelling")->required();

  auto* cmp_cmd = app.add_subcommand("cmp", "compare two diagrams");
  cmp_cmd->add_option("lhs", lhs_arg)->required();
  cmp_cmd->add_option("rhs", rhs_arg)->required();

  auto* enum_cmd = app.add_subcommand("enum", "stream valid diagrams by size");
  enum_cmd->add_option("--max-size", max_size)->capture_default_str();
  enum_cmd->add_option("--count-cap", count_cap)->capture_default_str();

  auto* qpart_cmd = app.add_subcommand("qpart", "show In and per-level pd/st/rg");
  qpart_cmd->add_option("term", term_arg)->required();

  auto* synth_cmd = app.add_subcommand("chain-synth", "synthesize a collapse over a rope");
  synth_cmd->add_option("--desc", desc_path, "descriptor file")->required();

  auto* verify_cmd = app.add_subcommand("chain-verify", "check the rope laws of a descriptor");
  verify_cmd->add_option("--desc", desc_path, "descriptor file")->required();

  auto* selftest_cmd = app.add_subcommand("selftest", "run the property suites");
  selftest_cmd->add_option("--seed", seed)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (n_levels < 4) throw od::error("N must be at least 4");

    if (validate->parsed()) {
      od::Term t = od::parse_term({term_arg});
      od::ValidityReport rep = od::check_term(t, n_levels);
      print_report(rep, as_json, std::cout);
      return rep.valid ? kExitOk : kExitFalsified;
    }

    if (cmp_cmd->parsed()) {
      od::Term a = od::parse_term({lhs_arg});
      od::Term b = od::parse_term({rhs_arg});
      const char* result = od::to_string(od::cmp(a, b));
      if (as_json)
        std::cout << json{{"result", result}}.dump() << "\n";
      else
        std::cout << result << "\n";
      return kExitOk;
    }

    if (enum_cmd->parsed()) {
      od::EnumConfig cfg;
      cfg.n_levels = n_levels;
      cfg.max_size = max_size;
      cfg.count_cap = count_cap;
      od::EnumResult res = od::enumerate_valid(cfg);
      if (as_json) {
        json terms = json::array();
        for (const od::Term& t : res.terms) terms.push_back(od::print_term(t));
        std::cout << json{{"terms", terms}, {"truncated", res.truncated}}.dump(2) << "\n";
      } else {
        for (const od::Term& t : res.terms) std::cout << od::print_term(t) << "\n";
        if (res.truncated) std::cerr << "warning: output truncated at count cap\n";
      }
      return kExitOk;
    }

    if (qpart_cmd->parsed()) {
      od::Term t = od::parse_term({term_arg});
      if (!t.is(od::Kind::D)) throw od::error("qpart needs a collapse");
      json levels = json::object();
      std::ostringstream text;
      auto in = od::in_set(t);
      text << "In = {";
      bool first = true;
      for (int i : in) {
        text << (first ? "" : ",") << i;
        first = false;
      }
      text << "}\n";
      if (!t.quads().empty()) {
        for (int i = 2; i <= t.quads().back().level; ++i) {
          od::QView v = od::derive(t, i);
          json entry = {{"pd", od::print_term(v.pd)}, {"in", v.defined_in}};
          text << "  i=" << i << ": pd=" << od::print_term(v.pd);
          if (v.st) {
            entry["st"] = od::print_term(*v.st);
            entry["rg"] = od::print_term(*v.rg);
            text << " st=" << od::print_term(*v.st) << " rg=" << od::print_term(*v.rg);
          } else {
            text << " st=undefined rg=undefined";
          }
          text << (v.defined_in ? " [active]" : "") << "\n";
          levels[std::to_string(i)] = entry;
        }
      }
      if (as_json) {
        std::cout << json{{"subject", od::print_term(t)},
                          {"in", std::vector<int>(in.begin(), in.end())},
                          {"levels", levels}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << text.str();
      }
      return kExitOk;
    }

    if (synth_cmd->parsed()) {
      od::DescriptorFile file = od::parse_descriptor(read_desc_file(desc_path));
      auto [rho, rep] = od::synth(file.desc, file.inputs);
      if (as_json) {
        json out = report_to_json(rep);
        out["synthesized"] = od::print_term(rho);
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << "synthesized: " << od::print_term(rho) << "\n";
        print_report(rep, false, std::cout);
      }
      return rep.valid ? kExitOk : kExitFalsified;
    }

    if (verify_cmd->parsed()) {
      od::DescriptorFile file = od::parse_descriptor(read_desc_file(desc_path));
      od::ValidityReport rep = od::verify_rope_laws(file.desc);
      print_report(rep, as_json, std::cout);
      return rep.valid ? kExitOk : kExitFalsified;
    }

    if (selftest_cmd->parsed()) {
      if (const char* env = std::getenv("OD_SEED")) seed = std::strtoull(env, nullptr, 10);
      bool all_ok = true;
      json results = json::array();
      for (const od::SuiteResult& r : od::run_selftest(seed, n_levels)) {
        all_ok = all_ok && r.passed;
        if (as_json)
          results.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        else
          std::cout << (r.passed ? "pass" : "FAIL") << "  " << r.name << "  (" << r.detail
                    << ")\n";
      }
      if (as_json) std::cout << results.dump(2) << "\n";
      return all_ok ? kExitOk : kExitFalsified;
    }
  } catch (const od::parse_error& e) {
    std::cerr << "parse error at " << e.line << ":" << e.col << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const od::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
