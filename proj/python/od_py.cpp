#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "od/chain.hpp"
#include "od/enumerate.hpp"
#include "od/order.hpp"
#include "od/qpart.hpp"
#include "od/selftest.hpp"
#include "od/textio.hpp"
#include "od/validity.hpp"

namespace py = pybind11;

namespace {

od::Term parse(const std::string& s) { return od::parse_term({s}); }

py::dict report_dict(const od::ValidityReport& rep) {
  py::list checks;
  for (const auto& c : rep.checks) {
    py::dict entry;
    entry["label"] = c.label;
    entry["passed"] = c.passed;
    entry["detail"] = c.detail;
    checks.append(entry);
  }
  py::dict out;
  out["subject"] = rep.subject.empty() ? "" : od::print_term(rep.subject);
  out["checks"] = checks;
  out["valid"] = rep.valid;
  return out;
}

}  // namespace

PYBIND11_MODULE(_odpi, m) {
  m.doc() = "ordinal diagram toolkit";

  py::register_exception<od::error>(m, "OdError");

  m.def("normalize", [](const std::string& s) { return od::print_term(parse(s)); },
        "parse a spelling and return its canonical form");

  m.def("cmp", [](const std::string& a, const std::string& b) {
    return std::string(od::to_string(od::cmp(parse(a), parse(b))));
  });

  m.def("classify", [](const std::string& s) {
    od::ClassFlags f = od::classify(parse(s));
    py::dict out;
    out["P"] = f.in_p;
    out["SC"] = f.in_sc;
    out["R"] = f.in_r;
    return out;
  });

  m.def("validate", [](const std::string& s, int n_levels) {
    return report_dict(od::check_term(parse(s), n_levels));
  }, py::arg("term"), py::arg("n") = 4);

  m.def("qpart", [](const std::string& s) {
    od::Term t = parse(s);
    py::dict out;
    py::list active;
    for (int i : od::in_set(t)) active.append(i);
    out["in"] = active;
    py::dict levels;
    if (!t.quads().empty()) {
      for (int i = 2; i <= t.quads().back().level; ++i) {
        od::QView v = od::derive(t, i);
        py::dict entry;
        entry["pd"] = od::print_term(v.pd);
        entry["active"] = v.defined_in;
        if (v.st) {
          entry["st"] = od::print_term(*v.st);
          entry["rg"] = od::print_term(*v.rg);
        }
        levels[py::int_(i)] = entry;
      }
    }
    out["levels"] = levels;
    return out;
  });

  m.def("enumerate", [](int max_size, int n_levels, long count_cap) {
    od::EnumConfig cfg;
    cfg.max_size = max_size;
    cfg.n_levels = n_levels;
    cfg.count_cap = count_cap;
    std::vector<std::string> out;
    for (const od::Term& t : od::enumerate_valid(cfg).terms) out.push_back(od::print_term(t));
    return out;
  }, py::arg("max_size") = 4, py::arg("n") = 4, py::arg("count_cap") = 200000);

  m.def("chain_synth", [](const std::string& descriptor) {
    od::DescriptorFile file = od::parse_descriptor({descriptor, "<python>"});
    auto [rho, rep] = od::synth(file.desc, file.inputs);
    py::dict out = report_dict(rep);
    out["synthesized"] = od::print_term(rho);
    return out;
  });

  m.def("chain_verify", [](const std::string& descriptor) {
    od::DescriptorFile file = od::parse_descriptor({descriptor, "<python>"});
    return report_dict(od::verify_rope_laws(file.desc));
  });

  m.def("selftest", [](std::uint64_t seed, int n_levels) {
    py::list out;
    for (const od::SuiteResult& r : od::run_selftest(seed, n_levels)) {
      py::dict entry;
      entry["name"] = r.name;
      entry["passed"] = r.passed;
      entry["detail"] = r.detail;
      out.append(entry);
    }
    return out;
  }, py::arg("seed") = 1, py::arg("n") = 4);
}
