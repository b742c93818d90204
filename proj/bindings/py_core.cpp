#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>

#include "gcwe/config.hpp"
#include "gcwe/genetic_code.hpp"
#include "gcwe/misread.hpp"
#include "gcwe/pipeline.hpp"
#include "gcwe/qlimit.hpp"

namespace py = pybind11;
using namespace gcwe;

namespace {

Codon parse_codon(const std::string& text) {
  const auto codon = Codon::parse(text);
  if (!codon) throw std::invalid_argument("bad codon: " + text);
  return *codon;
}

HalfInt parse_half(const std::string& text) {
  const auto h = HalfInt::parse(text);
  if (!h) throw std::invalid_argument("bad half-integer: " + text);
  return *h;
}

CoupleOrder parse_order(const std::string& name) {
  const auto order = couple_order_from(name);
  if (!order) throw std::invalid_argument("bad order: " + name);
  return *order;
}

Base parse_base(const std::string& text) {
  const auto b = text.size() == 1 ? base_from_char(text[0]) : std::nullopt;
  if (!b) throw std::invalid_argument("bad nucleotide: " + text);
  return *b;
}

py::dict labels_dict(const CodonLabel& label) {
  py::dict out;
  out["JH"] = label.JH.str();
  out["JV"] = label.JV.str();
  out["mH"] = label.mH.str();
  out["mV"] = label.mV.str();
  return out;
}

py::dict we_dict(const WEResult& r) {
  py::dict out;
  out["JH"] = r.JH.str();
  out["JV"] = r.JV.str();
  out["mH"] = r.mH.str();
  out["mV"] = r.mV.str();
  return out;
}

PipelineConfig config_from_text(const std::string& text) {
  return text.empty() ? PipelineConfig{} : parse_config(text);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "crystal-basis genetic code toolkit (C++ core)";

  m.def("codon_labels", [](const std::string& codon) {
    return labels_dict(codon_labels(parse_codon(codon)));
  });

  m.def(
      "couple",
      [](const std::string& j1, const std::string& m1, const std::string& j2,
         const std::string& m2, const std::string& order) {
        const auto c = couple(parse_half(j1), parse_half(m1), parse_half(j2),
                              parse_half(m2), parse_order(order));
        return py::make_tuple(c.J.str(), c.m.str());
      },
      py::arg("j1"), py::arg("m1"), py::arg("j2"), py::arg("m2"),
      py::arg("order") = "state_first");

  m.def("amino_acid", [](const std::string& codon, const std::string& code) {
    if (code != "VMC" && code != "SUC") throw std::invalid_argument("code must be VMC or SUC");
    return std::string(amino_acid(parse_codon(codon), code == "VMC" ? Code::VMC : Code::SUC));
  });

  m.def("table_rows", [] {
    py::list rows;
    for (const auto& row : codon_table().rows()) {
      py::dict d = labels_dict(row.label);
      d["codon"] = row.codon.str();
      d["aa_vmc"] = std::string(amino_acid(row.codon, Code::VMC));
      d["aa_suc"] = std::string(amino_acid(row.codon, Code::SUC));
      d["copyH"] = row.copy_h_ordinal;
      d["copyV"] = row.copy_v_ordinal;
      rows.append(d);
    }
    return rows;
  });

  m.def("table_check", [] {
    const auto diff = codon_table().diff_against_reference();
    py::dict out;
    out["label_mismatches"] = diff.label_mismatches;
    out["partitions_match"] = diff.partitions_match;
    out["clean"] = diff.clean();
    return out;
  });

  m.def(
      "check",
      [](const std::string& codon, int pos, const std::string& to,
         const std::string& config) {
        const Codon c = parse_codon(codon);
        const PipelineConfig cfg = config_from_text(config);
        const MisreadSpec spec(pos, c.at(pos), parse_base(to));
        const auto res = allowed(c, spec, cfg.ranks, cfg.order);
        py::dict out;
        out["allowed"] = res.allowed;
        out["predicted"] = we_dict(res.predicted);
        out["target"] = substitute(c, spec).str();
        out["target_labels"] = labels_dict(res.target);
        out["operator"] = res.op.str();
        out["copies_match"] = res.copies_match;
        return out;
      },
      py::arg("codon"), py::arg("pos"), py::arg("to"), py::arg("config") = "");

  m.def(
      "check_double",
      [](const std::string& codon, int pos1, const std::string& to1, int pos2,
         const std::string& to2, const std::string& config) {
        const Codon c = parse_codon(codon);
        const PipelineConfig cfg = config_from_text(config);
        const MisreadSpec s1(pos1, c.at(pos1), parse_base(to1));
        const MisreadSpec s2(pos2, substitute(c, s1).at(pos2), parse_base(to2));
        const auto res = allowed_double(c, s1, s2, cfg.ranks, cfg.order);
        py::dict out;
        out["allowed"] = res.allowed;
        out["virtual_codon"] = res.virtual_codon.str();
        out["virtual_labels"] = we_dict(res.virtual_labels);
        out["predicted"] = we_dict(res.predicted);
        out["target"] = res.target_codon.str();
        out["target_labels"] = labels_dict(res.target);
        return out;
      },
      py::arg("codon"), py::arg("pos1"), py::arg("to1"), py::arg("pos2"),
      py::arg("to2"), py::arg("config") = "");

  m.def(
      "run_pipeline",
      [](const std::string& config) {
        const auto result = run_pipeline(config_from_text(config));
        py::dict out;
        py::dict census;
        for (const auto& [size, n] : result.census) {
          census[py::int_(size)] = n;
        }
        out["census"] = census;
        py::list multiplets;
        for (const auto& m : result.partition.multiplets()) {
          py::list codons;
          for (const auto& c : m.codons) codons.append(c.str());
          py::dict d;
          d["codons"] = codons;
          d["formed_at_level"] = m.formed_at_level;
          multiplets.append(d);
        }
        out["multiplets"] = multiplets;
        py::list accepted;
        for (const auto& ev : result.events) {
          if (!ev.accepted) continue;
          py::dict d;
          d["level"] = ev.level;
          d["stage"] = ev.stage;
          d["source"] = ev.source.str();
          d["target"] = ev.target.str();
          d["reason"] = ev.reason;
          accepted.append(d);
        }
        out["accepted_events"] = accepted;
        return out;
      },
      py::arg("config") = "");

  m.def(
      "limit_checks",
      [](double q, int max_x, const std::string& max_j) {
        const auto report = qlimit::limit_checks(qlimit::QValue(q), max_x, parse_half(max_j));
        py::list entries;
        for (const auto& e : report.entries) {
          py::dict d;
          d["quantity"] = e.quantity;
          d["ratio"] = e.ratio;
          d["deviation"] = e.deviation;
          entries.append(d);
        }
        py::dict out;
        out["q"] = report.q;
        out["entries"] = entries;
        out["max_deviation"] = report.max_deviation();
        return out;
      },
      py::arg("q"), py::arg("max_x") = 4, py::arg("max_j") = "2");

  m.def("q_number", [](double x, double q) { return qlimit::q_number(x, qlimit::QValue(q)); });

  m.def("default_config", [] { return config_to_string(PipelineConfig{}); });
}
