// Python surface: thin, text-based wrappers over the core operations. File
// payloads go in and out as strings in the same formats the CLI uses, so the
// module and the binary are interchangeable in pipelines.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "tripoints/arrange.hpp"
#include "tripoints/gf.hpp"
#include "tripoints/realize.hpp"
#include "tripoints/triples.hpp"

namespace py = pybind11;
using namespace tripoints;

namespace {

Field field_of(int p, int n, const std::vector<int>& modulus) {
  return modulus.empty() ? Field(p, n) : Field(p, n, modulus);
}

Arrangement arrangement_from_text(const std::string& text) {
  std::istringstream in(text);
  return read_arrangement(in);
}

TripleSystem triples_from_text(const std::string& text) {
  std::istringstream in(text);
  return read_triple_system(in);
}

std::string triples_to_text(const TripleSystem& ts) {
  std::ostringstream out;
  write_triple_system(out, ts);
  return out.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "cuspidal-cubic line arrangements, their matroids, and realizability";

  m.def(
      "build",
      [](const std::string& construction, int p, int n, const std::vector<int>& modulus) {
        Field f = field_of(p, n, modulus);
        Arrangement a = construction == "char3"   ? build_char3(f)
                        : construction == "char2" ? build_char2(f)
                                                  : build_generic(f);
        std::ostringstream out;
        write_arrangement(out, a);
        return out.str();
      },
      py::arg("construction"), py::arg("p"), py::arg("n"),
      py::arg("modulus") = std::vector<int>{},
      "Arrangement file text for construction 'char3' | 'char2' | 'generic'");

  m.def(
      "audit",
      [](const std::string& arrangement_text, bool with_points) {
        Arrangement a = arrangement_from_text(arrangement_text);
        return audit_report(a, audit(a), with_points);
      },
      py::arg("arrangement_text"), py::arg("with_points") = false,
      "Singularity-spectrum report text");

  m.def(
      "spectrum",
      [](const std::string& arrangement_text) {
        Arrangement a = arrangement_from_text(arrangement_text);
        SingularitySpectrum s = audit(a);
        std::map<int, int64_t> out(s.counts().begin(), s.counts().end());
        return out;
      },
      py::arg("arrangement_text"), "Map multiplicity k -> t_k");

  m.def(
      "dual_points",
      [](const std::string& arrangement_text) {
        Arrangement a = arrangement_from_text(arrangement_text);
        std::ostringstream out;
        write_points(out, a.field(), dual_points(a));
        return out.str();
      },
      py::arg("arrangement_text"), "Points file text of the lines' dual points");

  m.def(
      "extract_triples",
      [](const std::string& arrangement_text) {
        Arrangement a = arrangement_from_text(arrangement_text);
        return triples_to_text(from_arrangement(a, audit(a)));
      },
      py::arg("arrangement_text"), "Triple-system file text of the arrangement matroid");

  m.def(
      "make_zero_sum",
      [](int p, int n, const std::vector<int>& modulus) {
        return triples_to_text(make_zero_sum_triples(field_of(p, n, modulus)));
      },
      py::arg("p"), py::arg("n"), py::arg("modulus") = std::vector<int>{});

  m.def(
      "make_sum",
      [](int p, int n, const std::vector<int>& modulus) {
        return triples_to_text(make_sum_triples(field_of(p, n, modulus)));
      },
      py::arg("p"), py::arg("n"), py::arg("modulus") = std::vector<int>{});

  m.def(
      "make_projection", [](int n) { return triples_to_text(make_projection_matroid(n)); },
      py::arg("n"));

  m.def(
      "is_steiner",
      [](const std::string& ts_text) { return is_steiner(triples_from_text(ts_text)); },
      py::arg("ts_text"));

  m.def(
      "isomorphic",
      [](const std::string& ts_a, const std::string& ts_b) -> py::object {
        auto w = isomorphic(triples_from_text(ts_a), triples_from_text(ts_b));
        if (!w) return py::none();
        py::dict d;
        for (const auto& [a, b] : *w) d[py::int_(a)] = py::int_(b);
        return d;
      },
      py::arg("ts_a"), py::arg("ts_b"),
      "Label map as a dict, or None when not isomorphic");

  m.def(
      "automorphism_order",
      [](const std::string& ts_text) {
        return automorphism_group(triples_from_text(ts_text)).order;
      },
      py::arg("ts_text"));

  m.def(
      "restrict",
      [](const std::string& ts_text, const std::vector<int64_t>& labels) {
        return triples_to_text(restrict_to(triples_from_text(ts_text), labels));
      },
      py::arg("ts_text"), py::arg("labels"));

  m.def(
      "realize",
      [](const std::string& ts_text, int p, int n, const std::vector<int>& modulus,
         bool count_all, bool best_effort, uint64_t node_limit) {
        RealizeOptions opts;
        opts.count_all = count_all;
        opts.best_effort = best_effort;
        opts.node_limit = node_limit;
        RealizeResult res =
            realize_over(triples_from_text(ts_text), field_of(p, n, modulus), opts);
        py::dict d;
        d["status"] = realize_status_name(res.status);
        d["witness_count"] = res.witness_count;
        d["nodes"] = res.nodes;
        d["forced"] = res.forced;
        d["normalization"] = res.normalization;
        py::list ws;
        for (const auto& w : res.witnesses) {
          py::dict wd;
          for (const auto& [label, point] : w.points) {
            wd[py::int_(label)] = point.str();
          }
          ws.append(wd);
        }
        d["witnesses"] = ws;
        return d;
      },
      py::arg("ts_text"), py::arg("p"), py::arg("n"),
      py::arg("modulus") = std::vector<int>{}, py::arg("count_all") = false,
      py::arg("best_effort") = false, py::arg("node_limit") = 0);

  m.def(
      "export_ideal",
      [](const std::string& ts_text, bool normalize) {
        return export_ideal(triples_from_text(ts_text), normalize);
      },
      py::arg("ts_text"), py::arg("normalize") = false);

  m.def(
      "cubic_fit",
      [](const std::string& points_text) {
        std::istringstream in(points_text);
        auto [field, pts] = read_points(in);
        py::dict d;
        py::list cubics, kinds, singular;
        auto basis = cubics_through(field, pts);
        for (const auto& c : basis) {
          cubics.append(c.str());
          if (basis.size() <= 2) {
            CubicClassification cls = classify_cubic(c);
            kinds.append(cubic_kind_name(cls.kind));
            py::list sp;
            for (const auto& q : cls.singular_points) sp.append(q.str());
            singular.append(sp);
          }
        }
        d["dim"] = basis.size();
        d["cubics"] = cubics;
        d["kinds"] = kinds;
        d["singular"] = singular;
        return d;
      },
      py::arg("points_text"));

  m.def(
      "group_add",
      [](int p, int n, uint64_t a, uint64_t b) {
        Field f(p, n);
        return group_add(f.decode(a), f.decode(b)).encode();
      },
      py::arg("p"), py::arg("n"), py::arg("a"), py::arg("b"),
      "Chord-tangent sum of two cubic parameters, by canonical encoding");

  m.def(
      "collinear_params",
      [](int p, int n, uint64_t a, uint64_t b, uint64_t c) {
        Field f(p, n);
        return collinear(f.decode(a), f.decode(b), f.decode(c));
      },
      py::arg("p"), py::arg("n"), py::arg("a"), py::arg("b"), py::arg("c"));
}
