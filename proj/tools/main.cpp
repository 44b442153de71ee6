// tripoints: line arrangements with only triple points from the cuspidal
// cubic over finite fields, their matroids, and realizability checks.
//
// Exit codes: 0 success / positive answer, 1 negative answer,
// 2 usage/format error, 3 audit found multiplicities outside {2,3}.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tripoints/arrange.hpp"
#include "tripoints/errors.hpp"
#include "tripoints/gf.hpp"
#include "tripoints/realize.hpp"
#include "tripoints/triples.hpp"

using namespace tripoints;

namespace {

// Ordered key/value report, printable as text or mirrored as flat JSON with
// the same field names. Arrow rows render as "<key> -> <value>".
struct Report {
  nlohmann::ordered_json json = nlohmann::ordered_json::object();
  std::ostringstream text;

  void kv(const std::string& key, const std::string& value) {
    text << key << '=' << value << '\n';
    json[key] = value;
  }
  void kv(const std::string& key, int64_t value) {
    text << key << '=' << value << '\n';
    json[key] = value;
  }
  void arrow(const std::string& key, const std::string& value) {
    text << key << " -> " << value << '\n';
    json[key] = value;
  }
  void print(bool as_json) const {
    if (as_json) {
      std::cout << json.dump() << '\n';
    } else {
      std::cout << text.str();
    }
  }
};

std::vector<int> parse_modulus(const std::string& csv) {
  std::vector<int> coeffs;
  std::stringstream ss(csv);
  std::string part;
  while (std::getline(ss, part, ',')) {
    size_t used = 0;
    coeffs.push_back(std::stoi(part, &used));
    if (used != part.size()) throw std::invalid_argument("bad modulus entry '" + part + "'");
  }
  if (coeffs.empty()) throw std::invalid_argument("empty modulus");
  return coeffs;
}

Field make_field(int p, int n, const std::string& modulus_csv) {
  if (modulus_csv.empty()) return Field(p, n);
  return Field(p, n, parse_modulus(modulus_csv));
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return in;
}

// Write payload to the -o path, or to stdout when no path was given.
void emit_payload(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
  out << payload;
}

Arrangement load_arrangement(const std::string& path) {
  auto in = open_input(path);
  return read_arrangement(in);
}

TripleSystem load_triples(const std::string& path) {
  auto in = open_input(path);
  return read_triple_system(in);
}

void label_map_rows(const LabelMap& m, const std::string& prefix, Report& rep) {
  for (const auto& [a, b] : m) {
    rep.kv(prefix + std::to_string(a), b);
  }
}

// --- subcommand bodies; each returns the process exit code ---

int run_build(const std::string& construction, int p, int n, const std::string& modulus,
              const std::string& out_path, bool as_json) {
  Field field = make_field(p, n, modulus);
  Arrangement a = construction == "char3"    ? build_char3(field)
                  : construction == "char2"  ? build_char2(field)
                                             : build_generic(field);
  std::ostringstream payload;
  write_arrangement(payload, a);
  emit_payload(out_path, payload.str());
  if (!out_path.empty()) {
    Report rep;
    rep.kv("lines", static_cast<int64_t>(a.size()));
    rep.kv("wrote", out_path);
    rep.print(as_json);
  }
  return 0;
}

int run_audit(const std::string& path, bool with_points, bool as_json) {
  Arrangement a = load_arrangement(path);
  SingularitySpectrum s = audit(a);

  Report rep;
  rep.kv("lines", static_cast<int64_t>(s.nlines()));
  for (const auto& [k, count] : s.counts()) {
    rep.kv("t[" + std::to_string(k) + "]", count);
  }
  if (with_points) {
    for (const auto& sp : s.points()) {
      std::string labels = "{";
      for (size_t i = 0; i < sp.labels.size(); ++i) {
        labels += (i ? "," : "") + std::to_string(sp.labels[i]);
      }
      labels += "}";
      rep.arrow(sp.point.str(), labels);
    }
  }
  for (const auto& row : reference_count_rows(a, s)) {
    std::string line = reference_row_line(row);
    size_t eq = line.find('=');
    rep.kv(line.substr(0, eq), line.substr(eq + 1));
  }
  rep.print(as_json);

  for (const auto& [k, count] : s.counts()) {
    if (k != 2 && k != 3 && count > 0) return 3;
  }
  return 0;
}

int run_dual_points(const std::string& path, const std::string& out_path) {
  Arrangement a = load_arrangement(path);
  std::ostringstream payload;
  write_points(payload, a.field(), dual_points(a));
  emit_payload(out_path, payload.str());
  return 0;
}

int run_extract(const std::string& path, const std::string& out_path, bool as_json) {
  Arrangement a = load_arrangement(path);
  TripleSystem ts = from_arrangement(a, audit(a));
  std::ostringstream payload;
  write_triple_system(payload, ts);
  emit_payload(out_path, payload.str());
  if (!out_path.empty()) {
    Report rep;
    rep.kv("ground", static_cast<int64_t>(ts.ground().size()));
    rep.kv("triples", static_cast<int64_t>(ts.triples().size()));
    rep.kv("wrote", out_path);
    rep.print(as_json);
  }
  return 0;
}

int run_make(const std::string& kind, int p, int n, const std::string& modulus,
             int dim, const std::string& out_path) {
  TripleSystem ts = kind == "zero-sum" ? make_zero_sum_triples(make_field(p, n, modulus))
                    : kind == "sum"    ? make_sum_triples(make_field(p, n, modulus))
                                       : make_projection_matroid(dim);
  std::ostringstream payload;
  write_triple_system(payload, ts);
  emit_payload(out_path, payload.str());
  return 0;
}

int run_iso(const std::string& path_a, const std::string& path_b, bool as_json) {
  TripleSystem a = load_triples(path_a);
  TripleSystem b = load_triples(path_b);
  auto witness = isomorphic(a, b);
  Report rep;
  rep.kv("isomorphic", witness ? "true" : "false");
  if (witness) label_map_rows(*witness, "map.", rep);
  rep.print(as_json);
  return witness ? 0 : 1;
}

int run_aut(const std::string& path, bool as_json) {
  TripleSystem ts = load_triples(path);
  AutomorphismInfo info = automorphism_group(ts);
  Report rep;
  rep.kv("order", static_cast<int64_t>(info.order));
  rep.kv("generators", static_cast<int64_t>(info.generators.size()));
  rep.kv("generators_complete", info.generators_complete ? "true" : "false");
  for (size_t i = 0; i < info.generators.size(); ++i) {
    label_map_rows(info.generators[i], "gen[" + std::to_string(i) + "].", rep);
  }
  rep.print(as_json);
  return 0;
}

int run_restrict(const std::string& path, const std::string& labels_csv,
                 const std::string& out_path) {
  TripleSystem ts = load_triples(path);
  std::vector<int64_t> subset;
  std::stringstream ss(labels_csv);
  std::string part;
  while (std::getline(ss, part, ',')) {
    size_t used = 0;
    subset.push_back(std::stoll(part, &used));
    if (used != part.size()) throw std::invalid_argument("bad label '" + part + "'");
  }
  std::ostringstream payload;
  write_triple_system(payload, restrict_to(ts, subset));
  emit_payload(out_path, payload.str());
  return 0;
}

int run_realize(const std::string& path, int p, int n, const std::string& modulus,
                bool count_all, bool best_effort, uint64_t node_limit, bool as_json) {
  TripleSystem ts = load_triples(path);
  Field field = make_field(p, n, modulus);
  RealizeOptions opts;
  opts.count_all = count_all;
  opts.best_effort = best_effort;
  opts.node_limit = node_limit;
  RealizeResult res = realize_over(ts, field, opts);

  Report rep;
  rep.kv("status", realize_status_name(res.status));
  rep.kv("witness_count", static_cast<int64_t>(res.witness_count));
  rep.kv("nodes", static_cast<int64_t>(res.nodes));
  rep.kv("forced", static_cast<int64_t>(res.forced));
  rep.kv("normalization", res.normalization);
  for (size_t i = 0; i < res.witnesses.size(); ++i) {
    for (const auto& [label, point] : res.witnesses[i].points) {
      rep.kv("witness[" + std::to_string(i) + "]." + std::to_string(label), point.str());
    }
  }
  rep.print(as_json);
  return res.status == RealizeStatus::realizable ? 0 : 1;
}

int run_export_ideal(const std::string& path, bool normalize, const std::string& out_path) {
  TripleSystem ts = load_triples(path);
  emit_payload(out_path, export_ideal(ts, normalize));
  return 0;
}

int run_cubic_fit(const std::string& path, bool as_json) {
  auto in = open_input(path);
  auto [field, pts] = read_points(in);
  std::vector<CubicForm> basis = cubics_through(field, pts);

  Report rep;
  rep.kv("points", static_cast<int64_t>(pts.size()));
  rep.kv("dim", static_cast<int64_t>(basis.size()));
  for (size_t i = 0; i < basis.size(); ++i) {
    std::string key = "cubic[" + std::to_string(i) + "]";
    rep.kv(key, basis[i].str());
    if (basis.size() <= 2) {
      CubicClassification cls = classify_cubic(basis[i]);
      rep.kv(key + ".kind", cubic_kind_name(cls.kind));
      std::string sing;
      for (size_t j = 0; j < cls.singular_points.size(); ++j) {
        sing += (j ? "," : "") + cls.singular_points[j].str();
      }
      rep.kv(key + ".singular", sing.empty() ? "none" : sing);
    }
  }
  rep.print(as_json);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Cuspidal-cubic line arrangements over finite fields: construction, "
      "singularity audit, matroid extraction, and realizability.\n"
      "Exit codes: 0 success/positive, 1 negative answer, 2 usage/format "
      "error, 3 audit found multiplicities outside {2,3}."};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "mirror the text report as flat JSON (reports only)");

  // build
  auto* build = app.add_subcommand(
      "build", "Build a dual arrangement of cuspidal-cubic points (file to -o/stdout)");
  std::string construction, modulus, out_path;
  int p = 0, n = 1;
  build->add_option("--construction", construction, "char3 | char2 | generic")
      ->required()
      ->check(CLI::IsMember({"char3", "char2", "generic"}));
  build->add_option("--p", p, "field characteristic")->required();
  build->add_option("--n", n, "extension degree (q = p^n)")->required();
  build->add_option("--modulus", modulus, "modulus coefficients c0,c1,...,cn (default: built-in table)");
  build->add_option("-o,--out", out_path, "output file (default stdout)");

  // audit
  auto* audit_cmd = app.add_subcommand(
      "audit", "Singularity spectrum of an arrangement file; exit 3 on multiplicities outside {2,3}");
  std::string audit_path;
  bool with_points = false;
  audit_cmd->add_option("file", audit_path, "arrangement file")->required();
  audit_cmd->add_flag("--points", with_points, "also list each multiple point with its labels");

  // dual-points
  auto* dual = app.add_subcommand("dual-points",
                                  "Write the dual points of an arrangement as a points file");
  std::string dual_path, dual_out;
  dual->add_option("file", dual_path, "arrangement file")->required();
  dual->add_option("-o,--out", dual_out, "output file (default stdout)");

  // matroid
  auto* matroid = app.add_subcommand("matroid", "Triple-system (matroid) operations");
  matroid->require_subcommand(1);

  auto* extract = matroid->add_subcommand(
      "extract", "Collinearity triples of an audited arrangement as a triple-system file");
  std::string extract_path, extract_out;
  extract->add_option("file", extract_path, "arrangement file")->required();
  extract->add_option("-o,--out", extract_out, "output file (default stdout)");

  auto* make = matroid->add_subcommand(
      "make", "Write a built-in triple system (zero-sum | sum | projection)");
  std::string make_kind, make_modulus, make_out;
  int make_p = 0, make_n = 1, make_dim = 2;
  make->add_option("--kind", make_kind, "zero-sum (char 3) | sum (char 2) | projection")
      ->required()
      ->check(CLI::IsMember({"zero-sum", "sum", "projection"}));
  make->add_option("--p", make_p, "field characteristic (zero-sum/sum)");
  make->add_option("--n", make_n, "extension degree (zero-sum/sum)");
  make->add_option("--modulus", make_modulus, "modulus coefficients c0,...,cn");
  make->add_option("--dim", make_dim, "vector-space dimension (projection)");
  make->add_option("-o,--out", make_out, "output file (default stdout)");

  auto* iso = matroid->add_subcommand("iso", "Isomorphism witness between two triple systems");
  std::string iso_a, iso_b;
  iso->add_option("a", iso_a, "triple-system file")->required();
  iso->add_option("b", iso_b, "triple-system file")->required();

  auto* aut = matroid->add_subcommand("aut", "Automorphism group order and generators");
  std::string aut_path;
  aut->add_option("file", aut_path, "triple-system file")->required();

  auto* restr = matroid->add_subcommand("restrict", "Induced system on a label subset");
  std::string restr_path, restr_labels, restr_out;
  restr->add_option("file", restr_path, "triple-system file")->required();
  restr->add_option("--labels", restr_labels, "comma-separated ground labels")->required();
  restr->add_option("-o,--out", restr_out, "output file (default stdout)");

  // realize
  auto* realize = app.add_subcommand(
      "realize",
      "Decide projective realizability of a triple system over GF(p^n).\n"
      "Exhaustive for ground <= 31 and field order <= 27; beyond that "
      "--best-effort is required and a failed search prints UNKNOWN, never "
      "UNREALIZABLE. Exit 0 realizable, 1 otherwise.");
  std::string realize_path, realize_modulus;
  std::vector<int> realize_field;
  bool count_all = false, best_effort = false;
  uint64_t node_limit = 0;
  realize->add_option("file", realize_path, "triple-system file")->required();
  realize->add_option("--field", realize_field, "field as two ints: p n")
      ->expected(2)
      ->required();
  realize->add_option("--modulus", realize_modulus, "modulus coefficients c0,...,cn");
  realize->add_flag("--count-all", count_all, "enumerate every frame-fixed witness");
  realize->add_flag("--best-effort", best_effort,
                    "search beyond the exhaustive caps (result never UNREALIZABLE)");
  realize->add_option("--node-limit", node_limit,
                      "abort after this many branch placements (0 = off)");

  // export-ideal
  auto* exp = app.add_subcommand(
      "export-ideal", "Determinantal realization conditions of a triple system");
  std::string exp_path, exp_out;
  bool normalize = false;
  exp->add_option("file", exp_path, "triple-system file")->required();
  exp->add_flag("--normalize", normalize,
                "substitute the standard frame for the find_frame labels");
  exp->add_option("-o,--out", exp_out, "output file (default stdout)");

  // cubic-fit
  auto* fit = app.add_subcommand(
      "cubic-fit", "Cubics through a points file: kernel dimension, basis, classification");
  std::string fit_path;
  fit->add_option("file", fit_path, "points file")->required();

  // Let `--json` appear after the subcommand as well.
  for (CLI::App* sub : {build, audit_cmd, dual, matroid, extract, make, iso, aut, restr,
                        realize, exp, fit}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*build) return run_build(construction, p, n, modulus, out_path, as_json);
    if (*audit_cmd) return run_audit(audit_path, with_points, as_json);
    if (*dual) return run_dual_points(dual_path, dual_out);
    if (*extract) return run_extract(extract_path, extract_out, as_json);
    if (*make) return run_make(make_kind, make_p, make_n, make_modulus, make_dim, make_out);
    if (*iso) return run_iso(iso_a, iso_b, as_json);
    if (*aut) return run_aut(aut_path, as_json);
    if (*restr) return run_restrict(restr_path, restr_labels, restr_out);
    if (*realize) return run_realize(realize_path, realize_field[0], realize_field[1],
                                     realize_modulus, count_all, best_effort, node_limit,
                                     as_json);
    if (*exp) return run_export_ideal(exp_path, normalize, exp_out);
    if (*fit) return run_cubic_fit(fit_path, as_json);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
