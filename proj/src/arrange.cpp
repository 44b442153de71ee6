#include "tripoints/arrange.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tripoints/errors.hpp"

namespace tripoints {

namespace {

int64_t choose2(int64_t n) { return n * (n - 1) / 2; }

std::string fraction_str(int64_t num, int64_t den) {
  if (num % den == 0) return std::to_string(num / den);
  int64_t g = std::gcd(num, den);
  return std::to_string(num / g) + "/" + std::to_string(den / g);
}

}  // namespace

Arrangement::Arrangement(const Field& field, std::vector<LabeledLine> lines)
    : field_(field), lines_(std::move(lines)) {
  std::set<int64_t> labels;
  std::set<ProjLine> seen;
  for (const auto& ll : lines_) {
    if (ll.line.field() != field_) {
      throw std::invalid_argument("Arrangement: line field mismatch");
    }
    if (!labels.insert(ll.label).second) {
      throw std::invalid_argument("Arrangement: duplicate label " +
                                  std::to_string(ll.label));
    }
    if (!seen.insert(ll.line).second) {
      throw std::invalid_argument("Arrangement: duplicate line " + ll.line.str());
    }
  }
}

namespace {

Arrangement build_duals(const Field& field, bool skip_zero) {
  std::vector<LabeledLine> lines;
  for (const auto& s : field.elements()) {
    if (skip_zero && s.is_zero()) continue;
    lines.push_back({static_cast<int64_t>(s.encode()), dual_line(cusp_point(s))});
  }
  return Arrangement(field, std::move(lines));
}

}  // namespace

Arrangement build_char3(const Field& field) {
  if (field.p() != 3) throw std::invalid_argument("build_char3: characteristic must be 3");
  return build_duals(field, false);
}

Arrangement build_char2(const Field& field) {
  if (field.p() != 2) throw std::invalid_argument("build_char2: characteristic must be 2");
  if (field.order() < 4) throw std::invalid_argument("build_char2: need q >= 4");
  return build_duals(field, true);
}

Arrangement build_generic(const Field& field) {
  if (field.p() < 5) throw std::invalid_argument("build_generic: characteristic must be >= 5");
  return build_duals(field, false);
}

SingularitySpectrum::SingularitySpectrum(size_t nlines, std::vector<SpectrumPoint> points)
    : nlines_(nlines), points_(std::move(points)) {
  for (const auto& sp : points_) {
    counts_[static_cast<int>(sp.labels.size())] += 1;
  }
}

int64_t SingularitySpectrum::t(int k) const {
  auto it = counts_.find(k);
  return it == counts_.end() ? 0 : it->second;
}

int SingularitySpectrum::max_multiplicity() const {
  return counts_.empty() ? 0 : counts_.rbegin()->first;
}

SingularitySpectrum audit(const Arrangement& a) {
  const auto& lines = a.lines();
  std::map<ProjPoint, std::set<int64_t>> buckets;
  for (size_t i = 0; i < lines.size(); ++i) {
    for (size_t j = i + 1; j < lines.size(); ++j) {
      ProjPoint p = meet(lines[i].line, lines[j].line);
      auto& bucket = buckets.emplace(p, std::set<int64_t>{}).first->second;
      bucket.insert(lines[i].label);
      bucket.insert(lines[j].label);
    }
  }

  int64_t pair_sum = 0;
  std::vector<SpectrumPoint> pts;
  pts.reserve(buckets.size());
  for (const auto& [point, labels] : buckets) {
    if (labels.size() < 2) throw std::logic_error("audit: bucket with one line");
    for (int64_t label : labels) {
      auto it = std::find_if(lines.begin(), lines.end(),
                             [&](const LabeledLine& ll) { return ll.label == label; });
      if (it == lines.end() || !it->line.contains(point)) {
        throw std::logic_error("audit: incidence re-check failed at " + point.str());
      }
    }
    pair_sum += choose2(static_cast<int64_t>(labels.size()));
    pts.push_back({point, std::vector<int64_t>(labels.begin(), labels.end())});
  }
  if (pair_sum != choose2(static_cast<int64_t>(lines.size()))) {
    throw std::logic_error("audit: pair count mismatch");
  }
  return SingularitySpectrum(lines.size(), std::move(pts));
}

ConfigurationReport check_configuration(const Arrangement& a,
                                        const SingularitySpectrum& s, int r, int k) {
  ConfigurationReport rep{true, {}};
  std::map<int64_t, int> per_line;
  for (const auto& ll : a.lines()) per_line[ll.label] = 0;
  for (const auto& sp : s.points()) {
    if (static_cast<int>(sp.labels.size()) != k) {
      rep.violations.push_back("point " + sp.point.str() + ": multiplicity " +
                               std::to_string(sp.labels.size()) + ", expected " +
                               std::to_string(k));
    }
    for (int64_t label : sp.labels) per_line[label] += 1;
  }
  for (const auto& ll : a.lines()) {
    int got = per_line[ll.label];
    if (got != r) {
      rep.violations.push_back("line " + std::to_string(ll.label) + ": " +
                               std::to_string(got) + " multiple points, expected " +
                               std::to_string(r));
    }
  }
  rep.ok = rep.violations.empty();
  return rep;
}

std::vector<ProjPoint> dual_points(const Arrangement& a) {
  std::vector<ProjPoint> pts;
  pts.reserve(a.size());
  for (const auto& ll : a.lines()) pts.push_back(dual_point(ll.line));
  return pts;
}

std::vector<CountCheckRow> reference_count_rows(const Arrangement& a,
                                                const SingularitySpectrum& s) {
  std::vector<CountCheckRow> rows;
  const int64_t q = static_cast<int64_t>(a.field().order());
  const int64_t n = static_cast<int64_t>(a.size());
  const int p = a.field().p();

  auto add = [&](int k, const std::string& formula, int64_t num, int64_t den) {
    std::string value = fraction_str(num, den);
    bool integral = (num % den == 0);
    rows.push_back({k, formula, value, integral, integral && s.t(k) == num / den});
  };

  if (p == 3 && n == q) {
    add(3, "q(q-1)/6", q * (q - 1), 6);
    add(2, "0", 0, 1);
  } else if (p == 2 && n == q - 1) {
    add(3, "(q-1)(q-2)/6", (q - 1) * (q - 2), 6);
    add(2, "0", 0, 1);
  } else if (p >= 5 && n == q) {
    add(3, "q(q-3)/6", q * (q - 3), 6);
    add(3, "(q-1)(q-2)/6", (q - 1) * (q - 2), 6);
    add(2, "q", q, 1);
    add(2, "q-1", q - 1, 1);
  }
  return rows;
}

std::string spectrum_report(const SingularitySpectrum& s, bool with_points) {
  std::ostringstream os;
  os << "lines=" << s.nlines() << '\n';
  for (const auto& [k, count] : s.counts()) {
    os << "t[" << k << "]=" << count << '\n';
  }
  if (with_points) {
    for (const auto& sp : s.points()) {
      os << sp.point.str() << " -> {";
      for (size_t i = 0; i < sp.labels.size(); ++i) {
        if (i) os << ',';
        os << sp.labels[i];
      }
      os << "}\n";
    }
  }
  return os.str();
}

std::string reference_row_line(const CountCheckRow& row) {
  std::string line = "reference.t[" + std::to_string(row.k) + "]." + row.formula + "=" +
                     row.value + (row.match ? " match" : " MISMATCH");
  if (!row.integral) line += " (not an integer)";
  return line;
}

std::string audit_report(const Arrangement& a, const SingularitySpectrum& s,
                         bool with_points) {
  std::string out = spectrum_report(s, with_points);
  for (const auto& row : reference_count_rows(a, s)) {
    out += reference_row_line(row) + "\n";
  }
  return out;
}

Arrangement read_arrangement(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError(1, "missing field header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  Field field = parse_field_header(line, 1);

  std::vector<LabeledLine> lines;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) throw ParseError(line_no, "empty line");
    std::istringstream is(line);
    std::string label_tok, triple_tok, extra;
    if (!(is >> label_tok >> triple_tok) || (is >> extra)) {
      throw ParseError(line_no, "expected '<label> <a>:<b>:<c>'");
    }
    int64_t label;
    try {
      size_t used = 0;
      label = std::stoll(label_tok, &used);
      if (used != label_tok.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw ParseError(line_no, "bad label '" + label_tok + "'");
    }
    ProjPoint coeffs = parse_point(field, triple_tok, line_no);
    lines.push_back({label, dual_line(coeffs)});
  }
  try {
    return Arrangement(field, std::move(lines));
  } catch (const std::invalid_argument& e) {
    throw ParseError(line_no, e.what());
  }
}

void write_arrangement(std::ostream& out, const Arrangement& a) {
  out << a.field().header() << '\n';
  for (const auto& ll : a.lines()) {
    out << ll.label << ' ' << ll.line.str() << '\n';
  }
}

}  // namespace tripoints
