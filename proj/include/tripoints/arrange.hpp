#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "tripoints/projplane.hpp"

namespace tripoints {

struct LabeledLine {
  int64_t label;
  ProjLine line;
};

/// Finite set of distinct labeled lines in P^2(K).
class Arrangement {
 public:
  Arrangement(const Field& field, std::vector<LabeledLine> lines);

  Field field() const { return field_; }
  size_t size() const { return lines_.size(); }
  const std::vector<LabeledLine>& lines() const { return lines_; }

 private:
  Field field_;
  std::vector<LabeledLine> lines_;
};

/// Duals of all q cusp-curve points over a field of characteristic 3; every
/// intersection is a triple point. Labels are the parameter encodings.
Arrangement build_char3(const Field& field);

/// Duals of the q - 1 points with nonzero parameter over characteristic 2;
/// again only triple points.
Arrangement build_char2(const Field& field);

/// Duals of all q cusp-curve points over characteristic >= 5; triple and
/// double points both occur.
Arrangement build_generic(const Field& field);

struct SpectrumPoint {
  ProjPoint point;
  std::vector<int64_t> labels;  // sorted
};

/// Multiplicity census of an arrangement's intersection points.
class SingularitySpectrum {
 public:
  SingularitySpectrum(size_t nlines, std::vector<SpectrumPoint> points);

  /// t_k for k >= 2, ascending k; absent keys are zero.
  const std::map<int, int64_t>& counts() const { return counts_; }
  int64_t t(int k) const;
  int max_multiplicity() const;
  /// Points of multiplicity >= 2, sorted by coordinates.
  const std::vector<SpectrumPoint>& points() const { return points_; }
  size_t nlines() const { return nlines_; }

 private:
  size_t nlines_;
  std::vector<SpectrumPoint> points_;
  std::map<int, int64_t> counts_;
};

/// Bucket all pairwise intersections by point, re-check every incidence, and
/// verify sum_k C(k,2) t_k = C(n,2). Violations of the internal cross-checks
/// throw logic_error.
SingularitySpectrum audit(const Arrangement& a);

struct ConfigurationReport {
  bool ok;
  std::vector<std::string> violations;
};

/// Check that every multiple point has multiplicity exactly k and every line
/// carries exactly r multiple points.
ConfigurationReport check_configuration(const Arrangement& a,
                                        const SingularitySpectrum& s, int r, int k);

/// The points whose duals the arrangement's lines are, in line order.
std::vector<ProjPoint> dual_points(const Arrangement& a);

/// One comparison of a measured count against a closed-form candidate.
struct CountCheckRow {
  int k;                // which t_k
  std::string formula;  // closed form in q
  std::string value;    // evaluated (reduced fraction when not an integer)
  bool integral;
  bool match;
};

/// Reference-count rows for the recognized arrangement shapes (char-3 full
/// pencil-of-duals, char-2 punctured one, generic q-line one); empty when the
/// arrangement matches no recognized shape.
std::vector<CountCheckRow> reference_count_rows(const Arrangement& a,
                                                const SingularitySpectrum& s);

/// Text report: "lines=<n>" then "t[<k>]=<count>" per multiplicity, then
/// optionally one "<x:y:z> -> {l1,l2,...}" line per multiple point.
std::string spectrum_report(const SingularitySpectrum& s, bool with_points);

/// "reference.t[<k>].<formula>=<value> match|MISMATCH" for one row.
std::string reference_row_line(const CountCheckRow& row);

/// spectrum_report followed by the reference-count comparison lines.
std::string audit_report(const Arrangement& a, const SingularitySpectrum& s,
                         bool with_points);

Arrangement read_arrangement(std::istream& in);
void write_arrangement(std::ostream& out, const Arrangement& a);

}  // namespace tripoints
