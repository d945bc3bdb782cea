#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "rnaposet/diagram.hpp"
#include "rnaposet/errors.hpp"

namespace rnaposet {

struct GridPoint {
  std::map<std::string, int> values;

  bool has(const std::string& name) const { return values.count(name) > 0; }
  int get(const std::string& name) const;
  std::string describe() const;
};

// "f=3..5,k=1..2;n=4" is the union of two cartesian products. Values are a
// single integer, a range a..b, or a list a/b/c.
std::vector<GridPoint> parse_grid(const std::string& text);

struct PointResult {
  std::string params;
  bool pass = false;
  bool skipped = false;
  std::string detail;
  std::string counterexample;
  double seconds = 0.0;
};

struct VerificationReport {
  std::string check;
  std::string grid;
  std::vector<PointResult> points;

  bool passed() const;
};

const std::vector<std::string>& check_names();
std::string default_grid(const std::string& check);

// Runs one point; throws ResourceLimitError when a bound is hit.
PointResult run_point(const std::string& check, const GridPoint& point, const Limits& limits);
VerificationReport run_check(const std::string& check, const std::string& grid,
                             const Limits& limits, int jobs = 1);

std::string render_text(const VerificationReport& r, bool timing);
nlohmann::json render_json(const VerificationReport& r, bool timing);

// Every proper diagram of the given length, sorted.
std::vector<Diagram> proper_diagrams(int n);
// Every diagram of the given length, sorted.
std::vector<Diagram> all_diagrams(int n);

}  // namespace rnaposet
