// Acceptance criteria: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rnaposet/complex.hpp"
#include "rnaposet/families.hpp"
#include "rnaposet/verify.hpp"

using namespace rnaposet;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Runs a named verification and checks every point passed within the time limit.
void require_check(Outcome& o, const std::string& check, const std::string& grid, double per_point_limit) {
  const auto report = run_check(check, grid, Limits{}, 1);
  for (const auto& p : report.points) {
    if (p.skipped) {
      o.require(false, check + " " + p.params + " skipped: " + p.detail);
      continue;
    }
    o.require(p.pass, check + " " + p.params + " failed: " + p.detail + " " + p.counterexample);
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s %s took %.2f s", check.c_str(), p.params.c_str(), p.seconds);
    o.require(p.seconds < per_point_limit, buf);
  }
}

bool single_cycle(const SimplicialComplex& c) {
  const auto n = c.vertex_count();
  if (c.dimension() != 1 || c.facets().size() != n) return false;
  std::vector<std::vector<int>> adj(n);
  for (const auto& f : c.facets()) {
    adj[f[0]].push_back(f[1]);
    adj[f[1]].push_back(f[0]);
  }
  for (const auto& a : adj)
    if (a.size() != 2) return false;
  std::size_t steps = 1;
  int prev = 0, cur = adj[0][0];
  while (cur != 0) {
    const int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = next;
    ++steps;
  }
  return steps == n;
}

Outcome criterion1() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  const auto P = build_P({4, 1, 0});
  const auto c = order_complex(P.poset);
  const auto fv = c.f_vector();
  o.require(fv.size() == 2 && fv[0] == 10 && fv[1] == 10, "f-vector of the order complex is not (10, 10)");
  o.require(single_cycle(c), "edges do not form a single cycle");
  o.require(sphere_signature(c, 1), "no sphere signature in dimension 1");
  o.require(seconds_since(t0) < 1.0, "P^0_{4,1} took over 1 s");
  const auto t = order_complex_topology(build_P({5, 1, 0}).poset);
  o.require(sphere_signature(t.homology, t.dimension, t.pure, 2), "P^0_{5,1} lacks a 2-sphere signature");
  o.detail = o.pass ? "10 vertices, 10 edges, one cycle; f=5 gives a 2-sphere signature" : o.detail;
  return o;
}

Outcome criterion2() {
  Outcome o;
  require_check(o, "thm11", "f=4/5/6,k=1;f=5/6,k=2", 120.0);
  if (o.pass) o.detail = "join predictions hold for (4,1),(5,1),(6,1),(5,2),(6,2)";
  return o;
}

Outcome criterion3() {
  Outcome o;
  const std::vector<std::pair<int, int>> points{{5, 1}, {6, 1}, {7, 1}, {8, 1}, {6, 2}, {7, 2}, {8, 2}};
  std::ostringstream counts;
  for (const auto& [m, k] : points) {
    auto t0 = std::chrono::steady_clock::now();
    const auto T = build_T(m, k);
    const int d = k * (m - 2 * k - 1) - 1;
    const std::string where = "T_{" + std::to_string(m) + "," + std::to_string(k) + "}";
    o.require(sphere_signature(T, d), where + " lacks a sphere signature in dimension " + std::to_string(d));
    const long long want = oracle::hankel_catalan(m, k);
    o.require(static_cast<long long>(T.facets().size()) == want,
              where + " has " + std::to_string(T.facets().size()) + " facets, expected " + std::to_string(want));
    o.require(seconds_since(t0) < 120.0, where + " over time");
    counts << (counts.tellp() ? " " : "") << where << ":" << T.facets().size();
  }
  require_check(o, "theta", "m=5..8,k=1;m=6..8,k=2", 120.0);
  if (o.pass) o.detail = "sphere signatures; facets " + counts.str();
  return o;
}

Outcome criterion4() {
  Outcome o;
  require_check(o, "thm12", "f=3,k=1,r=0..2;f=4..5,k=1..2,r=0..2", 60.0);
  if (o.pass) o.detail = "15 points pure with rank_cardinality = k(2f-2k+1)+r-f-1";
  return o;
}

Outcome criterion5() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  require_check(o, "beta", "f=3,k=1,r=0..2;f=4..5,k=1..2,r=0..2", 120.0);
  require_check(o, "rho", "f=3,k=1..2,r=0..1", 120.0);
  require_check(o, "tau", "n=4..6,k=1..2", 120.0);
  o.require(seconds_since(t0) < 120.0, "criterion took over 2 min");
  if (o.pass) o.detail = "beta and tau^-1 beta isomorphisms on 15 points; rho surjective on D^r_{3,k}";
  return o;
}

Outcome criterion6() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  require_check(o, "equivalence", "n=4..8", 300.0);
  require_check(o, "regular-unique", "n=4..8", 300.0);
  o.require(seconds_since(t0) < 300.0, "criterion took over 5 min");
  if (o.pass) o.detail = "all proper diagrams n <= 8: fibers, swap orbits and regular representatives agree";
  return o;
}

Outcome criterion7() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  require_check(o, "dual-matrix", "n=3..7", 120.0);
  require_check(o, "realize-roundtrip", "m=4..6,k=1..2,r=0..2", 120.0);
  o.require(seconds_since(t0) < 120.0, "criterion took over 2 min");
  if (o.pass) o.detail = "A(S) = B(dual(S)) for n <= 7; realization round trips on all M^r_{m,k}";
  return o;
}

Outcome criterion8() {
  Outcome o;
  require_check(o, "kappa", "m=5,k=1;m=6..7,k=2", 120.0);
  if (o.pass) o.detail = "kappa isomorphisms and join homology at (5,1),(6,2),(7,2)";
  return o;
}

Outcome criterion9() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  require_check(o, "length-bound", "f=3,k=1..2,r=0..1;n=4..9", 10.0);
  o.require(seconds_since(t0) < 10.0, "criterion took over 10 s");
  if (o.pass) o.detail = "no violations among D^r_{3,k} and proper diagrams of length <= 9";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"order complex of P^0_{4,1} is a 10-cycle", criterion1},
      {"homology of P^0_{f,k} matches the join prediction", criterion2},
      {"T_{m,k} sphere signatures and facet counts", criterion3},
      {"purity and rank of P^r_{f,k}", criterion4},
      {"beta, rho and tau^-1 beta order maps", criterion5},
      {"equivalence classes and regular representatives", criterion6},
      {"dual and realization identities", criterion7},
      {"kappa decomposition and join homology", criterion8},
      {"length bound", criterion9},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += !o.pass;
    std::printf("criterion %zu %s: %s [%.2f s] %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                seconds_since(t0), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
