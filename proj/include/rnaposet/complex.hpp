#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rnaposet/errors.hpp"
#include "rnaposet/poset.hpp"
#include "rnaposet/smith.hpp"
#include "rnaposet/transform.hpp"

namespace rnaposet {

// A face is a sorted list of vertex indices.
using Face = std::vector<int>;

class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  // Keeps the inclusion-maximal facets; vertices are numbered in order of first
  // appearance.
  static SimplicialComplex from_facets(const std::vector<std::vector<std::string>>& facets);
  // Facets over the given labels. With assume_maximal the containment check is
  // skipped.
  static SimplicialComplex from_index_facets(std::vector<std::string> labels,
                                             std::vector<Face> facets,
                                             bool assume_maximal = false);

  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Face>& facets() const { return facets_; }
  std::size_t vertex_count() const { return labels_.size(); }
  bool empty() const { return facets_.empty(); }
  int dimension() const;
  bool is_pure() const;

  // faces[d] lists the d-dimensional faces in lexicographic order.
  std::vector<std::vector<Face>> faces(std::size_t cap = Limits{}.max_faces) const;
  std::vector<std::size_t> f_vector(std::size_t cap = Limits{}.max_faces) const;

 private:
  std::vector<std::string> labels_;
  std::vector<Face> facets_;
};

SimplicialComplex simplex(int d);
// Vertex labels are prefixed "a:" and "b:".
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);
// Facets are the maximal chains. Throws ResourceLimitError past `cap` chains.
SimplicialComplex order_complex(const FinitePoset& p, std::size_t cap = Limits{}.max_faces);

// Diagonals i-j of the m-gon with k < j - i < m - k, sorted.
std::vector<Diagonal> relevant_diagonals(int m, int k);
// Faces are the nonempty sets of k-relevant diagonals without k + 1 pairwise
// crossing members.
SimplicialComplex build_T(int m, int k, std::size_t cap = Limits{}.max_faces);

struct HomologyGroup {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;

  bool is_zero() const { return rank == 0 && torsion.empty(); }
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

// Reduced homology groups for dimensions -1 .. top().
struct HomologyResult {
  std::vector<HomologyGroup> groups;

  int top() const { return static_cast<int>(groups.size()) - 2; }
  const HomologyGroup& at(int d) const;
  std::size_t betti(int d) const;
  bool is_trivial() const;
  bool torsion_free() const;
  // Sum of (-1)^d betti(d).
  long long reduced_euler() const;
  // Dimensions with nonzero groups.
  std::vector<int> support() const;
  // Trailing zero groups dropped.
  HomologyResult trimmed() const;

  friend bool operator==(const HomologyResult& a, const HomologyResult& b) {
    return a.trimmed().groups == b.trimmed().groups;
  }
};

HomologyResult homology_from_faces(const std::vector<std::vector<Face>>& faces);
HomologyResult reduced_homology(const SimplicialComplex& c, std::size_t cap = Limits{}.max_faces);

long long euler_characteristic(const SimplicialComplex& c, std::size_t cap = Limits{}.max_faces);
FinitePoset face_poset(const SimplicialComplex& c, std::size_t cap = Limits{}.max_faces);

// Reduced homology of A * B from that of A and B.
HomologyResult join_homology(const HomologyResult& a, const HomologyResult& b);
HomologyResult sphere_homology(int d);

bool sphere_signature(const SimplicialComplex& c, int d);
bool sphere_signature(const HomologyResult& h, int dimension, bool pure, int d);
// Homology of a d1-sphere joined with a d2-simplex.
bool join_signature(const HomologyResult& h, int d1, int d2);

// When p is isomorphic to the face poset of a complex K, returns K, so that
// the order complex of p is the barycentric subdivision of K.
std::optional<SimplicialComplex> as_face_poset_complex(const FinitePoset& p);

enum class TopologyRoute { automatic, direct, face_poset };

struct TopologySummary {
  std::string method;  // "direct" or "face-poset"
  int dimension = -1;  // of the order complex
  bool pure = true;
  std::size_t vertices = 0;
  std::size_t faces = 0;  // of the complex the homology was computed on
  HomologyResult homology;
};

TopologySummary order_complex_topology(const FinitePoset& p,
                                       TopologyRoute route = TopologyRoute::automatic,
                                       const Limits& limits = {});

std::string format_group(const HomologyGroup& g);
std::string format_homology(const HomologyResult& h);

std::string write_facets(const SimplicialComplex& c);
SimplicialComplex read_facets(const std::string& text);

}  // namespace rnaposet
