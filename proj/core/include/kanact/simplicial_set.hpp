#pragma once

// Truncated simplicial sets given by nondegenerate generators and a face
// table, plus the exhaustive checks run against them.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kanact/operator_calculus.hpp"

namespace kanact {

struct GeneratorId {
  int dim = 0;
  Index index = 0;
  friend auto operator<=>(const GeneratorId&, const GeneratorId&) = default;
};

class SSetPresentation {
 public:
  SSetPresentation() = default;
  SSetPresentation(std::string name, int max_dim);

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  int max_dim() const { return max_dim_; }

  /// Appends a generator; names are unique across all dimensions.
  Index add_generator(int dim, std::string name);
  /// Faces d_0..d_dim of a generator of dimension dim >= 1.
  void set_faces(int dim, Index generator, std::vector<SimplexRef> faces);

  Index generator_count(int dim) const;
  const std::vector<std::string>& generator_names(int dim) const { return names_.at(dim); }
  const std::string& generator_name(int dim, Index generator) const;
  std::optional<GeneratorId> find(std::string_view name) const;
  GeneratorId require(std::string_view name) const;

  bool has_faces(int dim, Index generator) const;
  const std::vector<SimplexRef>& faces(int dim, Index generator) const;
  /// Throws MissingFaceEntry.
  const SimplexRef& generator_face(int dim, Index generator, int i) const;
  FaceLookup lookup() const;

  SimplexRef face(const SimplexRef& x, int i) const;
  SimplexRef apply(const OperatorWord& w, const SimplexRef& x) const;
  /// "name" for generators, "s1s0(name)" for degenerate simplices.
  std::string simplex_name(const SimplexRef& x) const;
  /// Parses simplex_name output.
  SimplexRef parse_simplex(std::string_view text) const;

  /// Exactly one vertex.
  bool reduced() const { return max_dim_ >= 0 && generator_count(0) == 1; }

  friend bool operator==(const SSetPresentation& a, const SSetPresentation& b);

 private:
  std::string name_;
  int max_dim_ = -1;
  std::vector<std::vector<std::string>> names_;
  std::vector<std::vector<std::vector<SimplexRef>>> faces_;
  std::unordered_map<std::string, GeneratorId> lookup_;
};

/// All n-simplices: generator dimension descending, then generator index,
/// then degeneracy mask ascending.
std::vector<SimplexRef> enumerate_simplices(const SSetPresentation& x, int n);
std::size_t simplex_count(const SSetPresentation& x, int n);

struct IdentityViolation {
  int dim = 0;
  Index generator = 0;
  int i = 0;
  int j = 0;
  friend bool operator==(const IdentityViolation&, const IdentityViolation&) = default;
};

struct ValidationReport {
  std::vector<std::string> structural;
  std::vector<IdentityViolation> identities;
  bool ok() const { return structural.empty() && identities.empty(); }
};

/// Checks face dimensions and d_i d_j = d_{j-1} d_i (i < j) for every
/// generator.
ValidationReport validate(const SSetPresentation& x);
std::string describe(const SSetPresentation& x, const IdentityViolation& v);

/// Simplices of dimensions 0..max_dim with their faces as positions.
class SimplexTable {
 public:
  SimplexTable(const SSetPresentation& x, int max_dim);

  int max_dim() const { return max_dim_; }
  const std::vector<SimplexRef>& simplices(int n) const { return simplices_[n]; }
  std::size_t position(const SimplexRef& s) const;
  std::size_t face(int n, std::size_t pos, int i) const { return faces_[n][pos * (n + 1) + i]; }

 private:
  int max_dim_;
  std::vector<std::vector<SimplexRef>> simplices_;
  std::vector<std::unordered_map<SimplexRef, std::size_t, SimplexRefHash>> positions_;
  std::vector<std::vector<std::size_t>> faces_;
};

/// Lambda^{n+1}_k: n-simplices x_i for i != k with d_i x_j = d_{j-1} x_i.
struct Horn {
  int n = 0;
  int k = 0;
  /// n+2 slots; faces[k] is unused.
  std::vector<SimplexRef> faces;
};

struct KanReport {
  int up_to_dim = 0;
  std::size_t horns_checked = 0;
  std::vector<Horn> unfillable;
  bool ok() const { return unfillable.empty(); }
};

/// Exhaustive horn search for faces of dimension n <= up_to_dim, fillers in
/// dimension n+1.
KanReport check_kan(const SSetPresentation& x, int up_to_dim);

/// Calls visit(positions) for every compatible horn of n-simplices missing
/// slot k. positions[k] is unspecified.
void for_each_horn(const SimplexTable& table, int n, int k,
                   const std::function<void(const std::vector<std::size_t>&)>& visit);

struct MinimalityViolation {
  SimplexRef x;
  SimplexRef y;
  int k = 0;
};

struct MinimalityReport {
  int up_to_dim = 0;
  std::vector<MinimalityViolation> violations;
  bool ok() const { return violations.empty(); }
};

MinimalityReport check_minimal(const SSetPresentation& x, int up_to_dim);

/// Same generators and faces up to dimension n.
SSetPresentation truncate(const SSetPresentation& x, int n);

/// The generators with keep[dim][g] set; throws InvariantViolation if their
/// faces leave the kept set. Generator names are preserved.
SSetPresentation subcomplex(const SSetPresentation& x, const std::vector<std::vector<bool>>& keep,
                            std::string name);

/// Per-dimension permutation of generators.
struct SimplicialMap {
  std::vector<std::vector<Index>> generators;

  SimplexRef operator()(const SimplexRef& s) const {
    return SimplexRef{s.dim, s.degeneracy_mask, generators[s.generator_dim()][s.generator]};
  }
  friend bool operator==(const SimplicialMap&, const SimplicialMap&) = default;
};

SimplicialMap identity_simplicial_map(const SSetPresentation& x);
SimplicialMap compose(const SimplicialMap& outer, const SimplicialMap& inner);
SimplicialMap inverse(const SimplicialMap& f);

/// Dimension-wise bijection commuting with every face.
bool is_isomorphism(const SSetPresentation& x, const SSetPresentation& y, const SimplicialMap& f);
std::optional<SimplicialMap> find_isomorphism(const SSetPresentation& x, const SSetPresentation& y);

/// Product of the factors truncated at their smallest max_dim. A generator is
/// a tuple of simplices whose degeneracy masks have no common bit; it is
/// named "(a,b,...)" from the coordinate simplex names.
class ProductComplex {
 public:
  explicit ProductComplex(std::vector<SSetPresentation> factors, std::string name = "");

  const SSetPresentation& presentation() const { return product_; }
  const std::vector<SSetPresentation>& factors() const { return factors_; }
  std::vector<SimplexRef> coordinates(const SimplexRef& s) const;
  SimplexRef simplex(const std::vector<SimplexRef>& coordinates) const;

 private:
  std::vector<SSetPresentation> factors_;
  SSetPresentation product_;
  std::vector<std::vector<std::vector<SimplexRef>>> tuples_;
  std::vector<std::map<std::vector<SimplexRef>, Index>> index_;
};

SSetPresentation cartesian_product(const SSetPresentation& x, const SSetPresentation& y);

enum class StandardKind { delta, boundary, horn };

/// Delta[n], its boundary or the horn Lambda^n_k, generators named by vertex
/// tuples "(0,1)". Truncated at max(n, 1) + 1 unless max_dim is given.
SSetPresentation standard_complex(StandardKind kind, int n, int k = 0,
                                  std::optional<int> max_dim = std::nullopt);
SSetPresentation point_complex(int max_dim);

}  // namespace kanact
