#pragma once

// Composite face/degeneracy operators and the Eilenberg-Zilber normal form of
// simplices.
//
// A composite operator X_n -> X_m corresponds to a monotone map [m] -> [n].
// Its canonical form is s_{j1}...s_{jr} d_{i1}...d_{iq} with j1 > ... > jr and
// i1 < ... < iq: faces are applied first, degeneracies last. Both index sets
// are stored as bitmasks, so the monotonicity invariants hold by construction
// and structural equality is equality of composites.

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace kanact {

using Index = std::int32_t;

/// Largest dimension the bitmask encoding supports.
inline constexpr int kMaxDimension = 30;

struct OperatorSymbol {
  enum class Kind : std::uint8_t { face, degeneracy };
  Kind kind;
  int index;

  static OperatorSymbol face(int i) { return {Kind::face, i}; }
  static OperatorSymbol degeneracy(int i) { return {Kind::degeneracy, i}; }
  friend bool operator==(const OperatorSymbol&, const OperatorSymbol&) = default;
};

class OperatorWord {
 public:
  /// Identity operator on dimension `dim`.
  static OperatorWord identity(int dim);
  /// Builds a canonical word from explicit index lists. Throws InvalidIndex
  /// if the lists are not strictly monotone or out of range.
  static OperatorWord from_indices(int source_dim, std::span<const int> faces_increasing,
                                   std::span<const int> degeneracies_decreasing);
  static OperatorWord from_masks(int source_dim, std::uint32_t face_mask,
                                 std::uint32_t degeneracy_mask);

  int source_dim() const { return source_dim_; }
  int target_dim() const { return target_dim_; }
  std::uint32_t face_mask() const { return face_mask_; }
  std::uint32_t degeneracy_mask() const { return degeneracy_mask_; }

  /// Face indices, strictly increasing.
  std::vector<int> faces() const;
  /// Degeneracy indices, strictly decreasing.
  std::vector<int> degeneracies() const;

  bool is_identity() const { return face_mask_ == 0 && degeneracy_mask_ == 0; }

  /// The monotone map [target] -> [source] this operator is induced by.
  std::vector<int> vertex_map() const;
  static OperatorWord from_vertex_map(std::span<const int> map, int source_dim);

  /// Word as written, e.g. "s1 s0 d2" (identity prints as "id").
  std::string to_string() const;

  friend auto operator<=>(const OperatorWord&, const OperatorWord&) = default;

 private:
  OperatorWord(int source, int target, std::uint32_t faces, std::uint32_t degens)
      : source_dim_(source), target_dim_(target), face_mask_(faces), degeneracy_mask_(degens) {}

  int source_dim_ = 0;
  int target_dim_ = 0;
  std::uint32_t face_mask_ = 0;
  std::uint32_t degeneracy_mask_ = 0;
};

/// Reduces an arbitrary composite to canonical form. `word` is in written
/// order: the last symbol is applied first. Throws IndexOutOfRange when a
/// symbol's index is invalid at the dimension where it is applied.
OperatorWord normalize_operator(std::span<const OperatorSymbol> word, int source_dim);

/// outer o inner (inner applied first). Throws InvalidIndex on a dimension
/// mismatch.
OperatorWord compose(const OperatorWord& outer, const OperatorWord& inner);

/// A simplex in Eilenberg-Zilber normal form: a pure degeneracy word applied
/// to a nondegenerate generator. `generator` indexes the generators of
/// dimension generator_dim() in the owning presentation.
struct SimplexRef {
  int dim = 0;
  std::uint32_t degeneracy_mask = 0;
  Index generator = 0;

  static SimplexRef nondegenerate(int dim, Index generator) { return {dim, 0u, generator}; }
  static SimplexRef from_degeneracies(std::span<const int> decreasing, Index generator,
                                      int generator_dim);

  int generator_dim() const;
  bool is_degenerate() const { return degeneracy_mask != 0; }
  /// Degeneracy indices, strictly decreasing.
  std::vector<int> degeneracies() const;
  OperatorWord word() const;

  friend auto operator<=>(const SimplexRef&, const SimplexRef&) = default;
};

struct SimplexRefHash {
  std::size_t operator()(const SimplexRef& s) const noexcept {
    std::uint64_t h = static_cast<std::uint32_t>(s.generator);
    h = h * 0x9E3779B97F4A7C15ull ^ (static_cast<std::uint64_t>(s.degeneracy_mask) << 8) ^
        static_cast<std::uint64_t>(s.dim);
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

/// Face-table lookup: the i-th face of the nondegenerate generator
/// (dim, generator). Must throw MissingFaceEntry for absent entries.
using FaceLookup = std::function<const SimplexRef&(int dim, Index generator, int i)>;

/// Applies a canonical operator to a simplex and returns the normal form of
/// the result. Throws InvalidIndex if w.source_dim() != x.dim.
SimplexRef apply_operator(const OperatorWord& w, const SimplexRef& x, const FaceLookup& faces);

/// Applies the degeneracies in `mask` (a surjection [target] -> [x.dim]) on
/// top of x. Pure bookkeeping, no face lookup needed.
SimplexRef degenerate(const SimplexRef& x, std::uint32_t mask, int target_dim);

/// Number of strictly decreasing degeneracy words from dimension k to n.
std::uint64_t degeneracy_word_count(int k, int n);

/// All degeneracy masks for surjections [n] -> [k], ascending as integers.
std::vector<std::uint32_t> degeneracy_masks(int k, int n);

}  // namespace kanact
