#pragma once

// Normalized chains, integral homology by Smith normal form and mod-p
// cohomology.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "kanact/groups.hpp"
#include "kanact/simplicial_set.hpp"

namespace kanact {

using BigInt = boost::multiprecision::cpp_int;

/// Column-major sparse integer matrix; each column sorted by row.
struct SparseMatrix {
  Index rows = 0;
  Index cols = 0;
  std::vector<std::vector<std::pair<Index, std::int64_t>>> columns;

  std::int64_t at(Index r, Index c) const;
  std::vector<std::vector<std::int64_t>> dense() const;
};

/// Basis in degree n: the nondegenerate n-generators. boundary[n] maps C_n to
/// C_{n-1} (boundary[0] is empty).
struct ChainComplex {
  int top = 0;
  std::vector<Index> ranks;
  std::vector<SparseMatrix> boundary;
};

/// d = sum (-1)^i d_i with degenerate faces dropped; asserts d d = 0.
ChainComplex boundary_matrices(const SSetPresentation& x);

struct SmithForm {
  Index rank = 0;
  /// Nonzero diagonal entries in divisibility order.
  std::vector<BigInt> diagonal;
};

SmithForm smith_normal_form(const SparseMatrix& m);
/// Rank over the field with p elements.
Index rank_mod_p(const SparseMatrix& m, int p);
bool is_prime(int p);

struct DegreeHomology {
  Index free_rank = 0;
  std::vector<BigInt> torsion;
  /// Dimension over F_p when computed mod p.
  Index dimension = 0;
};

struct HomologyResult {
  std::optional<int> prime;
  int reliable_up_to = 0;
  std::vector<DegreeHomology> degrees;

  /// Mod-p dimensions, or free ranks for integral results.
  std::vector<Index> dimensions() const;
};

/// Degrees 0..top-1.
HomologyResult integral_homology(const ChainComplex& c);
/// Throws NotPrime.
HomologyResult mod_p_cohomology(const ChainComplex& c, int p);

/// dim H^n(;F_p) = free_n + t_n(p) + t_{n-1}(p) in every reported degree.
bool universal_coefficients_hold(const HomologyResult& integral, const HomologyResult& mod_p);

/// Group generators cap for group_cohomology before BoundExceeded.
inline constexpr std::size_t kNerveGeneratorBound = 200000;

/// dim H^i(G; F_p) for i <= degree_bound via the nerve truncated one above.
std::vector<Index> group_cohomology(const FiniteGroup& g, int p, int degree_bound);

/// "Z", "Z/2", "Z^2 + Z/3", "0".
std::string format_group(const DegreeHomology& d);

}  // namespace kanact
