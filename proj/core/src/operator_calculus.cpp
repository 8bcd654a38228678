#include "kanact/operator_calculus.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "kanact/error.hpp"

namespace kanact {

namespace {

std::uint32_t low_bits(int n) { return n <= 0 ? 0u : ((n >= 32) ? ~0u : ((1u << n) - 1u)); }

void check_dim(int dim) {
  if (dim < 0 || dim > kMaxDimension) {
    throw Error(ErrorCode::InvalidIndex, "dimension " + std::to_string(dim) + " out of range");
  }
}

// Surjection [n] -> [n - popcount(mask)] collapsing j and j+1 for every bit j.
std::vector<int> surjection_from_mask(std::uint32_t mask, int n) {
  std::vector<int> map(static_cast<std::size_t>(n) + 1);
  int value = 0;
  for (int t = 0; t <= n; ++t) {
    if (t > 0 && !(mask & (1u << (t - 1)))) ++value;
    map[t] = value;
  }
  return map;
}

std::uint32_t collapse_mask(std::span<const int> map) {
  std::uint32_t mask = 0;
  for (std::size_t j = 0; j + 1 < map.size(); ++j) {
    if (map[j] == map[j + 1]) mask |= 1u << j;
  }
  return mask;
}

}  // namespace

OperatorWord OperatorWord::identity(int dim) {
  check_dim(dim);
  return OperatorWord(dim, dim, 0u, 0u);
}

OperatorWord OperatorWord::from_masks(int source_dim, std::uint32_t face_mask,
                                      std::uint32_t degeneracy_mask) {
  check_dim(source_dim);
  if (face_mask & ~low_bits(source_dim + 1)) {
    throw Error(ErrorCode::InvalidIndex, "face index exceeds source dimension");
  }
  const int faces = std::popcount(face_mask);
  const int mid = source_dim - faces;
  if (mid < 0 || (faces > 0 && faces == source_dim + 1)) {
    throw Error(ErrorCode::InvalidIndex, "operator removes every vertex");
  }
  const int target = mid + std::popcount(degeneracy_mask);
  check_dim(target);
  if (degeneracy_mask & ~low_bits(target)) {
    throw Error(ErrorCode::InvalidIndex, "degeneracy index exceeds target dimension");
  }
  return OperatorWord(source_dim, target, face_mask, degeneracy_mask);
}

OperatorWord OperatorWord::from_indices(int source_dim, std::span<const int> faces_increasing,
                                        std::span<const int> degeneracies_decreasing) {
  std::uint32_t faces = 0;
  for (std::size_t t = 0; t < faces_increasing.size(); ++t) {
    const int i = faces_increasing[t];
    if (i < 0 || i > kMaxDimension || (t > 0 && i <= faces_increasing[t - 1])) {
      throw Error(ErrorCode::InvalidIndex, "face indices must be strictly increasing");
    }
    faces |= 1u << i;
  }
  std::uint32_t degens = 0;
  for (std::size_t t = 0; t < degeneracies_decreasing.size(); ++t) {
    const int j = degeneracies_decreasing[t];
    if (j < 0 || j > kMaxDimension || (t > 0 && j >= degeneracies_decreasing[t - 1])) {
      throw Error(ErrorCode::InvalidIndex, "degeneracy indices must be strictly decreasing");
    }
    degens |= 1u << j;
  }
  return from_masks(source_dim, faces, degens);
}

std::vector<int> OperatorWord::faces() const {
  std::vector<int> out;
  for (int i = 0; i <= source_dim_; ++i) {
    if (face_mask_ & (1u << i)) out.push_back(i);
  }
  return out;
}

std::vector<int> OperatorWord::degeneracies() const {
  std::vector<int> out;
  for (int j = target_dim_ - 1; j >= 0; --j) {
    if (degeneracy_mask_ & (1u << j)) out.push_back(j);
  }
  return out;
}

std::vector<int> OperatorWord::vertex_map() const {
  // theta = eta o epsilon with epsilon the degeneracy surjection and eta the
  // injection skipping the removed vertices.
  std::vector<int> eta;
  for (int v = 0; v <= source_dim_; ++v) {
    if (!(face_mask_ & (1u << v))) eta.push_back(v);
  }
  auto map = surjection_from_mask(degeneracy_mask_, target_dim_);
  for (int& value : map) value = eta[value];
  return map;
}

OperatorWord OperatorWord::from_vertex_map(std::span<const int> map, int source_dim) {
  check_dim(source_dim);
  if (map.empty()) throw Error(ErrorCode::InvalidIndex, "empty vertex map");
  std::uint32_t image = 0;
  for (std::size_t t = 0; t < map.size(); ++t) {
    if (map[t] < 0 || map[t] > source_dim || (t > 0 && map[t] < map[t - 1])) {
      throw Error(ErrorCode::InvalidIndex, "vertex map is not monotone into [source]");
    }
    image |= 1u << map[t];
  }
  const std::uint32_t faces = low_bits(source_dim + 1) & ~image;
  return from_masks(source_dim, faces, collapse_mask(map));
}

std::string OperatorWord::to_string() const {
  if (is_identity()) return "id";
  std::ostringstream out;
  bool first = true;
  for (int j : degeneracies()) {
    out << (first ? "" : " ") << 's' << j;
    first = false;
  }
  for (int i : faces()) {
    out << (first ? "" : " ") << 'd' << i;
    first = false;
  }
  return out.str();
}

OperatorWord normalize_operator(std::span<const OperatorSymbol> word, int source_dim) {
  check_dim(source_dim);
  std::vector<int> theta(static_cast<std::size_t>(source_dim) + 1);
  for (int v = 0; v <= source_dim; ++v) theta[v] = v;
  int dim = source_dim;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const int i = it->index;
    if (it->kind == OperatorSymbol::Kind::face) {
      if (dim < 1 || i < 0 || i > dim) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "d" + std::to_string(i) + " applied in dimension " + std::to_string(dim));
      }
      // theta o delta_i
      std::vector<int> next(static_cast<std::size_t>(dim));
      for (int t = 0; t < dim; ++t) next[t] = theta[t < i ? t : t + 1];
      theta = std::move(next);
      --dim;
    } else {
      if (i < 0 || i > dim || dim + 1 > kMaxDimension) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "s" + std::to_string(i) + " applied in dimension " + std::to_string(dim));
      }
      // theta o sigma_i
      std::vector<int> next(static_cast<std::size_t>(dim) + 2);
      for (int t = 0; t <= dim + 1; ++t) next[t] = theta[t <= i ? t : t - 1];
      theta = std::move(next);
      ++dim;
    }
  }
  return OperatorWord::from_vertex_map(theta, source_dim);
}

OperatorWord compose(const OperatorWord& outer, const OperatorWord& inner) {
  if (outer.source_dim() != inner.target_dim()) {
    throw Error(ErrorCode::InvalidIndex, "composition dimension mismatch");
  }
  const auto theta_outer = outer.vertex_map();
  const auto theta_inner = inner.vertex_map();
  std::vector<int> theta(theta_outer.size());
  for (std::size_t t = 0; t < theta.size(); ++t) theta[t] = theta_inner[theta_outer[t]];
  return OperatorWord::from_vertex_map(theta, inner.source_dim());
}

SimplexRef SimplexRef::from_degeneracies(std::span<const int> decreasing, Index generator,
                                         int generator_dim) {
  const int dim = generator_dim + static_cast<int>(decreasing.size());
  check_dim(dim);
  std::uint32_t mask = 0;
  for (std::size_t t = 0; t < decreasing.size(); ++t) {
    const int j = decreasing[t];
    if (j < 0 || j >= dim || (t > 0 && j >= decreasing[t - 1])) {
      throw Error(ErrorCode::InvalidIndex, "degeneracy word must be strictly decreasing below dim");
    }
    mask |= 1u << j;
  }
  return SimplexRef{dim, mask, generator};
}

int SimplexRef::generator_dim() const { return dim - std::popcount(degeneracy_mask); }

std::vector<int> SimplexRef::degeneracies() const {
  std::vector<int> out;
  for (int j = dim - 1; j >= 0; --j) {
    if (degeneracy_mask & (1u << j)) out.push_back(j);
  }
  return out;
}

OperatorWord SimplexRef::word() const {
  return OperatorWord::from_masks(generator_dim(), 0u, degeneracy_mask);
}

SimplexRef degenerate(const SimplexRef& x, std::uint32_t mask, int target_dim) {
  if (target_dim - std::popcount(mask) != x.dim || (mask & ~low_bits(target_dim))) {
    throw Error(ErrorCode::InvalidIndex, "degeneracy mask does not fit the simplex");
  }
  if (mask == 0) return x;
  if (x.degeneracy_mask == 0) return SimplexRef{target_dim, mask, x.generator};
  const auto outer = surjection_from_mask(mask, target_dim);
  const auto inner = surjection_from_mask(x.degeneracy_mask, x.dim);
  std::vector<int> composite(outer.size());
  for (std::size_t t = 0; t < outer.size(); ++t) composite[t] = inner[outer[t]];
  return SimplexRef{target_dim, collapse_mask(composite), x.generator};
}

SimplexRef apply_operator(const OperatorWord& w, const SimplexRef& x, const FaceLookup& faces) {
  if (w.source_dim() != x.dim) {
    throw Error(ErrorCode::InvalidIndex, "operator source dimension " +
                                             std::to_string(w.source_dim()) +
                                             " does not match simplex dimension " +
                                             std::to_string(x.dim));
  }
  if (w.face_mask() == 0) return degenerate(x, w.degeneracy_mask(), w.target_dim());

  // theta: [m] -> [k] describes the result as an operator applied to the
  // generator. Peel off missing vertices one face at a time.
  const auto theta_w = w.vertex_map();
  const auto eps_x = surjection_from_mask(x.degeneracy_mask, x.dim);
  std::vector<int> theta(theta_w.size());
  for (std::size_t t = 0; t < theta.size(); ++t) theta[t] = eps_x[theta_w[t]];
  int k = x.generator_dim();
  Index generator = x.generator;
  for (;;) {
    std::uint32_t image = 0;
    for (int v : theta) image |= 1u << v;
    const std::uint32_t missing = low_bits(k + 1) & ~image;
    if (missing == 0) {
      return SimplexRef{static_cast<int>(theta.size()) - 1, collapse_mask(theta), generator};
    }
    const int f = 31 - std::countl_zero(missing);
    const SimplexRef& face = faces(k, generator, f);
    const auto eps_face = surjection_from_mask(face.degeneracy_mask, face.dim);
    for (int& v : theta) v = eps_face[v > f ? v - 1 : v];
    k = face.generator_dim();
    generator = face.generator;
  }
}

std::uint64_t degeneracy_word_count(int k, int n) {
  if (k < 0 || k > n) return 0;
  // C(n, n - k)
  std::uint64_t result = 1;
  const int r = n - k;
  for (int t = 1; t <= r; ++t) result = result * static_cast<std::uint64_t>(n - r + t) / t;
  return result;
}

std::vector<std::uint32_t> degeneracy_masks(int k, int n) {
  std::vector<std::uint32_t> out;
  if (k < 0 || k > n) return out;
  const int r = n - k;
  if (r == 0) return {0u};
  for (std::uint32_t mask = 0; mask <= low_bits(n); ++mask) {
    if (std::popcount(mask) == r) out.push_back(mask);
    if (mask == low_bits(n)) break;
  }
  return out;
}

}  // namespace kanact
