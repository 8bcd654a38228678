#include "kanact/homology.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "kanact/error.hpp"
#include "kanact/nerve.hpp"

namespace kanact {

namespace {

struct Overflow {};

// Checked 64-bit arithmetic; the Smith reduction retries with BigInt when
// an entry outgrows it.
struct Checked {
  std::int64_t v = 0;
  Checked() = default;
  Checked(std::int64_t x) : v(x) {}
  friend Checked operator*(Checked a, Checked b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v, b.v, &r)) throw Overflow{};
    return r;
  }
  friend Checked operator-(Checked a, Checked b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v, b.v, &r)) throw Overflow{};
    return r;
  }
  friend Checked operator/(Checked a, Checked b) { return a.v / b.v; }
  friend Checked operator%(Checked a, Checked b) { return a.v % b.v; }
  friend bool operator==(Checked a, Checked b) { return a.v == b.v; }
  friend bool operator<(Checked a, Checked b) { return a.v < b.v; }
  bool is_zero() const { return v == 0; }
  Checked magnitude() const {
    if (v == INT64_MIN) throw Overflow{};
    return v < 0 ? -v : v;
  }
  BigInt big() const { return BigInt(v); }
};

struct Big {
  BigInt v;
  Big() = default;
  Big(BigInt x) : v(std::move(x)) {}
  Big(std::int64_t x) : v(x) {}
  friend Big operator*(const Big& a, const Big& b) { return Big(BigInt(a.v * b.v)); }
  friend Big operator-(const Big& a, const Big& b) { return Big(BigInt(a.v - b.v)); }
  friend Big operator/(const Big& a, const Big& b) { return Big(BigInt(a.v / b.v)); }
  friend Big operator%(const Big& a, const Big& b) { return Big(BigInt(a.v % b.v)); }
  friend bool operator==(const Big& a, const Big& b) { return a.v == b.v; }
  friend bool operator<(const Big& a, const Big& b) { return a.v < b.v; }
  bool is_zero() const { return v.is_zero(); }
  Big magnitude() const { return Big(BigInt(abs(v))); }
  BigInt big() const { return v; }
};

template <class T>
using Row = std::vector<std::pair<Index, T>>;

template <class T>
const T* find_entry(const Row<T>& row, Index c) {
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, Index key) { return e.first < key; });
  return it != row.end() && it->first == c ? &it->second : nullptr;
}

// row - q * pivot
template <class T>
Row<T> subtract(const Row<T>& row, const T& q, const Row<T>& pivot) {
  Row<T> out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, T(0) - q * pivot[j].second);
      ++j;
    } else {
      T v = row[i].second - q * pivot[j].second;
      if (!v.is_zero()) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

template <class T>
std::vector<BigInt> smith_diagonal(const SparseMatrix& m) {
  std::vector<Row<T>> rows;
  for (const auto& col : m.columns) {
    Row<T> row;
    for (const auto& [r, v] : col) row.emplace_back(r, T(v));
    if (!row.empty()) rows.push_back(std::move(row));
  }
  std::vector<BigInt> diagonal;
  std::vector<char> alive(rows.size(), 1);
  for (;;) {
    std::size_t pr = rows.size();
    std::size_t pe = 0;
    T best;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!alive[r] || rows[r].empty()) continue;
      for (std::size_t e = 0; e < rows[r].size(); ++e) {
        const T mag = rows[r][e].second.magnitude();
        if (pr == rows.size() || mag < best ||
            (mag == best && rows[r].size() < rows[pr].size())) {
          pr = r;
          pe = e;
          best = mag;
        }
      }
      if (best == T(1) && rows[pr].size() <= 2) break;
    }
    if (pr == rows.size()) break;
    const Index c = rows[pr][pe].first;
    const T p = rows[pr][pe].second;
    bool changed = false;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pr || !alive[r]) continue;
      const T* v = find_entry(rows[r], c);
      if (!v) continue;
      const T q = *v / p;
      if (!(*v % p).is_zero()) changed = true;
      rows[r] = subtract(rows[r], q, rows[pr]);
    }
    if (changed) continue;
    Row<T> rest;
    for (const auto& [col, w] : rows[pr]) {
      if (col == c) continue;
      T rem = w % p;
      if (!rem.is_zero()) rest.emplace_back(col, std::move(rem));
    }
    if (rest.empty()) {
      diagonal.push_back(best.big());
      alive[pr] = 0;
      rows[pr].clear();
    } else {
      rest.emplace_back(c, p);
      std::sort(rest.begin(), rest.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      rows[pr] = std::move(rest);
    }
  }
  std::sort(diagonal.begin(), diagonal.end());
  for (std::size_t i = 0; i < diagonal.size(); ++i) {
    for (std::size_t j = i + 1; j < diagonal.size(); ++j) {
      BigInt g = gcd(diagonal[i], diagonal[j]);
      BigInt l = diagonal[i] / g * diagonal[j];
      diagonal[i] = g;
      diagonal[j] = l;
    }
  }
  return diagonal;
}

std::int64_t mod(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  std::int64_t result = 1;
  std::int64_t base = mod(a, p);
  for (std::int64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return result;
}

}  // namespace

std::int64_t SparseMatrix::at(Index r, Index c) const {
  for (const auto& [row, v] : columns.at(c)) {
    if (row == r) return v;
  }
  return 0;
}

std::vector<std::vector<std::int64_t>> SparseMatrix::dense() const {
  std::vector<std::vector<std::int64_t>> out(rows, std::vector<std::int64_t>(cols, 0));
  for (Index c = 0; c < cols; ++c) {
    for (const auto& [r, v] : columns[c]) out[r][c] = v;
  }
  return out;
}

ChainComplex boundary_matrices(const SSetPresentation& x) {
  ChainComplex c;
  c.top = x.max_dim();
  for (int n = 0; n <= c.top; ++n) c.ranks.push_back(x.generator_count(n));
  c.boundary.resize(c.top + 1);
  for (int n = 1; n <= c.top; ++n) {
    auto& d = c.boundary[n];
    d.rows = c.ranks[n - 1];
    d.cols = c.ranks[n];
    d.columns.resize(d.cols);
    for (Index g = 0; g < d.cols; ++g) {
      std::map<Index, std::int64_t> entries;
      const auto& faces = x.faces(n, g);
      for (int i = 0; i <= n; ++i) {
        if (faces[i].degeneracy_mask == 0) entries[faces[i].generator] += (i % 2 == 0) ? 1 : -1;
      }
      for (const auto& [r, v] : entries) {
        if (v != 0) d.columns[g].emplace_back(r, v);
      }
    }
  }
  for (int n = 2; n <= c.top; ++n) {
    for (Index g = 0; g < c.ranks[n]; ++g) {
      std::map<Index, std::int64_t> sum;
      for (const auto& [mid, v] : c.boundary[n].columns[g]) {
        for (const auto& [r, w] : c.boundary[n - 1].columns[mid]) sum[r] += v * w;
      }
      for (const auto& [r, v] : sum) {
        if (v != 0) {
          throw Error(ErrorCode::InvariantViolation,
                      "d d != 0 on " + x.generator_name(n, g) + " of " + x.name());
        }
      }
    }
  }
  return c;
}

SmithForm smith_normal_form(const SparseMatrix& m) {
  std::vector<BigInt> diagonal;
  try {
    diagonal = smith_diagonal<Checked>(m);
  } catch (const Overflow&) {
    diagonal = smith_diagonal<Big>(m);
  }
  return SmithForm{static_cast<Index>(diagonal.size()), std::move(diagonal)};
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

Index rank_mod_p(const SparseMatrix& m, int p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  std::map<Index, Row<Checked>> pivots;
  Index rank = 0;
  for (const auto& col : m.columns) {
    Row<Checked> v;
    for (const auto& [r, x] : col) {
      const std::int64_t y = mod(x, p);
      if (y != 0) v.emplace_back(r, y);
    }
    while (!v.empty()) {
      auto it = pivots.find(v.front().first);
      if (it == pivots.end()) {
        const std::int64_t inv = inverse_mod(v.front().second.v, p);
        for (auto& e : v) e.second = e.second.v * inv % p;
        pivots.emplace(v.front().first, std::move(v));
        ++rank;
        break;
      }
      v = subtract(v, v.front().second, it->second);
      Row<Checked> reduced;
      for (auto& e : v) {
        const std::int64_t y = mod(e.second.v, p);
        if (y != 0) reduced.emplace_back(e.first, y);
      }
      v = std::move(reduced);
    }
  }
  return rank;
}

std::vector<Index> HomologyResult::dimensions() const {
  std::vector<Index> out;
  for (const auto& d : degrees) out.push_back(prime ? d.dimension : d.free_rank);
  return out;
}

HomologyResult integral_homology(const ChainComplex& c) {
  HomologyResult result;
  result.reliable_up_to = c.top - 1;
  std::vector<SmithForm> snf(c.top + 1);
  for (int n = 1; n <= c.top; ++n) snf[n] = smith_normal_form(c.boundary[n]);
  for (int n = 0; n < c.top; ++n) {
    DegreeHomology d;
    const Index below = n >= 1 ? snf[n].rank : 0;
    d.free_rank = c.ranks[n] - below - snf[n + 1].rank;
    for (const auto& v : snf[n + 1].diagonal) {
      if (v > 1) d.torsion.push_back(v);
    }
    d.dimension = d.free_rank;
    result.degrees.push_back(std::move(d));
  }
  return result;
}

HomologyResult mod_p_cohomology(const ChainComplex& c, int p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  HomologyResult result;
  result.prime = p;
  result.reliable_up_to = c.top - 1;
  std::vector<Index> ranks(c.top + 1, 0);
  for (int n = 1; n <= c.top; ++n) ranks[n] = rank_mod_p(c.boundary[n], p);
  for (int n = 0; n < c.top; ++n) {
    DegreeHomology d;
    d.dimension = c.ranks[n] - ranks[n] - ranks[n + 1];
    result.degrees.push_back(std::move(d));
  }
  return result;
}

bool universal_coefficients_hold(const HomologyResult& integral, const HomologyResult& mod_p) {
  if (!mod_p.prime || integral.degrees.size() != mod_p.degrees.size()) return false;
  const int p = *mod_p.prime;
  auto divisible = [p](const DegreeHomology& d) {
    Index count = 0;
    for (const auto& t : d.torsion) count += (t % p == 0) ? 1 : 0;
    return count;
  };
  for (std::size_t n = 0; n < integral.degrees.size(); ++n) {
    Index expected = integral.degrees[n].free_rank + divisible(integral.degrees[n]);
    if (n > 0) expected += divisible(integral.degrees[n - 1]);
    if (expected != mod_p.degrees[n].dimension) return false;
  }
  return true;
}

std::vector<Index> group_cohomology(const FiniteGroup& g, int p, int degree_bound) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  const int top = degree_bound + 1;
  std::size_t count = 0;
  std::size_t layer = 1;
  for (int n = 1; n <= top; ++n) {
    layer *= static_cast<std::size_t>(g.order() - 1);
    count += layer;
    if (count > kNerveGeneratorBound) {
      throw Error(ErrorCode::BoundExceeded, "nerve of " + g.name() + " too large at degree " +
                                                std::to_string(degree_bound));
    }
  }
  return mod_p_cohomology(boundary_matrices(nerve_of_group(g, std::max(top, 1))), p).dimensions();
}

std::string format_group(const DegreeHomology& d) {
  std::ostringstream out;
  bool first = true;
  if (d.free_rank > 0) {
    out << "Z";
    if (d.free_rank > 1) out << "^" << d.free_rank;
    first = false;
  }
  for (const auto& t : d.torsion) {
    out << (first ? "" : " + ") << "Z/" << t;
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace kanact
