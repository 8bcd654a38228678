#pragma once

// Slow, direct reimplementations used as test oracles. Nothing here calls the
// library routine it is compared against.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "kanact/groups.hpp"
#include "kanact/operator_calculus.hpp"
#include "kanact/simplicial_set.hpp"

namespace oracle {

using kanact::Index;
using kanact::OperatorSymbol;

// Acts on the generic simplex [0..n] as a vertex list: d_i erases entry i,
// s_j repeats entry j. Last symbol acts first.
inline std::vector<int> vertex_list(const std::vector<OperatorSymbol>& word, int n) {
  std::vector<int> v(n + 1);
  std::iota(v.begin(), v.end(), 0);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (it->kind == OperatorSymbol::Kind::face) {
      v.erase(v.begin() + it->index);
    } else {
      v.insert(v.begin() + it->index, v[it->index]);
    }
  }
  return v;
}

// Canonical s..d.. data read off a vertex list.
struct Canonical {
  std::vector<int> faces;         // increasing: vertices not hit
  std::vector<int> degeneracies;  // decreasing: j with v[j] == v[j+1]
};

inline Canonical canonical(const std::vector<int>& v, int n) {
  Canonical c;
  for (int x = 0; x <= n; ++x) {
    if (std::find(v.begin(), v.end(), x) == v.end()) c.faces.push_back(x);
  }
  for (int j = static_cast<int>(v.size()) - 2; j >= 0; --j) {
    if (v[j] == v[j + 1]) c.degeneracies.push_back(j);
  }
  return c;
}

// A random valid word starting in dimension n.
inline std::vector<OperatorSymbol> random_word(std::mt19937& rng, int n, int length, int max_dim) {
  std::vector<OperatorSymbol> reversed;
  int dim = n;
  for (int t = 0; t < length; ++t) {
    const bool face = dim > 0 && (dim >= max_dim || rng() % 2 == 0);
    if (face) {
      reversed.push_back(OperatorSymbol::face(static_cast<int>(rng() % (dim + 1))));
      --dim;
    } else {
      reversed.push_back(OperatorSymbol::degeneracy(static_cast<int>(rng() % (dim + 1))));
      ++dim;
    }
  }
  return {reversed.rbegin(), reversed.rend()};
}

// Every element tuple of length n.
inline std::vector<std::vector<Index>> all_tuples(Index order, int n) {
  std::vector<std::vector<Index>> out{{}};
  for (int t = 0; t < n; ++t) {
    std::vector<std::vector<Index>> next;
    for (const auto& p : out) {
      for (Index a = 0; a < order; ++a) {
        auto q = p;
        q.push_back(a);
        next.push_back(std::move(q));
      }
    }
    out = std::move(next);
  }
  return out;
}

// Bar-construction faces on tuples.
inline std::vector<Index> nerve_face(const kanact::FiniteGroup& g, const std::vector<Index>& t,
                                     int i) {
  const int n = static_cast<int>(t.size());
  std::vector<Index> out;
  for (int k = 0; k < n; ++k) {
    if (i == 0 && k == 0) continue;
    if (i == n && k == n - 1) continue;
    if (i > 0 && i < n && k == i) continue;
    if (i > 0 && i < n && k == i - 1) {
      out.push_back(g.multiply(t[i - 1], t[i]));
    } else {
      out.push_back(t[k]);
    }
  }
  return out;
}

// Every horn Lambda^{n+1}_k of n-tuples has a filler; brute force over all
// compatible families.
inline bool nerve_kan(const kanact::FiniteGroup& g, int n) {
  const auto simplices = all_tuples(g.order(), n);
  const auto fillers = all_tuples(g.order(), n + 1);
  for (int k = 0; k <= n + 1; ++k) {
    std::set<std::vector<std::vector<Index>>> filled;
    for (const auto& z : fillers) {
      std::vector<std::vector<Index>> key;
      for (int i = 0; i <= n + 1; ++i) {
        if (i != k) key.push_back(nerve_face(g, z, i));
      }
      filled.insert(std::move(key));
    }
    // Enumerate families x_i (i != k) and test compatibility.
    const int slots = n + 1;
    std::vector<std::size_t> pick(slots, 0);
    while (true) {
      std::vector<std::vector<Index>> family;
      std::vector<int> index;
      for (int s = 0, i = 0; i <= n + 1; ++i) {
        if (i == k) continue;
        family.push_back(simplices[pick[s++]]);
        index.push_back(i);
      }
      bool compatible = true;
      if (n >= 1) {
        for (std::size_t a = 0; a < index.size() && compatible; ++a) {
          for (std::size_t b = a + 1; b < index.size() && compatible; ++b) {
            // d_i x_j = d_{j-1} x_i for i < j
            compatible = nerve_face(g, family[b], index[a]) == nerve_face(g, family[a], index[b] - 1);
          }
        }
      }
      if (compatible && !filled.count(family)) return false;
      std::size_t s = 0;
      while (s < pick.size() && ++pick[s] == simplices.size()) pick[s++] = 0;
      if (s == pick.size()) break;
    }
  }
  return true;
}

// Simplices agreeing on every face but the k-th agree on the k-th.
inline bool nerve_minimal(const kanact::FiniteGroup& g, int n) {
  const auto simplices = all_tuples(g.order(), n);
  for (int k = 0; k <= n; ++k) {
    std::map<std::vector<std::vector<Index>>, std::vector<Index>> seen;
    for (const auto& x : simplices) {
      std::vector<std::vector<Index>> key;
      for (int i = 0; i <= n; ++i) {
        if (i != k) key.push_back(nerve_face(g, x, i));
      }
      const auto [it, fresh] = seen.emplace(key, x);
      if (!fresh && nerve_face(g, it->second, k) != nerve_face(g, x, k)) return false;
    }
  }
  return true;
}

using Dense = std::vector<std::vector<std::int64_t>>;

// Integer Smith normal form by the textbook row/column algorithm. Entries
// must stay small; returns the nonzero invariant factors.
inline std::vector<std::int64_t> smith_diagonal(Dense m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<std::int64_t> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // smallest nonzero in the remaining block
    std::size_t pr = rows, pc = cols;
    for (std::size_t r = t; r < rows; ++r) {
      for (std::size_t c = t; c < cols; ++c) {
        if (m[r][c] != 0 && (pr == rows || std::llabs(m[r][c]) < std::llabs(m[pr][pc]))) {
          pr = r;
          pc = c;
        }
      }
    }
    if (pr == rows) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        const auto q = m[r][t] / m[t][t];
        for (std::size_t c = t; c < cols; ++c) m[r][c] -= q * m[t][c];
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        const auto q = m[t][c] / m[t][t];
        for (std::size_t r = t; r < rows; ++r) m[r][c] -= q * m[r][t];
      }
      for (std::size_t r = t + 1; r < rows && clean; ++r) {
        if (m[r][t] != 0) {
          std::swap(m[t], m[r]);
          clean = false;
        }
      }
      for (std::size_t c = t + 1; c < cols && clean; ++c) {
        if (m[t][c] != 0) {
          for (auto& row : m) std::swap(row[t], row[c]);
          clean = false;
        }
      }
      if (clean) {
        // pivot must divide the rest of the block
        for (std::size_t r = t + 1; r < rows && clean; ++r) {
          for (std::size_t c = t + 1; c < cols && clean; ++c) {
            if (m[r][c] % m[t][t] != 0) {
              for (std::size_t cc = t; cc < cols; ++cc) m[t][cc] += m[r][cc];
              clean = false;
            }
          }
        }
      }
    }
    diag.push_back(std::llabs(m[t][t]));
    ++t;
  }
  return diag;
}

inline std::size_t rank_mod_p(Dense m, int p) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (auto& row : m) {
    for (auto& x : row) x = ((x % p) + p) % p;
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    std::int64_t inv = 1;
    while ((m[rank][c] * inv) % p != 1) ++inv;
    for (auto& x : m[rank]) x = (x * inv) % p;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const auto f = m[r][c];
      for (std::size_t cc = 0; cc < cols; ++cc) m[r][cc] = ((m[r][cc] - f * m[rank][cc]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

// Normalized chain boundary d_n as a dense matrix, rows = (n-1)-generators.
inline Dense boundary(const kanact::SSetPresentation& x, int n) {
  Dense m(x.generator_count(n - 1), std::vector<std::int64_t>(x.generator_count(n), 0));
  for (Index g = 0; g < x.generator_count(n); ++g) {
    const auto& faces = x.faces(n, g);
    for (int i = 0; i <= n; ++i) {
      if (faces[i].degeneracy_mask != 0) continue;
      m[faces[i].generator][g] += (i % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

struct Homology {
  int free_rank = 0;
  std::vector<std::int64_t> torsion;
};

// H_n for 0 <= n < top from dense Smith forms.
inline std::vector<Homology> homology(const kanact::SSetPresentation& x) {
  const int top = x.max_dim();
  std::vector<std::vector<std::int64_t>> diag(top + 2);
  for (int n = 1; n <= top; ++n) diag[n] = smith_diagonal(boundary(x, n));
  std::vector<Homology> out;
  for (int n = 0; n < top; ++n) {
    Homology h;
    const int rank_in = n >= 1 ? static_cast<int>(diag[n].size()) : 0;
    h.free_rank = x.generator_count(n) - rank_in - static_cast<int>(diag[n + 1].size());
    for (auto d : diag[n + 1]) {
      if (d > 1) h.torsion.push_back(d);
    }
    out.push_back(h);
  }
  return out;
}

// Automorphisms by trying every bijection of the elements.
inline std::size_t automorphism_count(const kanact::FiniteGroup& g) {
  std::vector<Index> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  std::size_t count = 0;
  do {
    bool hom = true;
    for (Index a = 0; a < g.order() && hom; ++a) {
      for (Index b = 0; b < g.order() && hom; ++b) {
        hom = p[g.multiply(a, b)] == g.multiply(p[a], p[b]);
      }
    }
    if (hom) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

}  // namespace oracle
