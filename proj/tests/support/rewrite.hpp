#pragma once

#include <random>
#include <vector>

#include "kanact/operator_calculus.hpp"

namespace oracle {

using kanact::OperatorSymbol;

// One rewrite by a simplicial identity at a random matching position, either
// direction. Returns false when nothing applies.
inline bool rewrite(std::vector<OperatorSymbol>& w, std::mt19937& rng) {
  if (w.size() < 2) return false;
  const std::size_t start = rng() % (w.size() - 1);
  for (std::size_t off = 0; off + 1 < w.size(); ++off) {
    const std::size_t p = (start + off) % (w.size() - 1);
    auto& a = w[p];
    auto& b = w[p + 1];
    using K = OperatorSymbol::Kind;
    // d_i d_j -> d_{j-1} d_i (i < j)
    if (a.kind == K::face && b.kind == K::face && a.index < b.index) {
      const int i = a.index, j = b.index;
      a = OperatorSymbol::face(j - 1);
      b = OperatorSymbol::face(i);
      return true;
    }
    // d_a d_b with a >= b  <-  reverse of the rule above
    if (a.kind == K::face && b.kind == K::face && a.index >= b.index) {
      const int i = b.index, j = a.index + 1;
      a = OperatorSymbol::face(i);
      b = OperatorSymbol::face(j);
      return true;
    }
    // s_i s_j -> s_{j+1} s_i (i <= j)
    if (a.kind == K::degeneracy && b.kind == K::degeneracy && a.index <= b.index) {
      const int i = a.index, j = b.index;
      a = OperatorSymbol::degeneracy(j + 1);
      b = OperatorSymbol::degeneracy(i);
      return true;
    }
    if (a.kind == K::degeneracy && b.kind == K::degeneracy && a.index > b.index) {
      const int i = b.index, j = a.index - 1;
      a = OperatorSymbol::degeneracy(i);
      b = OperatorSymbol::degeneracy(j);
      return true;
    }
    if (a.kind == K::face && b.kind == K::degeneracy) {
      const int i = a.index, j = b.index;
      if (i < j) {
        a = OperatorSymbol::degeneracy(j - 1);
        b = OperatorSymbol::face(i);
        return true;
      }
      if (i == j || i == j + 1) {
        w.erase(w.begin() + p, w.begin() + p + 2);
        return true;
      }
      a = OperatorSymbol::degeneracy(j);
      b = OperatorSymbol::face(i - 1);
      return true;
    }
  }
  return false;
}

}  // namespace oracle
