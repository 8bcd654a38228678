#include "kanact/nerve.hpp"

#include "kanact/error.hpp"

namespace kanact {

namespace {

std::string tuple_name(const FiniteGroup& q, std::span<const Index> tuple) {
  std::string name;
  for (std::size_t i = 0; i < tuple.size(); ++i) name += (i ? "." : "") + q.element_name(tuple[i]);
  return name;
}

}  // namespace

SSetPresentation nerve_of_group(const FiniteGroup& q, int max_dim) {
  if (max_dim < 1) throw Error(ErrorCode::InvalidIndex, "nerve truncation must be at least 1");
  SSetPresentation out("N" + q.name(), max_dim);
  out.add_generator(0, "phi");
  std::vector<Index> others;
  for (Index a = 0; a < q.order(); ++a) {
    if (a != q.identity()) others.push_back(a);
  }
  std::vector<std::vector<std::vector<Index>>> tuples(max_dim + 1);
  tuples[0].push_back({});
  for (int n = 1; n <= max_dim; ++n) {
    for (const auto& t : tuples[n - 1]) {
      for (Index a : others) {
        auto next = t;
        next.push_back(a);
        out.add_generator(n, tuple_name(q, next));
        tuples[n].push_back(std::move(next));
      }
    }
  }
  for (int n = 1; n <= max_dim; ++n) {
    for (Index g = 0; g < out.generator_count(n); ++g) {
      const auto& t = tuples[n][g];
      std::vector<SimplexRef> faces;
      for (int i = 0; i <= n; ++i) {
        std::vector<Index> f;
        for (int p = 0; p < n; ++p) {
          if (i == 0 && p == 0) continue;
          if (i == n && p == n - 1) continue;
          if (i > 0 && i < n && p == i) continue;
          f.push_back(i > 0 && i < n && p == i - 1 ? q.multiply(t[p], t[p + 1]) : t[p]);
        }
        faces.push_back(nerve_simplex(q, out, f));
      }
      out.set_faces(n, g, std::move(faces));
    }
  }
  return out;
}

std::vector<Index> nerve_tuple(const FiniteGroup& q, const SSetPresentation& nerve,
                               const SimplexRef& x) {
  const int k = x.generator_dim();
  if (x.generator < 0 || x.generator >= nerve.generator_count(k)) {
    throw Error(ErrorCode::InvalidIndex, "simplex not in nerve");
  }
  // generators of dimension k are the k-digit numbers in base |Q| - 1
  const Index base = q.order() - 1;
  std::vector<Index> core(k);
  Index rest = x.generator;
  for (int p = k - 1; p >= 0; --p) {
    const Index digit = rest % base;
    rest /= base;
    core[p] = digit < q.identity() ? digit : digit + 1;
  }
  std::vector<Index> out;
  std::size_t next = 0;
  for (int p = 0; p < x.dim; ++p) {
    out.push_back((x.degeneracy_mask & (1u << p)) ? q.identity() : core[next++]);
  }
  return out;
}

SimplexRef nerve_simplex(const FiniteGroup& q, const SSetPresentation& nerve,
                         std::span<const Index> tuple) {
  const int n = static_cast<int>(tuple.size());
  const Index base = q.order() - 1;
  std::uint32_t mask = 0;
  Index g = 0;
  int k = 0;
  for (int p = 0; p < n; ++p) {
    if (tuple[p] == q.identity()) {
      mask |= 1u << p;
    } else {
      g = g * base + (tuple[p] < q.identity() ? tuple[p] : tuple[p] - 1);
      ++k;
    }
  }
  if (k > nerve.max_dim() || g >= nerve.generator_count(k)) {
    throw Error(ErrorCode::InvalidIndex, "tuple outside the nerve truncation");
  }
  return SimplexRef{n, mask, g};
}

SimplicialMap nerve_map(const FiniteGroup& q, const SSetPresentation& nerve,
                        std::span<const Index> automorphism) {
  SimplicialMap f;
  for (int n = 0; n <= nerve.max_dim(); ++n) {
    std::vector<Index> images(nerve.generator_count(n));
    for (Index g = 0; g < nerve.generator_count(n); ++g) {
      auto t = nerve_tuple(q, nerve, SimplexRef::nondegenerate(n, g));
      for (auto& a : t) a = automorphism[a];
      images[g] = nerve_simplex(q, nerve, t).generator;
    }
    f.generators.push_back(std::move(images));
  }
  return f;
}

}  // namespace kanact
