#include "kanact/pi_one.hpp"

#include "kanact/error.hpp"

namespace kanact {

namespace {

EdgeLetter letter_of(const SimplexRef& edge) {
  if (edge.degeneracy_mask != 0) return std::nullopt;
  return edge.generator;
}

std::string letter_text(const SSetPresentation& k, EdgeLetter letter) {
  return letter ? k.generator_name(1, *letter) : std::string("e");
}

}  // namespace

Pi1Presentation pi1_presentation(const SSetPresentation& k) {
  if (!k.reduced()) throw Error(ErrorCode::NotReduced, k.name() + " has more than one vertex");
  if (k.max_dim() < 2) throw Error(ErrorCode::NotReduced, k.name() + " is truncated below 2");
  Pi1Presentation p;
  p.generator_count = k.generator_count(1);
  for (Index z = 0; z < k.generator_count(2); ++z) {
    const auto& f = k.faces(2, z);
    p.relators.push_back(Relator{z, letter_of(f[1]), letter_of(f[0]), letter_of(f[2])});
  }
  return p;
}

std::string relator_text(const SSetPresentation& k, const Relator& r) {
  return letter_text(k, r.lhs) + " = " + letter_text(k, r.first) + " " + letter_text(k, r.second);
}

QuotientMap make_quotient(const SSetPresentation& k, FiniteGroup q, std::vector<Index> images) {
  if (static_cast<Index>(images.size()) != k.generator_count(1)) {
    throw Error(ErrorCode::SchemaError, "quotient needs one image per edge generator");
  }
  for (Index v : images) {
    if (v < 0 || v >= q.order()) throw Error(ErrorCode::InvalidIndex, "image outside the group");
  }
  QuotientMap map{std::move(q), std::move(images)};
  for (const auto& r : pi1_presentation(k).relators) {
    if (map.image(r.lhs) != map.group.multiply(map.image(r.first), map.image(r.second))) {
      throw Error(ErrorCode::RelatorViolation,
                  "relator " + relator_text(k, r) + " of " + k.generator_name(2, r.simplex) +
                      " does not hold in " + map.group.name());
    }
  }
  if (static_cast<Index>(map.group.generated_subgroup(map.images).size()) != map.group.order()) {
    throw Error(ErrorCode::InvariantViolation, "surjectivity onto " + map.group.name());
  }
  return map;
}

Index edge_class(const SSetPresentation& k, const QuotientMap& q, const SimplexRef& x) {
  if (x.dim < 1) throw Error(ErrorCode::InvalidIndex, "edge class of a vertex");
  SimplexRef edge = x;
  while (edge.dim > 1) edge = k.face(edge, 0);
  return q.image(letter_of(edge));
}

QuotientMap nerve_quotient(const SSetPresentation& nerve, const FiniteGroup& g,
                           const FiniteGroup& r, std::span<const Index> f,
                           NerveConvention convention) {
  if (!g.is_homomorphism_to(r, f)) {
    throw Error(ErrorCode::InvariantViolation, "quotient of a nerve needs a homomorphism");
  }
  std::vector<Index> images;
  for (Index e = 0; e < nerve.generator_count(1); ++e) {
    const Index a = e < g.identity() ? e : e + 1;
    images.push_back(convention == NerveConvention::direct ? f[a] : r.inverse(f[a]));
  }
  return make_quotient(nerve, r, std::move(images));
}

Permutation induced_automorphism(const SSetPresentation& k, const SimplicialMap& a,
                                 const QuotientMap& q, const std::optional<Permutation>& candidate) {
  auto compatible = [&](const Permutation& c) {
    for (Index e = 0; e < k.generator_count(1); ++e) {
      if (q.images[a.generators[1][e]] != c[q.images[e]]) return false;
    }
    return true;
  };
  if (candidate) {
    if (!is_automorphism(q.group, *candidate) || !compatible(*candidate)) {
      throw Error(ErrorCode::NoDescent, "supplied automorphism does not cover the action");
    }
    return *candidate;
  }
  std::optional<Permutation> found;
  for (const auto& c : automorphisms(q.group)) {
    if (!compatible(c)) continue;
    if (found) throw Error(ErrorCode::InvariantViolation, "descended automorphism is not unique");
    found = c;
  }
  if (!found) throw Error(ErrorCode::NoDescent, "kernel is not invariant under the action");
  return *found;
}

}  // namespace kanact
