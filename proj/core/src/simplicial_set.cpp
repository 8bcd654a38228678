#include "kanact/simplicial_set.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <set>
#include <unordered_set>

#include "kanact/error.hpp"

namespace kanact {

namespace {

struct PositionsHash {
  std::size_t operator()(const std::vector<std::size_t>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (std::size_t x : v) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

std::uint32_t remove_common(std::uint32_t mask, std::uint32_t common) {
  std::uint32_t out = 0;
  for (int j = 0; j < 32; ++j) {
    if (!(mask & (1u << j)) || (common & (1u << j))) continue;
    out |= 1u << (j - std::popcount(common & ((1u << j) - 1u)));
  }
  return out;
}

}  // namespace

SSetPresentation::SSetPresentation(std::string name, int max_dim)
    : name_(std::move(name)), max_dim_(max_dim) {
  if (max_dim < 0 || max_dim > kMaxDimension) {
    throw Error(ErrorCode::InvalidIndex, "max_dim out of range");
  }
  names_.resize(max_dim + 1);
  faces_.resize(max_dim + 1);
}

Index SSetPresentation::add_generator(int dim, std::string name) {
  if (dim < 0 || dim > max_dim_) {
    throw Error(ErrorCode::InvalidIndex, "generator dimension " + std::to_string(dim) +
                                             " outside 0.." + std::to_string(max_dim_));
  }
  const auto index = static_cast<Index>(names_[dim].size());
  if (!lookup_.emplace(name, GeneratorId{dim, index}).second) {
    throw Error(ErrorCode::InvariantViolation, "duplicate generator name '" + name + "'");
  }
  names_[dim].push_back(std::move(name));
  faces_[dim].emplace_back();
  return index;
}

void SSetPresentation::set_faces(int dim, Index generator, std::vector<SimplexRef> faces) {
  if (dim < 1 || dim > max_dim_ || generator < 0 || generator >= generator_count(dim)) {
    throw Error(ErrorCode::InvalidIndex, "no generator to attach faces to");
  }
  if (static_cast<int>(faces.size()) != dim + 1) {
    throw Error(ErrorCode::InvariantViolation,
                "generator " + names_[dim][generator] + " needs " + std::to_string(dim + 1) +
                    " faces");
  }
  for (const auto& f : faces) {
    const int k = f.generator_dim();
    if (f.dim != dim - 1 || k < 0 || f.generator < 0 || f.generator >= generator_count(k) ||
        (f.degeneracy_mask >> std::max(f.dim, 0)) != 0) {
      throw Error(ErrorCode::InvariantViolation,
                  "bad face entry for generator " + names_[dim][generator]);
    }
  }
  faces_[dim][generator] = std::move(faces);
}

Index SSetPresentation::generator_count(int dim) const {
  if (dim < 0 || dim > max_dim_) return 0;
  return static_cast<Index>(names_[dim].size());
}

const std::string& SSetPresentation::generator_name(int dim, Index generator) const {
  if (generator < 0 || generator >= generator_count(dim)) {
    throw Error(ErrorCode::InvalidIndex, "generator index out of range");
  }
  return names_[dim][generator];
}

std::optional<GeneratorId> SSetPresentation::find(std::string_view name) const {
  auto it = lookup_.find(std::string(name));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

GeneratorId SSetPresentation::require(std::string_view name) const {
  auto id = find(name);
  if (!id) {
    throw Error(ErrorCode::SchemaError,
                "unknown generator '" + std::string(name) + "' in " + name_);
  }
  return *id;
}

bool SSetPresentation::has_faces(int dim, Index generator) const {
  return dim >= 1 && generator >= 0 && generator < generator_count(dim) &&
         !faces_[dim][generator].empty();
}

const std::vector<SimplexRef>& SSetPresentation::faces(int dim, Index generator) const {
  if (!has_faces(dim, generator)) {
    throw Error(ErrorCode::MissingFaceEntry, "no faces for generator of dimension " +
                                                 std::to_string(dim) + " index " +
                                                 std::to_string(generator));
  }
  return faces_[dim][generator];
}

const SimplexRef& SSetPresentation::generator_face(int dim, Index generator, int i) const {
  const auto& f = faces(dim, generator);
  if (i < 0 || i > dim) throw Error(ErrorCode::IndexOutOfRange, "face index out of range");
  return f[i];
}

FaceLookup SSetPresentation::lookup() const {
  return [this](int dim, Index generator, int i) -> const SimplexRef& {
    return generator_face(dim, generator, i);
  };
}

SimplexRef SSetPresentation::face(const SimplexRef& x, int i) const {
  if (x.dim < 1 || i < 0 || i > x.dim) {
    throw Error(ErrorCode::IndexOutOfRange,
                "d" + std::to_string(i) + " on a " + std::to_string(x.dim) + "-simplex");
  }
  if (x.degeneracy_mask == 0) return generator_face(x.dim, x.generator, i);
  return apply_operator(OperatorWord::from_masks(x.dim, 1u << i, 0u), x, lookup());
}

SimplexRef SSetPresentation::apply(const OperatorWord& w, const SimplexRef& x) const {
  return apply_operator(w, x, lookup());
}

std::string SSetPresentation::simplex_name(const SimplexRef& x) const {
  const std::string& base = generator_name(x.generator_dim(), x.generator);
  if (x.degeneracy_mask == 0) return base;
  std::string out;
  for (int j : x.degeneracies()) out += "s" + std::to_string(j);
  return out + "(" + base + ")";
}

SimplexRef SSetPresentation::parse_simplex(std::string_view text) const {
  if (auto id = find(text)) return SimplexRef::nondegenerate(id->dim, id->index);
  std::vector<int> degens;
  std::size_t pos = 0;
  while (pos < text.size() && text[pos] == 's') {
    std::size_t end = pos + 1;
    int value = 0;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) {
      value = value * 10 + (text[end] - '0');
      ++end;
    }
    if (end == pos + 1) break;
    degens.push_back(value);
    pos = end;
  }
  if (degens.empty() || pos >= text.size() || text[pos] != '(' || text.back() != ')') {
    throw Error(ErrorCode::SchemaError, "unknown simplex '" + std::string(text) + "'");
  }
  const auto id = require(text.substr(pos + 1, text.size() - pos - 2));
  return SimplexRef::from_degeneracies(degens, id.index, id.dim);
}

bool operator==(const SSetPresentation& a, const SSetPresentation& b) {
  return a.name_ == b.name_ && a.max_dim_ == b.max_dim_ && a.names_ == b.names_ &&
         a.faces_ == b.faces_;
}

std::vector<SimplexRef> enumerate_simplices(const SSetPresentation& x, int n) {
  std::vector<SimplexRef> out;
  if (n < 0 || n > x.max_dim()) return out;
  for (int k = n; k >= 0; --k) {
    const auto masks = degeneracy_masks(k, n);
    for (Index g = 0; g < x.generator_count(k); ++g) {
      for (auto m : masks) out.push_back(SimplexRef{n, m, g});
    }
  }
  return out;
}

std::size_t simplex_count(const SSetPresentation& x, int n) {
  std::size_t total = 0;
  for (int k = 0; k <= n; ++k) {
    total += static_cast<std::size_t>(x.generator_count(k)) * degeneracy_word_count(k, n);
  }
  return total;
}

ValidationReport validate(const SSetPresentation& x) {
  ValidationReport report;
  for (int n = 1; n <= x.max_dim(); ++n) {
    for (Index g = 0; g < x.generator_count(n); ++g) {
      if (!x.has_faces(n, g)) {
        report.structural.push_back("missing faces for " + x.generator_name(n, g));
      }
    }
  }
  if (!report.structural.empty()) return report;
  for (int n = 2; n <= x.max_dim(); ++n) {
    for (Index g = 0; g < x.generator_count(n); ++g) {
      const auto& f = x.faces(n, g);
      for (int j = 1; j <= n; ++j) {
        for (int i = 0; i < j; ++i) {
          if (x.face(f[j], i) != x.face(f[i], j - 1)) {
            report.identities.push_back(IdentityViolation{n, g, i, j});
          }
        }
      }
    }
  }
  return report;
}

std::string describe(const SSetPresentation& x, const IdentityViolation& v) {
  return "d" + std::to_string(v.i) + " d" + std::to_string(v.j) + " != d" +
         std::to_string(v.j - 1) + " d" + std::to_string(v.i) + " on generator " +
         x.generator_name(v.dim, v.generator);
}

SimplexTable::SimplexTable(const SSetPresentation& x, int max_dim) : max_dim_(max_dim) {
  if (max_dim > x.max_dim()) {
    throw Error(ErrorCode::InvalidIndex, "table dimension exceeds truncation");
  }
  simplices_.resize(max_dim + 1);
  positions_.resize(max_dim + 1);
  faces_.resize(max_dim + 1);
  for (int n = 0; n <= max_dim; ++n) {
    simplices_[n] = enumerate_simplices(x, n);
    for (std::size_t p = 0; p < simplices_[n].size(); ++p) positions_[n].emplace(simplices_[n][p], p);
    if (n == 0) continue;
    faces_[n].resize(simplices_[n].size() * (n + 1));
    for (std::size_t p = 0; p < simplices_[n].size(); ++p) {
      for (int i = 0; i <= n; ++i) faces_[n][p * (n + 1) + i] = position(x.face(simplices_[n][p], i));
    }
  }
}

std::size_t SimplexTable::position(const SimplexRef& s) const {
  if (s.dim < 0 || s.dim > max_dim_) throw Error(ErrorCode::InvalidIndex, "simplex outside table");
  auto it = positions_[s.dim].find(s);
  if (it == positions_[s.dim].end()) throw Error(ErrorCode::InvalidIndex, "unknown simplex");
  return it->second;
}

void for_each_horn(const SimplexTable& table, int n, int k,
                   const std::function<void(const std::vector<std::size_t>&)>& visit) {
  const auto& xs = table.simplices(n);
  std::vector<int> slots;
  for (int j = 0; j <= n + 1; ++j) {
    if (j != k) slots.push_back(j);
  }
  // by_face[i][f]: n-simplices whose i-th face is f.
  std::vector<std::vector<std::vector<std::size_t>>> by_face;
  if (n >= 1) {
    by_face.assign(n + 1, std::vector<std::vector<std::size_t>>(table.simplices(n - 1).size()));
    for (std::size_t p = 0; p < xs.size(); ++p) {
      for (int i = 0; i <= n; ++i) by_face[i][table.face(n, p, i)].push_back(p);
    }
  }
  std::vector<std::size_t> assignment(n + 2, 0);
  std::vector<std::size_t> all(xs.size());
  for (std::size_t p = 0; p < all.size(); ++p) all[p] = p;

  auto search = [&](auto&& self, std::size_t depth) -> void {
    if (depth == slots.size()) {
      visit(assignment);
      return;
    }
    const int j = slots[depth];
    const std::vector<std::size_t>* candidates = &all;
    if (n >= 1 && depth > 0) {
      const int i0 = slots[0];
      candidates = &by_face[i0][table.face(n, assignment[i0], j - 1)];
    }
    for (std::size_t c : *candidates) {
      bool ok = true;
      for (std::size_t d = 1; d < depth && ok && n >= 1; ++d) {
        const int i = slots[d];
        ok = table.face(n, c, i) == table.face(n, assignment[i], j - 1);
      }
      if (!ok) continue;
      assignment[j] = c;
      self(self, depth + 1);
    }
  };
  search(search, 0);
}

KanReport check_kan(const SSetPresentation& x, int up_to_dim) {
  if (up_to_dim < 0 || up_to_dim + 1 > x.max_dim()) {
    throw Error(ErrorCode::InvalidIndex, "horn check needs up_to_dim + 1 <= max_dim");
  }
  SimplexTable table(x, up_to_dim + 1);
  KanReport report;
  report.up_to_dim = up_to_dim;
  for (int n = 0; n <= up_to_dim; ++n) {
    const auto& fillers = table.simplices(n + 1);
    for (int k = 0; k <= n + 1; ++k) {
      std::unordered_set<std::vector<std::size_t>, PositionsHash> filled;
      for (std::size_t p = 0; p < fillers.size(); ++p) {
        std::vector<std::size_t> key;
        for (int i = 0; i <= n + 1; ++i) {
          if (i != k) key.push_back(table.face(n + 1, p, i));
        }
        filled.insert(std::move(key));
      }
      for_each_horn(table, n, k, [&](const std::vector<std::size_t>& horn) {
        ++report.horns_checked;
        std::vector<std::size_t> key;
        for (int i = 0; i <= n + 1; ++i) {
          if (i != k) key.push_back(horn[i]);
        }
        if (filled.count(key)) return;
        Horn h{n, k, {}};
        for (int i = 0; i <= n + 1; ++i) {
          h.faces.push_back(i == k ? SimplexRef{} : table.simplices(n)[horn[i]]);
        }
        report.unfillable.push_back(std::move(h));
      });
    }
  }
  return report;
}

MinimalityReport check_minimal(const SSetPresentation& x, int up_to_dim) {
  if (up_to_dim > x.max_dim()) {
    throw Error(ErrorCode::InvalidIndex, "minimality check beyond truncation");
  }
  SimplexTable table(x, up_to_dim);
  MinimalityReport report;
  report.up_to_dim = up_to_dim;
  for (int n = 1; n <= up_to_dim; ++n) {
    const auto& xs = table.simplices(n);
    for (int k = 0; k <= n; ++k) {
      std::unordered_map<std::vector<std::size_t>, std::size_t, PositionsHash> first;
      for (std::size_t p = 0; p < xs.size(); ++p) {
        std::vector<std::size_t> key;
        for (int i = 0; i <= n; ++i) {
          if (i != k) key.push_back(table.face(n, p, i));
        }
        auto [it, inserted] = first.emplace(std::move(key), p);
        if (!inserted && table.face(n, it->second, k) != table.face(n, p, k)) {
          report.violations.push_back(MinimalityViolation{xs[it->second], xs[p], k});
        }
      }
    }
  }
  return report;
}

SSetPresentation truncate(const SSetPresentation& x, int n) {
  n = std::min(n, x.max_dim());
  SSetPresentation out(x.name(), n);
  for (int d = 0; d <= n; ++d) {
    for (Index g = 0; g < x.generator_count(d); ++g) out.add_generator(d, x.generator_name(d, g));
  }
  for (int d = 1; d <= n; ++d) {
    for (Index g = 0; g < x.generator_count(d); ++g) {
      if (x.has_faces(d, g)) out.set_faces(d, g, x.faces(d, g));
    }
  }
  return out;
}

SSetPresentation subcomplex(const SSetPresentation& x, const std::vector<std::vector<bool>>& keep,
                            std::string name) {
  SSetPresentation out(std::move(name), x.max_dim());
  std::vector<std::vector<Index>> renumber(x.max_dim() + 1);
  for (int d = 0; d <= x.max_dim(); ++d) {
    renumber[d].assign(x.generator_count(d), -1);
    for (Index g = 0; g < x.generator_count(d); ++g) {
      if (d < static_cast<int>(keep.size()) && g < static_cast<Index>(keep[d].size()) && keep[d][g]) {
        renumber[d][g] = out.add_generator(d, x.generator_name(d, g));
      }
    }
  }
  for (int d = 1; d <= x.max_dim(); ++d) {
    for (Index g = 0; g < x.generator_count(d); ++g) {
      if (renumber[d][g] < 0) continue;
      std::vector<SimplexRef> faces;
      for (const auto& f : x.faces(d, g)) {
        const Index mapped = renumber[f.generator_dim()][f.generator];
        if (mapped < 0) {
          throw Error(ErrorCode::InvariantViolation,
                      "subcomplex not closed under faces at " + x.generator_name(d, g));
        }
        faces.push_back(SimplexRef{f.dim, f.degeneracy_mask, mapped});
      }
      out.set_faces(d, renumber[d][g], std::move(faces));
    }
  }
  return out;
}

SimplicialMap identity_simplicial_map(const SSetPresentation& x) {
  SimplicialMap f;
  for (int d = 0; d <= x.max_dim(); ++d) {
    std::vector<Index> ids(x.generator_count(d));
    for (Index g = 0; g < x.generator_count(d); ++g) ids[g] = g;
    f.generators.push_back(std::move(ids));
  }
  return f;
}

SimplicialMap compose(const SimplicialMap& outer, const SimplicialMap& inner) {
  SimplicialMap f;
  for (std::size_t d = 0; d < inner.generators.size(); ++d) {
    std::vector<Index> ids(inner.generators[d].size());
    for (std::size_t g = 0; g < ids.size(); ++g) ids[g] = outer.generators[d][inner.generators[d][g]];
    f.generators.push_back(std::move(ids));
  }
  return f;
}

SimplicialMap inverse(const SimplicialMap& f) {
  SimplicialMap out;
  for (const auto& ids : f.generators) {
    std::vector<Index> inv(ids.size());
    for (std::size_t g = 0; g < ids.size(); ++g) inv[ids[g]] = static_cast<Index>(g);
    out.generators.push_back(std::move(inv));
  }
  return out;
}

bool is_isomorphism(const SSetPresentation& x, const SSetPresentation& y, const SimplicialMap& f) {
  if (x.max_dim() != y.max_dim() ||
      static_cast<int>(f.generators.size()) != x.max_dim() + 1) {
    return false;
  }
  for (int d = 0; d <= x.max_dim(); ++d) {
    if (x.generator_count(d) != y.generator_count(d) ||
        static_cast<Index>(f.generators[d].size()) != x.generator_count(d)) {
      return false;
    }
    std::vector<char> hit(y.generator_count(d), 0);
    for (Index v : f.generators[d]) {
      if (v < 0 || v >= y.generator_count(d) || hit[v]) return false;
      hit[v] = 1;
    }
  }
  for (int d = 1; d <= x.max_dim(); ++d) {
    for (Index g = 0; g < x.generator_count(d); ++g) {
      const auto& fx = x.faces(d, g);
      const auto& fy = y.faces(d, f.generators[d][g]);
      for (int i = 0; i <= d; ++i) {
        if (f(fx[i]) != fy[i]) return false;
      }
    }
  }
  return true;
}

std::optional<SimplicialMap> find_isomorphism(const SSetPresentation& x,
                                              const SSetPresentation& y) {
  if (x.max_dim() != y.max_dim()) return std::nullopt;
  const int top = x.max_dim();
  for (int d = 0; d <= top; ++d) {
    if (x.generator_count(d) != y.generator_count(d)) return std::nullopt;
  }
  std::vector<std::map<std::vector<SimplexRef>, std::vector<Index>>> by_faces(top + 1);
  for (int d = 1; d <= top; ++d) {
    for (Index g = 0; g < y.generator_count(d); ++g) by_faces[d][y.faces(d, g)].push_back(g);
  }
  SimplicialMap f;
  std::vector<std::vector<char>> used(top + 1);
  for (int d = 0; d <= top; ++d) {
    f.generators.emplace_back(x.generator_count(d), -1);
    used[d].assign(y.generator_count(d), 0);
  }
  std::vector<GeneratorId> order;
  for (int d = 0; d <= top; ++d) {
    for (Index g = 0; g < x.generator_count(d); ++g) order.push_back({d, g});
  }
  std::vector<Index> all_vertices(y.generator_count(0));
  for (Index g = 0; g < y.generator_count(0); ++g) all_vertices[g] = g;
  static const std::vector<Index> none;

  auto search = [&](auto&& self, std::size_t pos) -> bool {
    if (pos == order.size()) return true;
    const auto [d, g] = order[pos];
    const std::vector<Index>* candidates = &all_vertices;
    if (d > 0) {
      std::vector<SimplexRef> image;
      for (const auto& face : x.faces(d, g)) image.push_back(f(face));
      auto it = by_faces[d].find(image);
      candidates = it == by_faces[d].end() ? &none : &it->second;
    }
    for (Index c : *candidates) {
      if (used[d][c]) continue;
      used[d][c] = 1;
      f.generators[d][g] = c;
      if (self(self, pos + 1)) return true;
      used[d][c] = 0;
    }
    f.generators[d][g] = -1;
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return f;
}

ProductComplex::ProductComplex(std::vector<SSetPresentation> factors, std::string name)
    : factors_(std::move(factors)) {
  if (factors_.empty()) throw Error(ErrorCode::InvalidIndex, "product of no factors");
  int top = factors_.front().max_dim();
  for (const auto& f : factors_) top = std::min(top, f.max_dim());
  if (name.empty()) {
    for (std::size_t i = 0; i < factors_.size(); ++i) name += (i ? "x" : "") + factors_[i].name();
  }
  product_ = SSetPresentation(std::move(name), top);
  tuples_.resize(top + 1);
  index_.resize(top + 1);
  for (int n = 0; n <= top; ++n) {
    std::vector<std::vector<SimplexRef>> lists;
    for (const auto& f : factors_) lists.push_back(enumerate_simplices(f, n));
    std::vector<std::size_t> cursor(lists.size(), 0);
    bool empty = false;
    for (const auto& l : lists) empty = empty || l.empty();
    while (!empty) {
      std::uint32_t common = ~0u;
      std::vector<SimplexRef> tuple;
      for (std::size_t i = 0; i < lists.size(); ++i) {
        tuple.push_back(lists[i][cursor[i]]);
        common &= tuple.back().degeneracy_mask;
      }
      if (common == 0) {
        std::string label = "(";
        for (std::size_t i = 0; i < tuple.size(); ++i) {
          label += (i ? "," : "") + factors_[i].simplex_name(tuple[i]);
        }
        const Index g = product_.add_generator(n, label + ")");
        index_[n].emplace(tuple, g);
        tuples_[n].push_back(std::move(tuple));
      }
      std::size_t i = lists.size();
      while (i > 0) {
        --i;
        if (++cursor[i] < lists[i].size()) break;
        cursor[i] = 0;
        if (i == 0) empty = true;
      }
    }
  }
  for (int n = 1; n <= top; ++n) {
    for (Index g = 0; g < product_.generator_count(n); ++g) {
      std::vector<SimplexRef> faces;
      for (int i = 0; i <= n; ++i) {
        std::vector<SimplexRef> coords;
        for (std::size_t c = 0; c < factors_.size(); ++c) {
          coords.push_back(factors_[c].face(tuples_[n][g][c], i));
        }
        faces.push_back(simplex(coords));
      }
      product_.set_faces(n, g, std::move(faces));
    }
  }
}

std::vector<SimplexRef> ProductComplex::coordinates(const SimplexRef& s) const {
  std::vector<SimplexRef> out;
  for (const auto& c : tuples_.at(s.generator_dim()).at(s.generator)) {
    out.push_back(degenerate(c, s.degeneracy_mask, s.dim));
  }
  return out;
}

SimplexRef ProductComplex::simplex(const std::vector<SimplexRef>& coordinates) const {
  if (coordinates.size() != factors_.size()) {
    throw Error(ErrorCode::InvalidIndex, "coordinate count does not match factors");
  }
  const int n = coordinates.front().dim;
  std::uint32_t common = ~0u;
  for (const auto& c : coordinates) {
    if (c.dim != n) throw Error(ErrorCode::InvalidIndex, "coordinates of different dimensions");
    common &= c.degeneracy_mask;
  }
  const int reduced = n - std::popcount(common);
  std::vector<SimplexRef> key;
  for (const auto& c : coordinates) {
    key.push_back(SimplexRef{reduced, remove_common(c.degeneracy_mask, common), c.generator});
  }
  auto it = index_.at(reduced).find(key);
  if (it == index_[reduced].end()) throw Error(ErrorCode::InvalidIndex, "tuple not in product");
  return SimplexRef{n, common, it->second};
}

SSetPresentation cartesian_product(const SSetPresentation& x, const SSetPresentation& y) {
  return ProductComplex({x, y}).presentation();
}

SSetPresentation standard_complex(StandardKind kind, int n, int k, std::optional<int> max_dim) {
  if (n < 0 || n > 12) throw Error(ErrorCode::InvalidIndex, "simplex dimension out of range");
  if (kind == StandardKind::horn && (k < 0 || k > n || n < 1)) {
    throw Error(ErrorCode::InvalidIndex, "horn index must satisfy 0 <= k <= n");
  }
  const int top = max_dim.value_or(std::max(n, 1) + 1);
  std::string name = kind == StandardKind::delta      ? "Delta[" + std::to_string(n) + "]"
                     : kind == StandardKind::boundary ? "dDelta[" + std::to_string(n) + "]"
                                                      : "Lambda[" + std::to_string(n) + "," +
                                                            std::to_string(k) + "]";
  SSetPresentation out(name, top);
  const std::uint32_t full = (1u << (n + 1)) - 1u;
  auto kept = [&](std::uint32_t t) {
    switch (kind) {
      case StandardKind::delta: return true;
      case StandardKind::boundary: return t != full;
      case StandardKind::horn: return (t | (1u << k)) != full;
    }
    return false;
  };
  auto label = [](std::uint32_t t) {
    std::string s = "(";
    bool first = true;
    for (int v = 0; v < 32; ++v) {
      if (!(t & (1u << v))) continue;
      s += (first ? "" : ",") + std::to_string(v);
      first = false;
    }
    return s + ")";
  };
  std::map<std::uint32_t, Index> index;
  for (int d = 0; d <= std::min(n, top); ++d) {
    for (std::uint32_t t = 1; t <= full; ++t) {
      if (std::popcount(t) == d + 1 && kept(t)) index[t] = out.add_generator(d, label(t));
    }
  }
  for (const auto& [t, g] : index) {
    const int d = std::popcount(t) - 1;
    if (d == 0) continue;
    std::vector<SimplexRef> faces;
    std::uint32_t rest = t;
    while (rest) {
      const std::uint32_t bit = rest & (~rest + 1u);
      rest &= rest - 1u;
      faces.push_back(SimplexRef::nondegenerate(d - 1, index.at(t & ~bit)));
    }
    out.set_faces(d, g, std::move(faces));
  }
  return out;
}

SSetPresentation point_complex(int max_dim) {
  SSetPresentation out("point", max_dim);
  out.add_generator(0, "phi");
  return out;
}

}  // namespace kanact
