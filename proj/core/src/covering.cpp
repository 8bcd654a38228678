#include "kanact/covering.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "kanact/error.hpp"
#include "kanact/nerve.hpp"

namespace kanact {

RegularCover build_cover(const SSetPresentation& k, const QuotientMap& q) {
  // re-run the relator and surjectivity checks
  QuotientMap checked = make_quotient(k, q.group, q.images);
  const Index m = checked.group.order();
  SSetPresentation total(k.name() + "~" + checked.group.name(), k.max_dim());
  for (int n = 0; n <= k.max_dim(); ++n) {
    for (Index x = 0; x < k.generator_count(n); ++x) {
      for (Index a = 0; a < m; ++a) {
        total.add_generator(n, k.generator_name(n, x) + "@" + checked.group.element_name(a));
      }
    }
  }
  RegularCover c{k, std::move(checked), std::move(total)};
  for (int n = 1; n <= k.max_dim(); ++n) {
    for (Index x = 0; x < k.generator_count(n); ++x) {
      const auto& f = k.faces(n, x);
      const Index twist = c.q.group.inverse(edge_class(k, c.q, SimplexRef::nondegenerate(n, x)));
      for (Index a = 0; a < m; ++a) {
        std::vector<SimplexRef> faces;
        for (int i = 0; i < n; ++i) faces.push_back(c.lift(f[i], a));
        faces.push_back(c.lift(f[n], c.q.group.multiply(twist, a)));
        c.total.set_faces(n, x * m + a, std::move(faces));
      }
    }
  }
  return c;
}

CoveringReport verify_covering(const RegularCover& c, int up_to_dim) {
  CoveringReport report;
  report.up_to_dim = up_to_dim;
  report.total_kan = check_kan(c.total, up_to_dim);
  SimplexTable total(c.total, up_to_dim + 1);
  SimplexTable base(c.base, up_to_dim + 1);
  const Index m = c.fibre_size();
  for (int n = 0; n <= up_to_dim; ++n) {
    for (int k = 0; k <= n + 1; ++k) {
      std::map<std::vector<std::size_t>, std::vector<std::size_t>> fillers;
      for (std::size_t p = 0; p < base.simplices(n + 1).size(); ++p) {
        std::vector<std::size_t> key;
        for (int i = 0; i <= n + 1; ++i) {
          if (i != k) key.push_back(base.face(n + 1, p, i));
        }
        fillers[key].push_back(p);
      }
      for_each_horn(total, n, k, [&](const std::vector<std::size_t>& horn) {
        ++report.horns_checked;
        std::vector<std::size_t> key;
        for (int i = 0; i <= n + 1; ++i) {
          if (i != k) key.push_back(base.position(c.project(total.simplices(n)[horn[i]])));
        }
        auto it = fillers.find(key);
        if (it == fillers.end()) return;
        for (std::size_t z : it->second) {
          ++report.lifts_checked;
          int lifts = 0;
          for (Index a = 0; a < m; ++a) {
            const std::size_t w = total.position(c.lift(base.simplices(n + 1)[z], a));
            bool match = true;
            for (int i = 0; i <= n + 1 && match; ++i) {
              if (i != k) match = total.face(n + 1, w, i) == horn[i];
            }
            lifts += match ? 1 : 0;
          }
          if (lifts != 1 && report.violations.size() < CheckReport::kKeptMessages) {
            report.violations.push_back(
                "horn (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ") over " +
                c.base.simplex_name(base.simplices(n + 1)[z]) + " has " + std::to_string(lifts) +
                " lifts");
          }
        }
      });
    }
  }
  return report;
}

void verify_action(const SSetPresentation& x, const SimplicialAction& a) {
  const auto& g = a.group;
  if (static_cast<Index>(a.maps.size()) != g.order()) {
    throw Error(ErrorCode::NotAnAction, "one map per group element required");
  }
  for (Index e = 0; e < g.order(); ++e) {
    const auto& f = a.maps[e];
    if (static_cast<int>(f.generators.size()) != x.max_dim() + 1) {
      throw Error(ErrorCode::NotAnAction, "map for " + g.element_name(e) + " has wrong dimensions");
    }
    for (int n = 0; n <= x.max_dim(); ++n) {
      if (static_cast<Index>(f.generators[n].size()) != x.generator_count(n)) {
        throw Error(ErrorCode::NotAnAction, "map for " + g.element_name(e) + " is not total");
      }
      std::vector<char> hit(x.generator_count(n), 0);
      for (Index v : f.generators[n]) {
        if (v < 0 || v >= x.generator_count(n) || hit[v]) {
          throw Error(ErrorCode::NotAnAction, "map for " + g.element_name(e) + " is not bijective");
        }
        hit[v] = 1;
      }
    }
    for (int n = 1; n <= x.max_dim(); ++n) {
      for (Index s = 0; s < x.generator_count(n); ++s) {
        const auto& faces = x.faces(n, s);
        const auto& image_faces = x.faces(n, f.generators[n][s]);
        for (int i = 0; i <= n; ++i) {
          if (f(faces[i]) != image_faces[i]) {
            throw Error(ErrorCode::InvariantViolation,
                        "equivariance of faces: " + g.element_name(e) + " on d" +
                            std::to_string(i) + " " + x.generator_name(n, s));
          }
        }
      }
    }
  }
  if (a.maps[g.identity()] != identity_simplicial_map(x)) {
    throw Error(ErrorCode::NotAnAction, "identity element does not act trivially");
  }
  for (Index u = 0; u < g.order(); ++u) {
    for (Index v = 0; v < g.order(); ++v) {
      if (a.maps[g.multiply(u, v)] != compose(a.maps[u], a.maps[v])) {
        throw Error(ErrorCode::NotAnAction, "map(" + g.element_name(u) + g.element_name(v) +
                                                ") != map(" + g.element_name(u) + ") map(" +
                                                g.element_name(v) + ")");
      }
    }
  }
}

SimplicialAction nerve_action(const FiniteGroup& q, const SSetPresentation& nerve,
                              const FiniteGroup& g, const AutomorphismAction& phi) {
  verify_automorphism_action(q, g, phi);
  SimplicialAction a{g, {}};
  for (Index e = 0; e < g.order(); ++e) a.maps.push_back(nerve_map(q, nerve, phi.phi[e]));
  return a;
}

LiftedAction lift_action(const RegularCover& c, const SimplicialAction& a) {
  verify_action(c.base, a);
  const auto& g = a.group;
  AutomorphismAction star;
  for (Index e = 0; e < g.order(); ++e) {
    star.phi.push_back(induced_automorphism(c.base, a.maps[e], c.q));
  }
  verify_automorphism_action(c.q.group, g, star);
  const Index m = c.fibre_size();
  SimplicialAction total{g, {}};
  for (Index e = 0; e < g.order(); ++e) {
    SimplicialMap f;
    for (int n = 0; n <= c.base.max_dim(); ++n) {
      std::vector<Index> images(c.total.generator_count(n));
      for (Index x = 0; x < c.base.generator_count(n); ++x) {
        for (Index alpha = 0; alpha < m; ++alpha) {
          images[x * m + alpha] = a.maps[e].generators[n][x] * m + star.phi[e][alpha];
        }
      }
      f.generators.push_back(std::move(images));
    }
    total.maps.push_back(std::move(f));
  }
  verify_action(c.total, total);
  return LiftedAction{a, std::move(star), std::move(total)};
}

CrossedHom crossed_hom_at(const RegularCover& c, const LiftedAction& a, const SimplexRef& b) {
  const auto& g = a.base.group;
  const auto base = c.project(b);
  CrossedHom r;
  r.action = a.star;
  for (Index e = 0; e < g.order(); ++e) {
    if (a.base.act(e, base) != base) continue;
    const auto moved = a.total.act(e, b);
    std::optional<Index> value;
    for (Index alpha = 0; alpha < c.fibre_size(); ++alpha) {
      if (c.deck(b, alpha) != moved) continue;
      if (value) throw Error(ErrorCode::InvariantViolation, "deck action is not free");
      value = alpha;
    }
    if (!value) throw Error(ErrorCode::InvariantViolation, "g b left the fibre of b");
    r.domain.push_back(e);
    r.values.push_back(*value);
  }
  return r;
}

CheckReport verify_rb_lemmas(const RegularCover& c, const LiftedAction& a, int up_to_dim) {
  CheckReport report;
  report.name = "crossed homomorphism identities";
  const auto& g = a.base.group;
  const auto& q = c.q.group;
  const auto& star = a.star.phi;
  up_to_dim = std::min(up_to_dim, c.total.max_dim());

  std::vector<SimplexRef> all;
  for (int n = 0; n <= up_to_dim; ++n) {
    for (const auto& b : enumerate_simplices(c.total, n)) all.push_back(b);
  }
  std::map<SimplexRef, CrossedHom> r;
  for (const auto& b : all) r.emplace(b, crossed_hom_at(c, a, b));

  for (const auto& b : all) {
    const auto& rb = r.at(b);
    const std::string name = c.total.simplex_name(b);
    for (std::size_t i = 0; i < rb.domain.size(); ++i) {
      const Index x = rb.domain[i];
      // (i)
      for (Index alpha = 0; alpha < q.order(); ++alpha) {
        const auto& rba = r.at(c.deck(b, alpha));
        const Index expected = q.multiply(q.multiply(q.inverse(alpha), rb.values[i]), star[x][alpha]);
        report.expect(rba.at(x) == expected, [&] {
          return "(i) fails at b=" + name + " g=" + g.element_name(x) + " a=" + q.element_name(alpha);
        });
      }
      // (ii)
      for (Index h = 0; h < g.order(); ++h) {
        const auto& rhb = r.at(a.total.act(h, b));
        const Index conj = g.multiply(g.multiply(h, x), g.inverse(h));
        report.expect(rhb.at(conj) == star[h][rb.values[i]], [&] {
          return "(ii) fails at b=" + name + " g=" + g.element_name(x) + " h=" + g.element_name(h);
        });
      }
      // crossed relation
      for (std::size_t j = 0; j < rb.domain.size(); ++j) {
        const Index y = rb.domain[j];
        report.expect(rb.at(g.multiply(x, y)) == q.multiply(rb.values[i], star[x][rb.values[j]]),
                      [&] {
                        return "crossed relation fails at b=" + name + " g=" + g.element_name(x) +
                               " g'=" + g.element_name(y);
                      });
      }
      // ker r_b = G_b
      const bool fixes = a.total.act(x, b) == b;
      report.expect(fixes == (rb.values[i] == q.identity()),
                    [&] { return "ker r_b != G_b at b=" + name + " g=" + g.element_name(x); });
    }
  }

  // E and E.a
  auto fixed = [&](const SimplexRef& b) {
    for (Index x = 0; x < g.order(); ++x) {
      if (a.total.act(x, b) != b) return false;
    }
    return true;
  };
  std::set<SimplexRef> e;
  for (const auto& b : all) {
    if (fixed(b)) e.insert(b);
  }
  for (Index alpha = 0; alpha < q.order(); ++alpha) {
    std::set<SimplexRef> moved;
    for (const auto& b : e) moved.insert(c.deck(b, alpha));
    bool meets = false;
    for (const auto& b : moved) meets = meets || e.count(b) > 0;
    if (!meets) continue;
    bool in_gamma = true;
    for (Index x = 0; x < g.order(); ++x) in_gamma = in_gamma && star[x][alpha] == alpha;
    report.expect(in_gamma && moved == e, [&] {
      return "E meets E." + q.element_name(alpha) + " but the translate differs or leaves Gamma";
    });
  }
  return report;
}

FixedData fixed_data(const RegularCover& c, const LiftedAction& a) {
  const auto& g = a.base.group;
  const auto& q = c.q.group;
  FixedData out;
  for (Index alpha = 0; alpha < q.order(); ++alpha) {
    bool fixed = true;
    for (Index x = 0; x < g.order(); ++x) fixed = fixed && a.star.phi[x][alpha] == alpha;
    if (fixed) out.gamma.push_back(alpha);
  }
  const int top = c.base.max_dim();
  out.e_members.resize(top + 1);
  out.k_g_members.resize(top + 1);
  for (int n = 0; n <= top; ++n) {
    out.k_g_members[n].assign(c.base.generator_count(n), false);
    out.e_members[n].assign(c.total.generator_count(n), false);
    for (Index s = 0; s < c.base.generator_count(n); ++s) {
      bool fixed = true;
      for (Index x = 0; x < g.order(); ++x) fixed = fixed && a.base.maps[x].generators[n][s] == s;
      out.k_g_members[n][s] = fixed;
    }
    for (Index s = 0; s < c.total.generator_count(n); ++s) {
      bool fixed = true;
      for (Index x = 0; x < g.order(); ++x) fixed = fixed && a.total.maps[x].generators[n][s] == s;
      out.e_members[n][s] = fixed;
    }
  }
  out.k_g = subcomplex(c.base, out.k_g_members, c.base.name() + "^G");
  out.e = subcomplex(c.total, out.e_members, c.total.name() + "^G");

  const Index m = c.fibre_size();
  for (int n = 0; n <= top; ++n) {
    for (Index s = 0; s < c.base.generator_count(n); ++s) {
      std::vector<Index> fibre;
      for (Index alpha = 0; alpha < m; ++alpha) {
        if (out.e_members[n][s * m + alpha]) fibre.push_back(alpha);
      }
      if (!out.k_g_members[n][s]) {
        if (!fibre.empty()) {
          throw Error(ErrorCode::InvariantViolation, "fixed simplex over a moved base simplex");
        }
        continue;
      }
      if (fibre.empty()) {
        throw Error(ErrorCode::InvariantViolation,
                    "no fixed lift of " + c.base.generator_name(n, s));
      }
      std::vector<Index> coset;
      for (Index y : out.gamma) coset.push_back(q.multiply(fibre.front(), y));
      std::sort(coset.begin(), coset.end());
      if (coset != fibre) {
        throw Error(ErrorCode::InvariantViolation,
                    "fixed fibre over " + c.base.generator_name(n, s) + " is not a Gamma coset");
      }
    }
  }
  return out;
}

CoverSemidirectAction semidirect_action_on_cover(const RegularCover& c, const LiftedAction& a) {
  auto right = build_right_semidirect(a.base.group, c.q.group, a.star);
  auto l = build_semidirect(c.q.group, a.base.group, a.star);
  auto adapter = semidirect_convention_isomorphism(right, l);
  if (!is_group_isomorphism(right.group, l.group, adapter)) {
    throw Error(ErrorCode::InvariantViolation, "semidirect convention adapter");
  }
  return CoverSemidirectAction{std::move(right), std::move(l), std::move(adapter)};
}

SimplexRef act_right(const RegularCover& c, const LiftedAction& a,
                     const CoverSemidirectAction& s, const SimplexRef& b, Index element) {
  const Index x = s.right.acting_part(element);
  const Index alpha = s.right.normal_part(element);
  return c.deck(a.total.act(a.base.group.inverse(x), b), alpha);
}

std::vector<Index> isotropy_in_l(const RegularCover& c, const LiftedAction& a,
                                 const CoverSemidirectAction& s, const SimplexRef& b) {
  std::vector<Index> out;
  for (Index e = 0; e < s.right.group.order(); ++e) {
    if (act_right(c, a, s, b, e) == b) out.push_back(s.adapter[e]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

CheckReport verify_semidirect_action(const RegularCover& c, const LiftedAction& a,
                                     const CoverSemidirectAction& s, int up_to_dim) {
  CheckReport report;
  report.name = "semidirect action on the cover";
  const auto& r = s.right.group;
  for (int n = 0; n <= std::min(up_to_dim, c.total.max_dim()); ++n) {
    for (const auto& b : enumerate_simplices(c.total, n)) {
      const std::string name = c.total.simplex_name(b);
      report.expect(act_right(c, a, s, b, r.identity()) == b,
                    [&] { return "identity moves " + name; });
      for (Index u = 0; u < r.order(); ++u) {
        const auto bu = act_right(c, a, s, b, u);
        for (Index v = 0; v < r.order(); ++v) {
          report.expect(act_right(c, a, s, bu, v) == act_right(c, a, s, b, r.multiply(u, v)), [&] {
            return "right action fails at " + name + " for " + r.element_name(u) + ", " +
                   r.element_name(v);
          });
        }
      }
      const auto graph = graph_of_crossed_hom(crossed_hom_at(c, a, b), s.l);
      report.expect(isotropy_in_l(c, a, s, b) == graph,
                    [&] { return "isotropy differs from the graph of r_b at " + name; });
    }
  }
  return report;
}

}  // namespace kanact
