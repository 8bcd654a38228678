#include "kanact/theorems.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "kanact/error.hpp"
#include "kanact/homology.hpp"
#include "kanact/nerve.hpp"

namespace kanact {

namespace {

std::string join(const std::vector<Index>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
  return out + ")";
}

SimplicialMap deck_map(const RegularCover& c, Index beta) {
  const Index m = c.fibre_size();
  SimplicialMap f;
  for (int n = 0; n <= c.total.max_dim(); ++n) {
    std::vector<Index> images(c.total.generator_count(n));
    for (Index s = 0; s < c.total.generator_count(n); ++s) {
      images[s] = (s / m) * m + c.q.group.multiply(s % m, beta);
    }
    f.generators.push_back(std::move(images));
  }
  return f;
}

std::vector<SimplexRef> simplices_up_to(const SSetPresentation& x, int up_to_dim) {
  std::vector<SimplexRef> out;
  for (int n = 0; n <= std::min(up_to_dim, x.max_dim()); ++n) {
    for (const auto& s : enumerate_simplices(x, n)) out.push_back(s);
  }
  return out;
}

bool is_trivial_map(const SimplicialMap& f) {
  for (const auto& ids : f.generators) {
    for (std::size_t g = 0; g < ids.size(); ++g) {
      if (ids[g] != static_cast<Index>(g)) return false;
    }
  }
  return true;
}

// H_i(X; Z) = 0 for 1 <= i <= reliable degree.
bool acyclic(const SSetPresentation& x, std::string& detail) {
  const auto h = integral_homology(boundary_matrices(x));
  detail = "H_i(Z):";
  bool ok = true;
  for (std::size_t i = 0; i < h.degrees.size(); ++i) {
    detail += " " + format_group(h.degrees[i]);
    if (i > 0) ok = ok && h.degrees[i].free_rank == 0 && h.degrees[i].torsion.empty();
  }
  return ok;
}

struct Space {
  SSetPresentation complex;
  SimplicialAction action;
};

Space space_of(const TheoremCase& c) {
  if (c.space == CaseSpace::base) {
    verify_action(c.complex, c.action);
    return Space{c.complex, c.action};
  }
  auto cover = build_cover(c.complex, c.quotient);
  if (c.action_on_space) {
    verify_action(cover.total, c.action);
    return Space{cover.total, c.action};
  }
  auto lifted = lift_action(cover, c.action);
  return Space{cover.total, lifted.total};
}

}  // namespace

void TheoremReport::hypothesis(std::string name, bool holds, std::string detail) {
  lines.push_back(CheckLine{std::move(name), holds ? Outcome::pass : Outcome::hypothesis_failed,
                            std::move(detail)});
}

void TheoremReport::conclusion(std::string name, bool holds, std::string detail) {
  lines.push_back(
      CheckLine{std::move(name), holds ? Outcome::pass : Outcome::fail, std::move(detail)});
}

void TheoremReport::conclusion(const CheckReport& check) {
  std::string detail = std::to_string(check.checks) + " checks, " +
                       std::to_string(check.violation_count) + " violations";
  if (!check.violations.empty()) detail += "; first: " + check.violations.front();
  conclusion(check.name, check.ok(), detail);
}

bool TheoremReport::hypotheses_hold() const {
  for (const auto& l : lines) {
    if (l.outcome == Outcome::hypothesis_failed) return false;
  }
  return true;
}

Outcome TheoremReport::outcome() const {
  Outcome out = Outcome::pass;
  for (const auto& l : lines) {
    if (l.outcome == Outcome::fail) return Outcome::fail;
    if (l.outcome == Outcome::hypothesis_failed) out = Outcome::hypothesis_failed;
  }
  return out;
}

Outcome combine(const std::vector<TheoremReport>& reports) {
  Outcome out = Outcome::pass;
  for (const auto& r : reports) {
    const auto o = r.outcome();
    if (o == Outcome::fail) return Outcome::fail;
    if (o == Outcome::hypothesis_failed) out = o;
  }
  return out;
}

ExtensionAction build_extension_action(const RegularCover& c, const LiftedAction& a) {
  const auto& q = c.q.group;
  const auto& g = a.base.group;
  std::vector<SimplicialMap> decks;
  for (Index n = 0; n < q.order(); ++n) decks.push_back(deck_map(c, n));
  for (Index x = 0; x < g.order(); ++x) {
    for (Index n = 0; n < q.order(); ++n) {
      if (compose(a.total.maps[x], decks[n]) != compose(decks[a.star.phi[x][n]], a.total.maps[x])) {
        throw Error(ErrorCode::GlueFailure, "T(" + g.element_name(x) + ") psi(" +
                                                q.element_name(n) + ") != psi(" +
                                                q.element_name(a.star.phi[x][n]) + ") T(" +
                                                g.element_name(x) + ")");
      }
    }
  }
  auto l = build_semidirect(opposite_group(q), g, a.star);
  ExtensionAction e{std::move(l), {}};
  for (Index el = 0; el < e.l.group.order(); ++el) {
    e.psi.push_back(compose(decks[e.l.normal_part(el)], a.total.maps[e.l.projection(el)]));
  }
  return e;
}

TheoremReport verify_extension_action(const RegularCover& c, const LiftedAction& a,
                                      const ExtensionAction& e) {
  TheoremReport report;
  report.theorem = "extension action";
  const auto& l = e.l.group;
  const auto& x = c.total;

  CheckReport maps;
  maps.name = "each Psi(l) is an automorphism";
  for (Index el = 0; el < l.order(); ++el) {
    maps.expect(is_isomorphism(x, x, e.psi[el]), [&] { return "Psi" + l.element_name(el); });
  }
  report.conclusion(maps);

  CheckReport mult;
  mult.name = "Psi(l l') = Psi(l) Psi(l')";
  for (Index i = 0; i < l.order(); ++i) {
    for (Index j = 0; j < l.order(); ++j) {
      mult.expect(e.psi[l.multiply(i, j)] == compose(e.psi[i], e.psi[j]),
                  [&] { return l.element_name(i) + " * " + l.element_name(j); });
    }
  }
  report.conclusion(mult);

  CheckReport restrict;
  restrict.name = "restrictions to Q and G";
  for (int n = 0; n <= x.max_dim(); ++n) {
    for (Index s = 0; s < x.generator_count(n); ++s) {
      const auto b = SimplexRef::nondegenerate(n, s);
      for (Index beta = 0; beta < c.q.group.order(); ++beta) {
        restrict.expect(e.act(e.l.inclusion(beta), b) == c.deck(b, beta), [&] {
          return "Psi(" + c.q.group.element_name(beta) + ",e) on " + x.generator_name(n, s);
        });
      }
      for (Index g = 0; g < a.base.group.order(); ++g) {
        restrict.expect(e.act(e.l.section(g), b) == a.total.act(g, b), [&] {
          return "Psi(e," + a.base.group.element_name(g) + ") on " + x.generator_name(n, s);
        });
      }
    }
  }
  report.conclusion(restrict);

  CheckReport equi;
  equi.name = "projection is equivariant";
  for (int n = 0; n <= x.max_dim(); ++n) {
    for (Index s = 0; s < x.generator_count(n); ++s) {
      const auto b = SimplexRef::nondegenerate(n, s);
      for (Index el = 0; el < l.order(); ++el) {
        equi.expect(c.project(e.act(el, b)) == a.base.act(e.l.projection(el), c.project(b)),
                    [&] { return l.element_name(el) + " on " + x.generator_name(n, s); });
      }
    }
  }
  report.conclusion(equi);
  return report;
}

TheoremReport verify_isotropy_iso(const RegularCover& c, const LiftedAction& a,
                                  const ExtensionAction& e, int up_to_dim) {
  TheoremReport report;
  report.theorem = "isotropy";
  const auto& l = e.l.group;
  const auto& g = a.base.group;
  const auto& q = c.q.group;
  CheckReport check;
  check.name = "G_p(x) -> L_x, f -> (r_x(f)^-1, f)";
  std::size_t simplices = 0;
  for (const auto& b : simplices_up_to(c.total, up_to_dim)) {
    ++simplices;
    const auto x = c.project(b);
    std::vector<Index> stab;
    for (Index f = 0; f < g.order(); ++f) {
      if (a.base.act(f, x) == x) stab.push_back(f);
    }
    std::vector<Index> lx;
    for (Index el = 0; el < l.order(); ++el) {
      if (e.act(el, b) == b) lx.push_back(el);
    }
    const auto r = crossed_hom_at(c, a, b);
    std::vector<Index> image;
    for (Index f : stab) image.push_back(e.l.element(q.inverse(r.at(f)), f));
    for (Index f1 : stab) {
      for (Index f2 : stab) {
        const Index lhs = e.l.element(q.inverse(r.at(g.multiply(f1, f2))), g.multiply(f1, f2));
        const Index rhs = l.multiply(e.l.element(q.inverse(r.at(f1)), f1),
                                     e.l.element(q.inverse(r.at(f2)), f2));
        check.expect(lhs == rhs, [&] {
          return "not multiplicative at " + c.total.simplex_name(b) + " on " + g.element_name(f1) +
                 ", " + g.element_name(f2);
        });
      }
    }
    auto sorted = image;
    std::sort(sorted.begin(), sorted.end());
    check.expect(sorted == lx, [&] {
      return "image " + join(sorted) + " != L_x " + join(lx) + " at " + c.total.simplex_name(b);
    });
  }
  report.conclusion(check);
  report.lines.back().detail += "; " + std::to_string(simplices) + " simplices";
  return report;
}

Realization realize_extension(const FiniteGroup& q, const FiniteGroup& g,
                              const AutomorphismAction& phi, const SSetPresentation& k,
                              const QuotientMap& quotient, std::size_t limit) {
  verify_automorphism_action(q, g, phi);
  const auto c = build_cover(k, quotient);
  const auto& x = c.total;
  const Index m = g.order();
  const int top = x.max_dim();
  double estimate = 1;
  for (Index i = 0; i < m; ++i) estimate *= static_cast<double>(simplex_count(x, top));
  if (estimate > static_cast<double>(limit)) {
    throw Error(ErrorCode::TooLarge, "Y would have about " + std::to_string(estimate) +
                                         " simplices in dimension " + std::to_string(top) +
                                         ", limit " + std::to_string(limit));
  }

  ProductComplex product(std::vector<SSetPresentation>(m, x), "Y");
  const auto& y = product.presentation();

  auto build = [&](auto&& transform) {
    SimplicialMap f;
    for (int n = 0; n <= y.max_dim(); ++n) {
      std::vector<Index> images(y.generator_count(n));
      for (Index s = 0; s < y.generator_count(n); ++s) {
        const auto coords = product.coordinates(SimplexRef::nondegenerate(n, s));
        const auto image = product.simplex(transform(coords));
        if (image.is_degenerate()) {
          throw Error(ErrorCode::InvariantViolation, "transform of Y degenerates a generator");
        }
        images[s] = image.generator;
      }
      f.generators.push_back(std::move(images));
    }
    return f;
  };

  std::vector<SimplicialMap> sigma;
  for (Index s = 0; s < q.order(); ++s) {
    sigma.push_back(build([&](const std::vector<SimplexRef>& chi) {
      std::vector<SimplexRef> out(m);
      for (Index z = 0; z < m; ++z) out[z] = c.deck(chi[z], phi.phi[z][s]);
      return out;
    }));
  }
  std::vector<SimplicialMap> j;
  for (Index t = 0; t < m; ++t) {
    j.push_back(build([&](const std::vector<SimplexRef>& chi) {
      std::vector<SimplexRef> out(m);
      for (Index z = 0; z < m; ++z) out[z] = chi[g.multiply(z, t)];
      return out;
    }));
  }

  Realization out;
  auto& report = out.report;
  report.theorem = "realization";

  CheckReport simplicial;
  simplicial.name = "Sigma and J are automorphisms of Y";
  for (Index s = 0; s < q.order(); ++s) {
    simplicial.expect(is_isomorphism(y, y, sigma[s]), [&] { return "Sigma" + q.element_name(s); });
  }
  for (Index t = 0; t < m; ++t) {
    simplicial.expect(is_isomorphism(y, y, j[t]), [&] { return "J" + g.element_name(t); });
  }
  report.conclusion(simplicial);

  CheckReport glue;
  glue.name = "J_x Sigma_s = Sigma_phi(x)(s) J_x";
  for (Index t = 0; t < m; ++t) {
    for (Index s = 0; s < q.order(); ++s) {
      glue.expect(compose(j[t], sigma[s]) == compose(sigma[phi.phi[t][s]], j[t]),
                  [&] { return "x=" + g.element_name(t) + " s=" + q.element_name(s); });
    }
  }
  report.conclusion(glue);

  CheckReport free;
  free.name = "Q acts freely on Y";
  for (Index s = 0; s < q.order(); ++s) {
    if (s == q.identity()) continue;
    for (int n = 0; n <= y.max_dim(); ++n) {
      for (Index i = 0; i < y.generator_count(n); ++i) {
        free.expect(sigma[s].generators[n][i] != i, [&] {
          return "Sigma" + q.element_name(s) + " fixes " + y.generator_name(n, i);
        });
      }
    }
  }
  report.conclusion(free);

  // Orbit quotient Y/Q, representatives are the smallest generator index.
  std::vector<std::vector<Index>> orbit(y.max_dim() + 1);
  SSetPresentation yq("Y/Q", y.max_dim());
  std::vector<std::vector<Index>> reps(y.max_dim() + 1);
  for (int n = 0; n <= y.max_dim(); ++n) {
    orbit[n].assign(y.generator_count(n), 0);
    for (Index i = 0; i < y.generator_count(n); ++i) {
      Index rep = i;
      for (Index s = 0; s < q.order(); ++s) rep = std::min(rep, sigma[s].generators[n][i]);
      if (rep == i) {
        orbit[n][i] = yq.add_generator(n, y.generator_name(n, i));
        reps[n].push_back(i);
      } else {
        orbit[n][i] = orbit[n][rep];
      }
    }
  }
  auto to_quotient = [&](const SimplexRef& s) {
    return SimplexRef{s.dim, s.degeneracy_mask, orbit[s.generator_dim()][s.generator]};
  };
  for (int n = 1; n <= y.max_dim(); ++n) {
    for (Index r = 0; r < static_cast<Index>(reps[n].size()); ++r) {
      std::vector<SimplexRef> faces;
      for (const auto& f : y.faces(n, reps[n][r])) faces.push_back(to_quotient(f));
      yq.set_faces(n, r, std::move(faces));
    }
  }
  const auto valid = validate(yq);
  report.conclusion("Y/Q satisfies the simplicial identities", valid.ok(),
                    std::to_string(valid.structural.size() + valid.identities.size()) +
                        " violations");

  CheckReport faces_descend;
  faces_descend.name = "faces descend to Y/Q";
  for (int n = 1; n <= y.max_dim(); ++n) {
    for (Index i = 0; i < y.generator_count(n); ++i) {
      for (int f = 0; f <= n; ++f) {
        faces_descend.expect(
            to_quotient(y.face(SimplexRef::nondegenerate(n, i), f)) ==
                yq.face(SimplexRef::nondegenerate(n, orbit[n][i]), f),
            [&] { return y.generator_name(n, i) + " face " + std::to_string(f); });
      }
    }
  }
  report.conclusion(faces_descend);

  SimplicialAction induced{g, {}};
  for (Index t = 0; t < m; ++t) {
    SimplicialMap f;
    for (int n = 0; n <= y.max_dim(); ++n) {
      std::vector<Index> images;
      for (Index rep : reps[n]) images.push_back(orbit[n][j[t].generators[n][rep]]);
      f.generators.push_back(std::move(images));
    }
    induced.maps.push_back(std::move(f));
  }
  try {
    verify_action(yq, induced);
    report.conclusion("G acts on Y/Q", true);
  } catch (const Error& err) {
    report.conclusion("G acts on Y/Q", false, err.what());
  }

  // The automorphisms Sigma_s J_x of Y covering the G action on Y/Q.
  const auto l = build_semidirect(opposite_group(q), g, phi);
  std::vector<SimplicialMap> lifts;
  for (Index el = 0; el < l.group.order(); ++el) {
    lifts.push_back(compose(sigma[l.normal_part(el)], j[l.projection(el)]));
  }
  CheckReport covers;
  covers.name = "Sigma_s J_x covers x on Y/Q";
  for (Index el = 0; el < l.group.order(); ++el) {
    for (int n = 0; n <= y.max_dim(); ++n) {
      for (Index i = 0; i < y.generator_count(n); ++i) {
        covers.expect(orbit[n][lifts[el].generators[n][i]] ==
                          induced.maps[l.projection(el)].generators[n][orbit[n][i]],
                      [&] { return l.group.element_name(el) + " on " + y.generator_name(n, i); });
      }
    }
  }
  report.conclusion(covers);

  // Multiplication table of the recovered group, read off from composites.
  std::vector<std::vector<Index>> table(lifts.size(), std::vector<Index>(lifts.size(), 0));
  bool closed = true;
  for (std::size_t a = 0; a < lifts.size() && closed; ++a) {
    for (std::size_t b = 0; b < lifts.size() && closed; ++b) {
      const auto prod = compose(lifts[a], lifts[b]);
      const auto it = std::find(lifts.begin(), lifts.end(), prod);
      if (it == lifts.end()) {
        closed = false;
      } else {
        table[a][b] = static_cast<Index>(it - lifts.begin());
      }
    }
  }
  bool distinct = true;
  for (std::size_t a = 0; a < lifts.size(); ++a) {
    for (std::size_t b = a + 1; b < lifts.size(); ++b) distinct = distinct && lifts[a] != lifts[b];
  }
  bool iso = false;
  std::string detail;
  if (closed && distinct) {
    try {
      FiniteGroup recovered("Aut_Y", l.group.element_names(), table);
      iso = is_group_isomorphism(l.group, recovered, identity_map(l.group.order()));
      detail = "explicit isomorphism (s,x) -> Sigma_s J_x onto a group of order " +
               std::to_string(recovered.order());
    } catch (const Error& err) {
      detail = err.what();
    }
  } else {
    detail = closed ? "two elements of L act identically" : "composites leave the set";
  }
  report.conclusion("recovered extension is isomorphic to " + l.group.name(), iso, detail);

  out.y_vertices = y.generator_count(0);
  out.quotient_vertices = yq.generator_count(0);
  report.conclusion("vertex counts", true,
                    "Y has " + std::to_string(out.y_vertices) + " vertices, Y/Q has " +
                        std::to_string(out.quotient_vertices));
  out.quotient = std::move(yq);
  return out;
}

SSetPresentation fixed_subcomplex(const SSetPresentation& x, const SimplicialAction& a) {
  std::vector<std::vector<bool>> keep(x.max_dim() + 1);
  for (int n = 0; n <= x.max_dim(); ++n) {
    keep[n].assign(x.generator_count(n), true);
    for (Index s = 0; s < x.generator_count(n); ++s) {
      for (const auto& f : a.maps) keep[n][s] = keep[n][s] && f.generators[n][s] == s;
    }
  }
  return subcomplex(x, keep, x.name() + "^G");
}

namespace {

std::string dims_text(const std::vector<Index>& dims) { return join(dims); }

// Universal cover acyclic through the reliable range: K is aspherical there
// and q is an isomorphism on pi_1.
void certify_aspherical(TheoremReport& report, const RegularCover& cover) {
  std::string detail;
  const bool ok = acyclic(cover.total, detail);
  report.hypothesis("aspherical (cover acyclic)", ok, detail);
}

void require_base(TheoremReport& report, const TheoremCase& c) {
  report.hypothesis("action on a one-vertex base", c.space == CaseSpace::base &&
                                                       !c.action_on_space && c.complex.reduced());
}

void require_minimal(TheoremReport& report, const TheoremCase& c) {
  const int depth = std::min(c.check_depth, c.complex.max_dim());
  const auto m = check_minimal(c.complex, depth);
  std::string detail = "up to dimension " + std::to_string(depth);
  if (!m.ok()) {
    detail += "; " + c.complex.simplex_name(m.violations.front().x) + " ~ " +
              c.complex.simplex_name(m.violations.front().y);
  }
  report.hypothesis("minimal", m.ok(), detail);
}

}  // namespace

TheoremReport verify_extension_theorem(const TheoremCase& c) {
  TheoremReport report;
  report.theorem = "extension";
  require_base(report, c);
  if (!report.hypotheses_hold()) return report;
  const auto cover = build_cover(c.complex, c.quotient);
  const auto lifted = lift_action(cover, c.action);
  const int depth = std::min(c.check_depth, cover.total.max_dim());
  ExtensionAction e;
  try {
    e = build_extension_action(cover, lifted);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::GlueFailure) throw;
    report.conclusion("deck transformations glue with the lifted action", false, err.what());
    return report;
  }
  report.conclusion("deck transformations glue with the lifted action", true);
  for (auto& line : verify_extension_action(cover, lifted, e).lines) report.lines.push_back(line);
  for (auto& line : verify_isotropy_iso(cover, lifted, e, depth).lines) report.lines.push_back(line);
  report.conclusion(verify_rb_lemmas(cover, lifted, depth));
  const auto s = semidirect_action_on_cover(cover, lifted);
  report.conclusion(verify_semidirect_action(cover, lifted, s, depth));
  return report;
}

TheoremReport verify_realization_theorem(const TheoremCase& c) {
  TheoremReport report;
  report.theorem = "realization";
  report.hypothesis("phi : G -> Aut(Q) given", c.phi_group.has_value() && c.phi.has_value());
  report.hypothesis("one-vertex complex", c.complex.reduced());
  if (!report.hypotheses_hold()) return report;
  auto r = realize_extension(c.quotient.group, *c.phi_group, *c.phi, c.complex, c.quotient);
  for (auto& line : r.report.lines) report.lines.push_back(line);
  return report;
}

TheoremReport verify_smith_instance(const TheoremCase& c) {
  TheoremReport report;
  report.theorem = "smith";
  const auto space = space_of(c);
  const auto& g = space.action.group;
  report.hypothesis(g.name() + " is a " + std::to_string(c.p) + "-group", g.is_p_group(c.p));
  report.hypothesis("finite dimensional", true, "assumed, the presentation is truncated");
  const auto h = mod_p_cohomology(boundary_matrices(space.complex), c.p);
  const auto dims = h.dimensions();
  bool acyclic_p = !dims.empty() && dims[0] == 1;
  for (std::size_t i = 1; i < dims.size(); ++i) acyclic_p = acyclic_p && dims[i] == 0;
  report.hypothesis("mod-p acyclic", acyclic_p, "dims " + dims_text(dims));
  bool fixed = space.complex.generator_count(0) > 0;
  for (const auto& f : space.action.maps) fixed = fixed && f.generators[0][0] == 0;
  report.hypothesis("basepoint fixed", fixed,
                    space.complex.generator_count(0) ? space.complex.generator_name(0, 0) : "");
  if (!report.hypotheses_hold()) return report;

  const auto kg = fixed_subcomplex(space.complex, space.action);
  const auto hf = mod_p_cohomology(boundary_matrices(kg), c.p);
  const auto fdims = hf.dimensions();
  bool ok = !fdims.empty() && fdims[0] == 1;
  for (std::size_t i = 1; i < fdims.size(); ++i) ok = ok && fdims[i] == 0;
  report.conclusion("fixed set mod-p acyclic", ok, "dims " + dims_text(fdims));
  report.table.push_back({"degree", "H^i(K;F_p)", "H^i(K^G;F_p)"});
  for (std::size_t i = 0; i < dims.size() && i < fdims.size(); ++i) {
    report.table.push_back({std::to_string(i), std::to_string(dims[i]), std::to_string(fdims[i])});
  }
  return report;
}

TheoremReport verify_fixed_point_cohomology(const TheoremCase& c) {
  TheoremReport report;
  report.theorem = "fixed point cohomology";
  require_base(report, c);
  if (!report.hypotheses_hold()) return report;
  const auto& g = c.action.group;
  report.hypothesis(g.name() + " is a " + std::to_string(c.p) + "-group", g.is_p_group(c.p));
  const auto cover = build_cover(c.complex, c.quotient);
  certify_aspherical(report, cover);
  if (!report.hypotheses_hold()) return report;

  const auto lifted = lift_action(cover, c.action);
  const auto fd = fixed_data(cover, lifted);
  const auto& q = c.quotient.group;
  report.conclusion("K^G is reduced", fd.k_g.reduced(),
                    std::to_string(fd.k_g.generator_count(0)) + " vertices");

  const auto gamma = subgroup(q, fd.gamma, "Gamma");
  const auto hk = mod_p_cohomology(boundary_matrices(fd.k_g), c.p);
  const auto kdims = hk.dimensions();
  const auto gdims = group_cohomology(gamma, c.p, hk.reliable_up_to);
  report.table.push_back({"degree", "H^i(K^G;F_p)", "H^i(Gamma;F_p)"});
  bool same = true;
  for (int i = 0; i <= hk.reliable_up_to; ++i) {
    same = same && kdims[i] == gdims[i];
    report.table.push_back({std::to_string(i), std::to_string(kdims[i]), std::to_string(gdims[i])});
  }
  report.conclusion("H^*(K^G) = H^*(Gamma) through degree " + std::to_string(hk.reliable_up_to),
                    same, "|Gamma| = " + std::to_string(gamma.order()));

  std::vector<Index> edge_images;
  if (fd.k_g.max_dim() >= 1) {
    for (Index e = 0; e < fd.k_g.generator_count(1); ++e) {
      const auto id = c.complex.require(fd.k_g.generator_name(1, e));
      edge_images.push_back(c.quotient.images[id.index]);
    }
  }
  const auto image = q.generated_subgroup(edge_images);
  report.conclusion("pi_1(K^G) maps onto Gamma", image == fd.gamma,
                    "image " + join(image) + ", Gamma " + join(fd.gamma));
  return report;
}

TheoremReport verify_trivial_action_corollary(const TheoremCase& c) {
  TheoremReport report;
  report.theorem = "trivial action on pi_1";
  require_base(report, c);
  if (!report.hypotheses_hold()) return report;
  require_minimal(report, c);
  const auto cover = build_cover(c.complex, c.quotient);
  certify_aspherical(report, cover);
  if (!report.hypotheses_hold()) return report;
  const auto lifted = lift_action(cover, c.action);
  bool trivial = true;
  for (const auto& f : lifted.star.phi) trivial = trivial && f == identity_map(f.size());
  if (!trivial) {
    report.conclusion("K^G = K", true, "induced action on pi_1 is nontrivial, nothing to check");
    return report;
  }
  bool all = true;
  for (const auto& f : c.action.maps) all = all && is_trivial_map(f);
  report.conclusion("K^G = K", all);
  return report;
}

TheoremReport verify_borel_corollary(const TheoremCase& c) {
  TheoremReport report;
  report.theorem = "effective action";
  require_base(report, c);
  if (!report.hypotheses_hold()) return report;
  require_minimal(report, c);
  const auto cover = build_cover(c.complex, c.quotient);
  certify_aspherical(report, cover);
  if (!report.hypotheses_hold()) return report;
  const auto& g = c.action.group;
  bool effective = true;
  for (Index x = 0; x < g.order(); ++x) {
    if (x != g.identity() && is_trivial_map(c.action.maps[x])) effective = false;
  }
  if (!effective) {
    report.conclusion("G -> Out(pi_1) injective", true, "action is not effective, nothing to check");
    return report;
  }
  const auto lifted = lift_action(cover, c.action);
  std::vector<Index> kernel;
  for (Index x = 0; x < g.order(); ++x) {
    if (lifted.star.phi[x] == identity_map(c.quotient.group.order())) kernel.push_back(x);
  }
  report.conclusion("G -> Out(pi_1) injective", kernel.size() == 1,
                    "kernel order " + std::to_string(kernel.size()));
  return report;
}

std::vector<TheoremReport> verify_corollaries(const TheoremCase& c) {
  return {verify_trivial_action_corollary(c), verify_borel_corollary(c)};
}

std::vector<TheoremReport> run_case(const TheoremCase& c) {
  std::vector<TheoremReport> out;
  for (const auto& t : c.theorems) {
    if (t == "thm42") {
      out.push_back(verify_extension_theorem(c));
    } else if (t == "thm43") {
      out.push_back(verify_realization_theorem(c));
    } else if (t == "smith") {
      out.push_back(verify_smith_instance(c));
    } else if (t == "thm52") {
      out.push_back(verify_fixed_point_cohomology(c));
    } else if (t == "cor54") {
      out.push_back(verify_trivial_action_corollary(c));
    } else if (t == "borel") {
      out.push_back(verify_borel_corollary(c));
    } else {
      throw Error(ErrorCode::SchemaError, "unknown theorem '" + t + "'");
    }
    out.back().theorem = t + ": " + out.back().theorem;
  }
  return out;
}

}  // namespace kanact
