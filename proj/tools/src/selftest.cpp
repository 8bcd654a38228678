#include "kanact/selftest.hpp"

#include "kanact/homology.hpp"
#include "kanact/instances.hpp"
#include "kanact/nerve.hpp"

namespace kanact {

namespace {

using Sym = OperatorSymbol;

// The five relations between d_i and s_j, exhaustively for small indices.
SelftestLine operator_identities(int bound) {
  std::size_t checks = 0;
  std::size_t bad = 0;
  auto same = [&](std::vector<Sym> a, std::vector<Sym> b, int dim) {
    ++checks;
    if (normalize_operator(a, dim) != normalize_operator(b, dim)) ++bad;
  };
  // Words act on the right: the last symbol is applied first.
  for (int n = 2; n <= bound; ++n) {
    for (int j = 0; j <= n; ++j) {
      for (int i = 0; i < j; ++i) {
        same({Sym::face(i), Sym::face(j)}, {Sym::face(j - 1), Sym::face(i)}, n);
      }
    }
  }
  for (int n = 0; n <= bound; ++n) {
    for (int j = 0; j <= n; ++j) {
      for (int i = 0; i <= j; ++i) {
        same({Sym::degeneracy(i), Sym::degeneracy(j)}, {Sym::degeneracy(j + 1), Sym::degeneracy(i)},
             n);
      }
      for (int i = 0; i <= n + 1; ++i) {
        std::vector<Sym> lhs{Sym::face(i), Sym::degeneracy(j)};
        if (i < j) {
          same(lhs, {Sym::degeneracy(j - 1), Sym::face(i)}, n);
        } else if (i == j || i == j + 1) {
          ++checks;
          if (!normalize_operator(lhs, n).is_identity()) ++bad;
        } else {
          same(lhs, {Sym::degeneracy(j), Sym::face(i - 1)}, n);
        }
      }
    }
  }
  return {"operator identities, indices <= " + std::to_string(bound), bad == 0,
          std::to_string(checks) + " checks"};
}

SelftestLine nerves() {
  std::string detail;
  bool ok = true;
  for (const auto& g : groups_up_to_order_six()) {
    const auto n = nerve_of_group(g, 4);
    const bool good = validate(n).ok() && check_kan(n, 2).ok() && check_minimal(n, 2).ok();
    ok = ok && good;
    detail += (detail.empty() ? "" : " ") + g.name() + (good ? "" : "!");
  }
  return {"nerves of order <= 6 valid, Kan, minimal", ok, detail};
}

SelftestLine covers() {
  bool ok = true;
  std::string detail;
  for (int n : {4, 6}) {
    const auto k = nerve_of_group(cyclic_group(n), 4);
    const auto c = build_cover(k, parity_quotient(k, n));
    const auto h = integral_homology(boundary_matrices(c.total));
    ok = ok && validate(c.total).ok() && verify_covering(c, 2).ok();
    detail += (detail.empty() ? "" : ", ") + std::string("H_1 over Z") + std::to_string(n) + " = " +
              format_group(h.degrees[1]);
    ok = ok && h.degrees[1].free_rank == 0 && h.degrees[1].torsion.size() == 1 &&
         h.degrees[1].torsion[0] == n / 2;
  }
  return {"covers of nerve(Z4), nerve(Z6) onto Z2", ok, detail};
}

SelftestLine homology() {
  const auto k = nerve_of_group(cyclic_group(2), 5);
  const auto c = boundary_matrices(k);
  const auto h = integral_homology(c);
  const auto m = mod_p_cohomology(c, 2);
  std::string detail;
  for (const auto& d : h.degrees) detail += (detail.empty() ? "" : " ") + format_group(d);
  const bool ok = format_group(h.degrees[1]) == "Z/2" && format_group(h.degrees[2]) == "0" &&
                  format_group(h.degrees[3]) == "Z/2" && universal_coefficients_hold(h, m);
  return {"homology of nerve(Z2)", ok, detail};
}

SelftestLine theorem_case(const TheoremCase& c, Outcome expected) {
  const auto reports = run_case(c);
  const auto got = combine(reports);
  return {"case " + c.name, got == expected, to_string(got)};
}

}  // namespace

std::vector<SelftestLine> run_selftest() {
  std::vector<SelftestLine> out;
  out.push_back(operator_identities(6));
  out.push_back(nerves());
  out.push_back(covers());
  out.push_back(homology());
  auto inv = inversion_case();
  inv.theorems = {"thm42", "thm52", "cor54", "borel"};
  out.push_back(theorem_case(inv, Outcome::pass));
  auto sw = swap_case();
  sw.theorems = {"thm42", "thm52", "cor54", "borel"};
  out.push_back(theorem_case(sw, Outcome::pass));
  auto triv = trivial_action_case();
  triv.theorems = {"cor54"};
  out.push_back(theorem_case(triv, Outcome::pass));
  out.push_back(theorem_case(smith_inversion_case(), Outcome::pass));
  out.push_back(theorem_case(deck_swap_case(), Outcome::hypothesis_failed));
  out.push_back(theorem_case(realization_case(false), Outcome::pass));
  out.push_back(theorem_case(realization_case(true), Outcome::pass));
  return out;
}

}  // namespace kanact
