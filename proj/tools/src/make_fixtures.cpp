// Writes the fixture tree used by the tests: groups, complexes, quotients,
// actions, phi files, case files and three corrupted inputs.

#include <filesystem>
#include <iostream>

#include "kanact/instances.hpp"
#include "kanact/io.hpp"
#include "kanact/nerve.hpp"

using namespace kanact;
namespace fs = std::filesystem;

namespace {

fs::path root;

void put(const std::string& rel, const Json& j) {
  const auto p = root / rel;
  fs::create_directories(p.parent_path());
  write_text_file(p, canonical_dump(j));
}

Json case_json(const std::string& name, const std::string& complex, int truncation,
               const std::string& quotient, const std::string& action,
               std::vector<std::string> theorems) {
  return Json{{"name", name},
              {"complex", "../complexes/" + complex},
              {"truncation", truncation},
              {"quotient", "../quotients/" + quotient},
              {"action", "../actions/" + action},
              {"p", 2},
              {"check_depth", std::min(2, truncation - 1)},
              {"theorems", theorems}};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: kanact_make_fixtures <dir>\n";
    return 3;
  }
  root = argv[1];
  const auto z2 = cyclic_group(2);
  const auto z3 = cyclic_group(3);
  const auto v4 = direct_product(z2, z2);

  put("groups/z2.json", group_to_json(z2));
  put("groups/z3.json", group_to_json(z3));
  put("groups/z2xz2.json", group_to_json(v4));
  put("groups/s3.json", group_to_json(symmetric_group(3)));

  const auto n2 = nerve_of_group(z2, 4);
  put("complexes/nerve_z2_5.json", complex_to_json(nerve_of_group(z2, 5)));
  put("complexes/nerve_z2_4.json", complex_to_json(n2));
  put("complexes/nerve_z3_4.json", complex_to_json(nerve_of_group(z3, 4)));
  put("complexes/nerve_z2xz2_4.json", complex_to_json(nerve_of_group(v4, 4)));
  const auto n4 = nerve_of_group(cyclic_group(4), 4);
  const auto n6 = nerve_of_group(cyclic_group(6), 4);
  put("complexes/nerve_z4_4.json", complex_to_json(n4));
  put("complexes/nerve_z6_4.json", complex_to_json(n6));
  put("complexes/nerve_s3_3.json", complex_to_json(nerve_of_group(symmetric_group(3), 3)));

  const auto inv = inversion_case();
  const auto sw = swap_case();
  const auto triv = trivial_action_case();
  const auto deck = deck_swap_case();
  const auto real = realization_case(false, 4);

  put("quotients/z2_id.json", quotient_to_json(identity_quotient(n2, z2), n2, "../groups/z2.json"));
  put("quotients/z3_id.json", quotient_to_json(inv.quotient, inv.complex, "../groups/z3.json"));
  put("quotients/z2xz2_id.json", quotient_to_json(sw.quotient, sw.complex, "../groups/z2xz2.json"));
  put("quotients/z4_parity.json", quotient_to_json(parity_quotient(n4, 4), n4, "../groups/z2.json"));
  put("quotients/z6_parity.json", quotient_to_json(parity_quotient(n6, 6), n6, "../groups/z2.json"));

  put("actions/inversion_z3.json", action_to_json(inv.action, inv.complex, "../groups/z2.json"));
  put("actions/swap_z2xz2.json", action_to_json(sw.action, sw.complex, "../groups/z2.json"));
  put("actions/trivial_z3.json", action_to_json(triv.action, triv.complex, "../groups/z2.json"));
  put("actions/trivial_z2.json", action_to_json(real.action, real.complex, "../groups/z2.json"));
  const auto deck_cover = build_cover(deck.complex, deck.quotient);
  put("actions/deck_swap_z2.json", action_to_json(deck.action, deck_cover.total, "../groups/z2.json"));

  put("phi/inversion_z3.json", phi_to_json(PhiData{z2, *realization_case(true).phi}, z3,
                                           "../groups/z2.json"));
  put("phi/trivial_z2.json", phi_to_json(PhiData{z2, *real.phi}, z2, "../groups/z2.json"));

  put("cases/inversion.json", case_json("inversion", "nerve_z3_4.json", 4, "z3_id.json",
                                        "inversion_z3.json", {"thm42", "thm52", "cor54", "borel"}));
  put("cases/swap.json", case_json("swap", "nerve_z2xz2_4.json", 4, "z2xz2_id.json",
                                   "swap_z2xz2.json", {"thm42", "thm52", "cor54", "borel"}));
  put("cases/swap-thm52.json", case_json("swap-thm52", "nerve_z2xz2_4.json", 4, "z2xz2_id.json",
                                         "swap_z2xz2.json", {"thm52"}));
  put("cases/trivial.json", case_json("trivial", "nerve_z3_4.json", 4, "z3_id.json",
                                      "trivial_z3.json", {"cor54", "borel"}));
  auto smith = case_json("smith-inversion", "nerve_z3_4.json", 4, "z3_id.json",
                         "inversion_z3.json", {"smith"});
  smith["space"] = "cover";
  put("cases/smith-inversion.json", smith);
  auto deck_case = case_json("smith-deck-swap", "nerve_z2_4.json", 4, "z2_id.json",
                             "deck_swap_z2.json", {"smith"});
  deck_case["space"] = "cover";
  deck_case["action_on"] = "space";
  put("cases/smith-deck-swap.json", deck_case);
  auto rt = case_json("realize-trivial", "nerve_z2_4.json", 2, "z2_id.json", "trivial_z2.json",
                      {"thm43"});
  rt["phi"] = "../phi/trivial_z2.json";
  put("cases/realize-trivial.json", rt);
  auto ri = case_json("realize-inversion", "nerve_z3_4.json", 2, "z3_id.json",
                      "inversion_z3.json", {"thm43"});
  ri["phi"] = "../phi/inversion_z3.json";
  put("cases/realize-inversion.json", ri);

  // Corrupted inputs.
  auto bad_group = group_to_json(z3);
  bad_group["name"] = "Z3-broken";
  bad_group["table"][1][1] = 0;
  put("corrupted/group_nonassociative.json", bad_group);

  auto bad_action = action_to_json(inv.action, inv.complex, "../groups/z2.json");
  bad_action["maps"]["1"]["1"] = Json::array({"1", "2"});
  put("corrupted/action_breaks_faces.json", bad_action);

  auto bad_complex = complex_to_json(nerve_of_group(z2, 3));
  bad_complex["name"] = "NZ2-swapped";
  auto& faces = bad_complex["faces"]["1.1.1"];
  std::swap(faces[1], faces[2]);
  put("corrupted/complex_swapped_faces.json", bad_complex);
  return 0;
}
