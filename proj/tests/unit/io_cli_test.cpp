#include <gtest/gtest.h>

#include <sstream>

#include "kanact/cli.hpp"
#include "kanact/error.hpp"
#include "kanact/io.hpp"
#include "kanact/nerve.hpp"
#include "roundtrip.hpp"

using namespace kanact;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = KANACT_FIXTURE_DIR;

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "kanact");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string fx(const std::string& rel) { return (kFixtures / rel).string(); }

}  // namespace

TEST(Io, EveryFixtureRoundTripsByteExact) {
  const auto results = roundtrip::check_all(kFixtures);
  EXPECT_GE(results.size(), 30u);
  for (const auto& r : results) EXPECT_TRUE(r.ok) << r.file << ": " << r.detail;
}

TEST(Io, ComplexRoundTripInMemory) {
  for (const auto& g : groups_up_to_order_six()) {
    const auto x = nerve_of_group(g, 3);
    const auto back = complex_from_json(parse_json(canonical_dump(complex_to_json(x))));
    EXPECT_EQ(back, x) << g.name();
  }
}

TEST(Io, ParseErrorsCarryPosition) {
  try {
    parse_json("{\n  \"a\": 1,\n  \"b\": \n}\n", "t.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_NE(std::string(e.what()).find("t.json:4:"), std::string::npos) << e.what();
  }
}

TEST(Io, SchemaErrors) {
  auto j = complex_to_json(nerve_of_group(cyclic_group(2), 2));
  j["colour"] = "red";
  try {
    complex_from_json(j);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SchemaError);
  }
  auto g = group_to_json(cyclic_group(2));
  g.erase("table");
  EXPECT_THROW(group_from_json(g), Error);
}

TEST(Io, CorruptedComplexNamesTheIdentity) {
  try {
    complex_from_json(read_json_file(kFixtures / "corrupted" / "complex_swapped_faces.json"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvariantViolation);
    EXPECT_NE(std::string(e.what()).find("d0 d1 != d0 d0 on generator 1.1.1"), std::string::npos);
  }
}

TEST(Io, CaseLoading) {
  const auto c = load_case(kFixtures / "cases" / "swap.json");
  EXPECT_EQ(c.name, "swap");
  EXPECT_EQ(c.complex.max_dim(), 4);
  EXPECT_EQ(c.quotient.group.order(), 4);
  EXPECT_EQ(c.action.group.order(), 2);
  EXPECT_EQ(c.theorems.size(), 4u);
  const auto r = load_case(kFixtures / "cases" / "realize-inversion.json");
  EXPECT_EQ(r.complex.max_dim(), 2);
  ASSERT_TRUE(r.phi.has_value());
  EXPECT_EQ(r.check_depth, 1);
}

TEST(Cli, ExitCodesOnCorruptedInputs) {
  const auto a = cli({"validate", fx("corrupted/complex_swapped_faces.json")});
  EXPECT_EQ(a.code, kExitInput);
  EXPECT_NE(a.err.find("d0 d1 != d0 d0 on generator 1.1.1"), std::string::npos);
  const auto b = cli({"validate", fx("corrupted/group_nonassociative.json")});
  EXPECT_EQ(b.code, kExitInput);
  EXPECT_NE(b.err.find("associativity"), std::string::npos);
  const auto c = cli({"validate", fx("complexes/nerve_z3_4.json"), "--action",
                      fx("corrupted/action_breaks_faces.json")});
  EXPECT_EQ(c.code, kExitInput);
  EXPECT_NE(c.err.find("equivariance of faces"), std::string::npos);
}

TEST(Cli, CasesPassOrReportHypothesis) {
  for (const auto* name : {"inversion", "swap", "swap-thm52", "trivial", "smith-inversion",
                           "realize-trivial", "realize-inversion"}) {
    const auto r = cli({"verify", fx(std::string("cases/") + name + ".json"), "--quiet"});
    EXPECT_EQ(r.code, kExitPass) << name << r.err;
  }
  const auto d = cli({"verify", fx("cases/smith-deck-swap.json")});
  EXPECT_EQ(d.code, kExitHypothesis);
  EXPECT_NE(d.out.find("hypothesis_failed"), std::string::npos);
}

TEST(Cli, HomologyAndUsageErrors) {
  const auto h = cli({"homology", fx("complexes/nerve_z2_5.json")});
  EXPECT_EQ(h.code, kExitPass);
  EXPECT_NE(h.out.find("H_1 = Z/2"), std::string::npos);
  EXPECT_NE(h.out.find("H_3 = Z/2"), std::string::npos);
  EXPECT_EQ(cli({"homology", fx("complexes/nerve_z2_5.json"), "--coeff", "4"}).code, kExitInput);
  EXPECT_EQ(cli({"frobnicate"}).code, kExitInput);
  EXPECT_EQ(cli({"validate", fx("no/such/file.json")}).code, kExitInput);
  EXPECT_EQ(cli({"--help"}).code, kExitPass);
}

TEST(Cli, NerveWritesCanonicalJson) {
  const auto r = cli({"nerve", "Z2", "--dim", "4"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_EQ(r.out, roundtrip::slurp(kFixtures / "complexes" / "nerve_z2_4.json"));
}
