#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "doctest.h"
#include "photocorr/atomdata.hpp"
#include "photocorr/numerics.hpp"

using namespace photocorr;

namespace {

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

const AtomRecord &find(const std::vector<AtomRecord> &recs, double z) {
  for (const auto &r : recs)
    if (r.z == z)
      return r;
  throw std::runtime_error("missing record");
}

} // namespace

TEST_CASE("bundled dataset") {
  const auto &data = builtin_dataset();
  REQUIRE(data.size() == 8);
  const std::vector<std::pair<double, std::pair<double, double>>> defects = {
      {5, {0.96, 0.76}},  {7, {1.23, 0.95}},  {10, {1.44, 1.27}}, {14, {2.00, 1.69}},
      {18, {2.31, 2.04}}, {32, {3.04, 2.74}}, {36, {3.28, 3.06}}, {50, {3.96, 3.37}}};
  for (const auto &[z, d] : defects) {
    const auto &r = find(data, z);
    CHECK(r.delta_h == d.first);
    CHECK(r.delta_inf == d.second);
    CHECK(r.provenance_of("defect") == Provenance::PaperTable);
    CHECK(r.provenance_of("normsq") == Provenance::Derived);
    CHECK(r.provenance_of("enp") == Provenance::Derived);
    if (!r.norm_ratio.empty())
      CHECK(r.provenance_of("normratio") == Provenance::Derived);
    CHECK_NOTHROW(r.validate());
  }
  CHECK(find(data, 10).symbol == "Ne");
  CHECK(find(data, 50).n_h() == 5);
  CHECK(find(data, 10).e_np_hartree(2) ==
        doctest::Approx(find(data, 10).e_np_ev.at(2) / kHartreeEv).epsilon(1e-15));
}

TEST_CASE("bundled text equals the data file") {
  CHECK(read_file(PHOTOCORR_DATA_FILE) == builtin_dataset_text());
}

TEST_CASE("empty and comment-only input") {
  for (const char *text : {"", "\n\n", "# nothing here\n   # still nothing\n"}) {
    const auto r = parse_atom_file(text);
    CHECK(r.ok());
    CHECK(r.records.empty());
  }
}

TEST_CASE("occupancy limit is reported at its line") {
  const std::string text = "atom He Z=2\n"
                           "  shell n=1 l=0 occ=2\n"
                           "  shell n=2 l=0 occ=3\n";
  const auto r = parse_atom_file(text);
  REQUIRE(r.errors.size() == 1);
  CHECK(r.errors[0].line == 3);
  CHECK(r.errors[0].column > 0);
  CHECK(r.errors[0].message == "occupancy exceeds 2(2l+1)");
  CHECK(r.records.empty());
  CHECK_THROWS_AS(parse_atom_file_or_throw(text), DataError);
}

TEST_CASE("positioned parse errors") {
  struct Case {
    std::string text;
    int line;
    std::string fragment;
  };
  const std::vector<Case> cases = {
      {"atom X Z=3\n  shell n=1 l=0 occ=2 spin=1\n", 2, "unknown key 'spin'"},
      {"atom X Z=3\n  shell n=1 l=0 occ=2\n  shell n=1 l=0 occ=1\n", 3, "duplicate shell"},
      {"atom X Z=3\n  orbit n=1\n", 2, "unknown statement"},
      {"  shell n=1 l=0 occ=2\n", 1, "outside an atom record"},
      {"atom X Z=3\n  shell n=1 l=1 occ=2\n", 2, "invalid shell"},
      {"atom X Z=3\n  normsq n=2 value=abc\n", 2, "invalid number"},
      {"atom X Z=3\n  enp n=2 E=5\n", 2, "must be negative"},
      {"atom X Z=3\n  defect h=1\n", 2, "missing inf="},
      {"atom X Z=3\n  prov normsq=guess\n", 2, "unknown provenance"},
      {"atom X Z=3\n  prov color=derived\n", 2, "unknown key 'color'"},
      {"atom X Z=-1\n", 1, "Z must be positive"},
      {"atom X Z=3 Z=4\n", 1, "repeated key"},
  };
  for (const auto &c : cases) {
    INFO(c.text);
    const auto r = parse_atom_file(c.text);
    REQUIRE(!r.errors.empty());
    CHECK(r.errors[0].line == c.line);
    CHECK(r.errors[0].message.find(c.fragment) != std::string::npos);
  }
}

TEST_CASE("bad records are dropped, good ones kept") {
  const std::string text = "atom A Z=3\n  shell n=1 l=0 occ=9\n"
                           "atom B Z=4\n  shell n=1 l=0 occ=2\n";
  const auto r = parse_atom_file(text);
  CHECK(r.errors.size() == 1);
  REQUIRE(r.records.size() == 1);
  CHECK(r.records[0].symbol == "B");
}

TEST_CASE("serialize then parse is the identity") {
  const auto &data = builtin_dataset();
  const auto text = serialize(data);
  const auto back = parse_atom_file(text);
  REQUIRE(back.ok());
  CHECK(back.records == data);
  CHECK(serialize(back.records) == text);

  AtomRecord r;
  r.z = 3.0000000000000004;
  r.symbol = "Li";
  r.shells = {{1, 0, 2, -64.4}, {2, 0, 1, std::nullopt}};
  r.norm_sq_s = {{2, 0.1 + 0.2}};
  r.delta_inf = 0.4;
  r.e_np_ev = {{2, -3.5440000000000001}};
  r.provenance = {{"normsq", Provenance::User}};
  const auto again = parse_atom_file(serialize({r}));
  REQUIRE(again.ok());
  CHECK(again.records == std::vector<AtomRecord>{r});
}

TEST_CASE("parser never throws on malformed input") {
  const std::string base(builtin_dataset_text());
  const std::string alphabet = "atomshelnrqvfdp=-+.eE0123456789 \t\n#xyzZ";
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 3000; ++trial) {
    std::string text;
    if (trial % 2 == 0) {
      std::uniform_int_distribution<std::size_t> len(0, 400);
      std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
      const std::size_t n = len(rng);
      for (std::size_t i = 0; i < n; ++i)
        text.push_back(alphabet[pick(rng)]);
    } else {
      text = base;
      std::uniform_int_distribution<std::size_t> pos(0, text.size() - 1);
      std::uniform_int_distribution<int> byte(0, 255);
      for (int k = 0; k < 1 + trial % 20; ++k)
        text[pos(rng)] = static_cast<char>(byte(rng));
    }
    ParseResult r;
    REQUIRE_NOTHROW(r = parse_atom_file(text));
    for (const auto &e : r.errors)
      REQUIRE(e.line >= 1);
    const auto again = parse_atom_file(serialize(r.records));
    REQUIRE(again.ok());
    REQUIRE(again.records == r.records);
  }
}

TEST_CASE("dataset location") {
  CHECK(load_dataset().size() == builtin_dataset().size());
  const std::string path = "photocorr_test_atoms.dat";
  {
    std::ofstream out(path);
    out << "atom He Z=2\n  shell n=1 l=0 occ=2\n  normsq n=1 value=16\n"
           "  defect inf=0.1\n";
  }
  const auto direct = load_dataset(path);
  REQUIRE(direct.size() == 1);
  CHECK(direct[0].symbol == "He");
  CHECK(direct[0].delta_h_value() == doctest::Approx(1.0 - std::cbrt(0.5)));

  setenv("PHOTOCORR_DATA", path.c_str(), 1);
  CHECK(load_dataset().size() == 1);
  unsetenv("PHOTOCORR_DATA");
  CHECK_THROWS_AS(load_dataset(std::string("no/such/file.dat")), DataError);
  std::remove(path.c_str());
}

TEST_CASE("record invariants") {
  AtomRecord r = builtin_dataset().front();
  CHECK_NOTHROW(r.validate());
  r.shells.push_back(r.shells.front());
  CHECK_THROWS_AS(r.validate(), DataError);
  r = builtin_dataset().front();
  r.delta_inf.reset();
  CHECK_THROWS_AS(r.defect_model(), DataError);
  CHECK(provenance_from_string("derived") == Provenance::Derived);
  CHECK(!provenance_from_string("maybe"));
  CHECK(r.provenance_of("shell") == Provenance::User);
}
