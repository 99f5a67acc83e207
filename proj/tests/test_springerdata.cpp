#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"

using namespace substrata;
namespace fs = std::filesystem;

namespace {

const DataPackage& package() {
  static const DataPackage pkg = load_package(SUBSTRATA_TEST_DATA_DIR);
  return pkg;
}

const Factor B(int a) { return Factor{FactorKind::Hyperoctahedral, a}; }

// A scratch copy of the shipped data that tests may edit.
struct ScratchData {
  fs::path dir;
  ScratchData() {
    dir = fs::temp_directory_path() / ("substrata-data-" + std::to_string(oracle::rng()()));
    fs::copy(SUBSTRATA_TEST_DATA_DIR, dir, fs::copy_options::recursive);
  }
  ~ScratchData() { fs::remove_all(dir); }

  std::string read(const std::string& rel) const {
    std::ifstream in(dir / rel);
    return {std::istreambuf_iterator<char>(in), {}};
  }
  void write(const std::string& rel, const std::string& text) const { std::ofstream(dir / rel) << text; }
  void replace(const std::string& rel, const std::string& from, const std::string& to) const {
    auto text = read(rel);
    const auto pos = text.find(from);
    REQUIRE(pos != std::string::npos);
    text.replace(pos, from.size(), to);
    write(rel, text);
  }
};

std::string load_error(const fs::path& dir) {
  try {
    load_package(dir.string());
  } catch (const DataError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("type A Springer data") {
  const auto reg = typeA_springer(3, Partition({3}));
  CHECK(reg.dim_bu == 0);
  CHECK(reg.class_dim == 6);
  CHECK(reg.top_homology.canonical() == "(3)");
  const auto one = typeA_springer(3, Partition({1, 1, 1}));
  CHECK(one.dim_bu == 3);
  CHECK(one.class_dim == 0);
  CHECK(one.top_homology.canonical() == "(1,1,1)");
  const auto mid = typeA_springer(3, Partition({2, 1}));
  CHECK(mid.dim_bu == 1);
  CHECK(mid.class_dim == 4);

  // dim B_u = n(lambda) and dim C = m^2 - m - 2 n(lambda) for every lambda.
  for (int m = 1; m <= 6; ++m)
    for (const auto& lambda : oracle::partitions(m)) {
      const auto d = typeA_springer(m, Partition(lambda));
      int nl = 0;
      for (std::size_t i = 0; i < lambda.size(); ++i) nl += static_cast<int>(i) * lambda[i];
      CHECK(d.dim_bu == nl);
      CHECK(d.class_dim == m * m - m - 2 * nl);
      CHECK(d.top_homology.total_count() == 1);
    }
}

TEST_CASE("shipped hyperoctahedral data") {
  const auto& pkg = package();
  CHECK(pkg.schema_version == kDataSchemaVersion);
  CHECK(!pkg.package_version.empty());

  SUBCASE("Sp4 in odd characteristic") {
    const auto classes = pkg.classes(B(2), Regime::p0odd);
    REQUIRE(classes.size() == 4);
    std::multiset<int> dims;
    for (const auto& c : classes) dims.insert(c.class_dim);
    CHECK(dims == std::multiset<int>{0, 4, 6, 8});
    const auto sub = pkg.find(B(2), Regime::p0odd, "subregular");
    CHECK(sub.label == "2,2");
    CHECK(sub.top_homology.total_count() == 2);
  }
  SUBCASE("Sp4 in characteristic 2 has two classes with Jordan type (2,2)") {
    const auto classes = pkg.classes(B(2), Regime::p2);
    CHECK(classes.size() == 5);
    CHECK(pkg.find(B(2), Regime::p2, "T~").label == "2,2~");
    CHECK(pkg.find(B(2), Regime::p2, "T").label == "2,1,1");
  }
  SUBCASE("Sp2") {
    for (Regime r : {Regime::p0odd, Regime::p2}) CHECK(pkg.classes(B(1), r).size() == 2);
  }
  SUBCASE("lookup failures") {
    CHECK_THROWS_AS(pkg.find(B(2), Regime::p0odd, "3,1"), InputError);
    CHECK_THROWS_AS(pkg.classes(B(5), Regime::p0odd), DataError);
  }
  SUBCASE("no irreducible occurs in two top homologies") {
    for (int a = 1; a <= 3; ++a) {
      std::map<IrrLabel, int> seen;
      for (const auto& c : pkg.classes(B(a), Regime::p0odd))
        for (const auto& [e, m] : c.top_homology.entries()) seen[e] += m;
      for (const auto& [e, m] : seen) CHECK(m == 1);
    }
  }
}

TEST_CASE("xi tables") {
  const auto& pkg = package();
  for (auto t : {"A1", "A2", "A3", "A4", "A5", "C1", "C2"}) {
    REQUIRE(pkg.has_xi(t));
    CHECK(pkg.xi(t).is_identity());
  }
  const auto& c3 = pkg.xi("C3");
  CHECK(!c3.is_identity());
  int moved = 0;
  for (const auto& [from, to] : c3.map)
    if (from != to) {
      ++moved;
      CHECK(from.to_string() == "(-;3)");
      CHECK(to.to_string() == "(1;2)");
    }
  CHECK(moved == 1);
  CHECK(c3.image().size() == 9);
  CHECK(c3.preimage(IrrLabel::parse("(1;2)")).size() == 2);
  // xi restricts to the identity on its image.
  for (const auto& e : c3.image()) CHECK(c3(e) == e);
}

TEST_CASE("validation against the engine") {
  SUBCASE("the shipped package passes") {
    const auto report = validate_against_engine(package());
    CHECK(report.passed());
    CHECK(report.entries.size() > 100);
    for (const auto& e : report.entries)
      if (!e.passed) FAIL_CHECK(e.coordinate << " " << e.check << ": " << e.detail);
  }
  SUBCASE("dim_bu shifted by one breaks the minimal constituent") {
    DataPackage pkg = package();
    auto& data = pkg.stored(B(2), Regime::p0odd);
    auto it = std::find_if(data.begin(), data.end(), [](const auto& d) { return d.label == "2,1,1"; });
    REQUIRE(it != data.end());
    it->dim_bu += 1;
    const auto report = validate_against_engine(pkg);
    CHECK(!report.passed());
    bool flagged = false;
    for (const auto& e : report.entries)
      if (!e.passed && e.check == "minimal-constituent" && e.coordinate.find("2,1,1") != std::string::npos) flagged = true;
    CHECK(flagged);
  }
  SUBCASE("a top homology that is not Springer-minimal is caught") {
    DataPackage pkg = package();
    auto& data = pkg.stored(B(2), Regime::p0odd);
    auto it = std::find_if(data.begin(), data.end(), [](const auto& d) { return d.label == "4"; });
    REQUIRE(it != data.end());
    it->top_homology = RepMultiset{{IrrLabel::parse("(-;1,1)"), 1}};
    CHECK(!validate_against_engine(pkg).passed());
  }
  SUBCASE("a setting restricts the checks") {
    const auto c2 = build_setting("C2", Flavor::Sp);
    const auto report = validate_against_engine(package(), c2);
    CHECK(report.passed());
    CHECK(report.entries.size() < validate_against_engine(package()).entries.size());
  }
}

TEST_CASE("loading rejects broken data with coordinates") {
  SUBCASE("odd class dimension") {
    ScratchData s;
    s.replace("springer/hyperoctahedral-2/p0odd.json", "\"class_dim\": 6", "\"class_dim\": 5");
    const auto msg = load_error(s.dir);
    CHECK(msg.find("hyperoctahedral-2/p0odd.json#1") != std::string::npos);
    CHECK(msg.find("class-dim-even") != std::string::npos);
  }
  SUBCASE("dim_bu formula") {
    ScratchData s;
    s.replace("springer/hyperoctahedral-2/p0odd.json", "\"dim_bu\": 2", "\"dim_bu\": 3");
    const auto msg = load_error(s.dir);
    CHECK(msg.find("hyperoctahedral-2/p0odd.json#2") != std::string::npos);
    CHECK(msg.find("dim-bu-formula") != std::string::npos);
  }
  SUBCASE("unknown irreducible") {
    ScratchData s;
    s.replace("springer/hyperoctahedral-2/p0odd.json", "[[2], []]", "[[3], []]");
    CHECK(load_error(s.dir).find("hyperoctahedral-2/p0odd.json#0") != std::string::npos);
  }
  SUBCASE("wrong schema version") {
    ScratchData s;
    s.replace("manifest.json", "\"schema_version\": 1", "\"schema_version\": 7");
    CHECK(!load_error(s.dir).empty());
  }
  SUBCASE("malformed JSON") {
    ScratchData s;
    s.write("xi/C2.json", "{ not json");
    CHECK(load_error(s.dir).find("xi/C2.json") != std::string::npos);
  }
  SUBCASE("xi that is not idempotent") {
    ScratchData s;
    s.replace("xi/C3.json", "{\"from\": [[1], [2]], \"to\": [[1], [2]]}", "{\"from\": [[1], [2]], \"to\": [[], [3]]}");
    const auto msg = load_error(s.dir);
    CHECK(msg.find("xi/C3.json") != std::string::npos);
  }
  SUBCASE("missing directory") { CHECK(!load_error("/nonexistent/substrata").empty()); }
}

TEST_CASE("loading is independent of entry order") {
  ScratchData s;
  for (const auto& entry : fs::recursive_directory_iterator(s.dir / "springer")) {
    if (entry.path().extension() != ".json") continue;
    auto doc = nlohmann::json::parse(std::ifstream(entry.path()));
    std::reverse(doc["classes"].begin(), doc["classes"].end());
    std::ofstream(entry.path()) << doc.dump(2);
  }
  for (const auto& entry : fs::directory_iterator(s.dir / "xi")) {
    auto doc = nlohmann::json::parse(std::ifstream(entry.path()));
    std::reverse(doc["map"].begin(), doc["map"].end());
    std::ofstream(entry.path()) << doc.dump(2);
  }
  const auto& a = package();
  const auto b = load_package(s.dir.string());
  CHECK(a.stored_keys() == b.stored_keys());
  for (const auto& [t, xi] : a.xi_tables()) CHECK(b.xi(t).map == xi.map);
  for (const auto& [f, r] : a.stored_keys()) {
    std::map<std::string, UnipotentDatum> x, y;
    for (const auto& d : a.classes(f, r)) x.emplace(d.label, d);
    for (const auto& d : b.classes(f, r)) y.emplace(d.label, d);
    REQUIRE(x.size() == y.size());
    for (const auto& [label, d] : x) {
      REQUIRE(y.count(label));
      CHECK(y.at(label).top_homology == d.top_homology);
      CHECK(y.at(label).dim_bu == d.dim_bu);
    }
  }
  const auto c3 = build_setting("C3", Flavor::Sp);
  for (Regime r : {Regime::p0odd, Regime::p2}) {
    const auto x = stratify(c3, r, a), y = stratify(c3, r, b);
    REQUIRE(x.substrata.size() == y.substrata.size());
    for (const auto& [key, sub] : x.substrata) CHECK(y.substrata.at(key).members == sub.members);
  }
}
