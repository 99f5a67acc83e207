#include "doctest.h"
#include "oracles.hpp"

using namespace substrata;

namespace {

const DataPackage& package() {
  static const DataPackage pkg = load_package(SUBSTRATA_TEST_DATA_DIR);
  return pkg;
}

const GroupSetting& c3() {
  static const GroupSetting s = build_setting("C3", Flavor::Sp);
  return s;
}

const StratificationResult& result(const std::string& type, Regime r) {
  static std::map<std::pair<std::string, Regime>, StratificationResult> cache;
  auto it = cache.find({type, r});
  if (it == cache.end()) {
    const auto s = build_setting(type, type[0] == 'C' ? Flavor::Sp : Flavor::GL);
    it = cache.emplace(std::pair{type, r}, stratify(s, r, package())).first;
  }
  return it->second;
}

std::set<std::string> ids(const std::vector<ClassDatum>& data) {
  std::set<std::string> out;
  for (const auto& d : data) out.insert(d.id());
  return out;
}

std::string v_prime_of(const StratificationResult& res, const std::string& id) {
  return res.display(res.record(id).v1);
}

// V' recomputed straight from the definition: E is kept in V_g unless it occurs
// in V'_{g'} for some g' with b(g') > b(g). Levels are visited top down.
std::map<std::string, RepMultiset> naive_v_prime(const StratificationResult& res) {
  std::map<int, std::vector<const DatumRecord*>, std::greater<>> by_b;
  for (const auto& r : res.records) by_b[r.datum.b].push_back(&r);
  std::map<std::string, RepMultiset> out;
  std::set<IrrLabel> above;
  for (const auto& [b, recs] : by_b) {
    std::set<IrrLabel> here;
    for (const auto* r : recs) {
      RepMultiset v1;
      for (const auto& [e, m] : r->v.entries())
        if (!above.count(e)) v1.add(e, m);
      for (const auto& [e, m] : v1.entries()) here.insert(e);
      out.emplace(r->datum.id(), v1);
    }
    above.insert(here.begin(), here.end());
  }
  return out;
}

const int kPartitionCounts[] = {1, 1, 2, 3, 5, 7, 11};

}  // namespace

TEST_CASE("class data enumeration") {
  SUBCASE("GL3") {
    const auto data = enumerate_class_data(build_setting("A2", Flavor::GL), Regime::p0odd, package());
    CHECK(data.size() == 6);
    CHECK(ids(data).count("GL2xGL1 u=2|1"));
  }
  SUBCASE("Sp6 in odd characteristic has Sp2 x Sp2 x GL1 and twisted copies") {
    const auto got = ids(enumerate_class_data(c3(), Regime::p0odd, package()));
    CHECK(got.count("Sp2xSp2xGL1 u=1,1|1,1|1"));
    CHECK(got.count("Sp6 u=4,1,1 z=-1"));
    CHECK(got.count("Sp4xSp2 u=2,1,1|2"));
  }
  SUBCASE("Sp6 in characteristic 2 has T~ x 1 and no Sp2 x Sp2") {
    const auto got = ids(enumerate_class_data(c3(), Regime::p2, package()));
    CHECK(got.count("Sp4xGL1 u=2,2~|1"));
    for (const auto& id : got) {
      CHECK(id.find("Sp2xSp2") == std::string::npos);
      CHECK(id.find("z=-1") == std::string::npos);
    }
  }
  SUBCASE("b and d") {
    for (Regime r : {Regime::p0odd, Regime::p2})
      for (const auto& d : enumerate_class_data(c3(), r, package())) {
        int b = 0;
        for (const auto& f : d.factor_data) b += f.dim_bu;
        CHECK(d.b == b);
        CHECK(d.d == 2 * (c3().nu - b));
        CHECK(d.d % 2 == 0);
      }
  }
  SUBCASE("invalid input") {
    const auto& pkg = package();
    CHECK_THROWS_AS(make_class_datum(c3(), Regime::p0odd, pkg, CentralizerShape{{2}, {1}}, {"2,1,1"}), InputError);
    CHECK_THROWS_AS(make_class_datum(c3(), Regime::p0odd, pkg, CentralizerShape{{2}, {2}}, {"2,1,1", "1,1"}),
                    InputError);
    CHECK_THROWS_AS(make_class_datum(c3(), Regime::p2, pkg, CentralizerShape{{3}, {}}, {"4,1,1"}, -1), InputError);
    CHECK_THROWS_AS(make_class_datum(c3(), Regime::p0odd, pkg, CentralizerShape{{3}, {}}, {"5,1"}), InputError);
    const auto alias = make_class_datum(c3(), Regime::p0odd, pkg, CentralizerShape{{2}, {1}}, {"T", "1"});
    CHECK(alias.id() == "Sp4xGL1 u=2,1,1|1");
  }
}

TEST_CASE("total Springer module") {
  const auto fd = fake_degree_table(c3());
  SUBCASE("semisimple GL2 x Sp2") {
    const auto d = make_class_datum(c3(), Regime::p0odd, package(), CentralizerShape{{1}, {2}}, {"1,1", "1,1"});
    const auto v = total_springer_module(d);
    int dim = 0;
    for (const auto& [e, m] : v.entries()) dim += m * static_cast<int>(fd->of(e).dim);
    CHECK(dim == 12);
    CHECK(d.b == 2);
    CHECK(fd->display(v_double_prime(*fd, v, d.b)) == "3_2");
  }
  SUBCASE("regular unipotent gives the trivial representation") {
    const auto d = make_class_datum(c3(), Regime::p2, package(), CentralizerShape{{3}, {}}, {"regular"});
    CHECK(fd->display(total_springer_module(d)) == "1_0");
  }
  SUBCASE("central elements give the sign representation") {
    const auto d = make_class_datum(c3(), Regime::p0odd, package(), CentralizerShape{{3}, {}}, {"1"}, -1);
    CHECK(fd->display(total_springer_module(d)) == "1_9");
  }
  SUBCASE("the torus gives the regular representation") {
    const auto d = make_class_datum(c3(), Regime::p0odd, package(), CentralizerShape{{}, {1, 1, 1}}, {"1", "1", "1"});
    const auto v = total_springer_module(d);
    for (const auto& e : fd->entries()) CHECK(v.multiplicity(e.label) == e.dim);
  }
}

TEST_CASE("v_double_prime") {
  const auto fd = fake_degree_table(c3());
  const auto L = [](const char* s) { return IrrLabel::parse(s); };
  const IrrLabel e32 = L("(1;2)"), e13 = L("(-;3)"), e22 = L("(2,1;-)"), e33 = L("(1,1;1)"), e31 = L("(2;1)");
  CHECK(v_double_prime(*fd, RepMultiset{{e32, 1}, {e13, 1}}, 2) == e32);
  CHECK(v_double_prime(*fd, RepMultiset{{e31, 1}, {e33, 2}}, 1) == e31);
  CHECK_THROWS_AS(v_double_prime(*fd, RepMultiset{{e33, 1}}, 2), NoMinimalConstituent);
  CHECK_THROWS_AS(v_double_prime(*fd, RepMultiset{{e32, 1}, {e22, 1}}, 2), MultipleMinimal);
  CHECK_THROWS_AS(v_double_prime(*fd, RepMultiset{{e32, 2}}, 2), MultiplicityNotOne);
  CHECK_THROWS_AS(v_double_prime(*fd, RepMultiset{{e32, 1}, {e31, 1}}, 2), StrictnessViolation);
  CHECK_THROWS_AS(v_double_prime(*fd, RepMultiset{{e32, 1}, {e31, 1}}, 2), VDoublePrimeError);
}

TEST_CASE("GL_n strata") {
  for (int n = 2; n <= 5; ++n) {
    const std::string type = "A" + std::to_string(n - 1);
    const auto& res = result(type, Regime::p0odd);
    CAPTURE(type);
    CHECK(static_cast<int>(res.substrata.size()) == kPartitionCounts[n]);
    CHECK(static_cast<int>(res.strata.size()) == kPartitionCounts[n]);
    CHECK(res.rep_star.size() == res.fake_degrees->table().size());
    for (const auto& v : res.rep_star) CHECK(v.total_count() == 1);
    for (const auto& r : res.records) {
      bool semisimple = true;
      for (const auto& u : r.datum.unipotent) semisimple = semisimple && u.find_first_not_of("1,") == std::string::npos;
      if (!semisimple) continue;
      int sq = 0;
      for (int m : r.datum.shape.gl_blocks) sq += m * m;
      CHECK(res.substrata.at(r.substratum).d == n * n - sq);
    }
    // The regime flag does not matter for GL.
    CHECK(result(type, Regime::p2).substrata.size() == res.substrata.size());
  }
}

TEST_CASE("Sp4 strata") {
  for (Regime r : {Regime::p0odd, Regime::p2}) {
    const auto& res = result("C2", r);
    CHECK(res.substrata.size() == 5);
    CHECK(res.strata.size() == 5);
    CHECK(res.rep_star.size() == 5);
    const auto& t = res.record("Sp4 u=2,1,1");
    const auto& other = res.record(r == Regime::p2 ? "Sp4 u=2,2~" : "Sp2xSp2 u=1,1|1,1");
    CHECK(t.datum.d == 4);
    CHECK(other.datum.d == 4);
    CHECK(t.substratum != other.substratum);
    CHECK(t.stratum != other.stratum);
    CHECK(res.display(other.v1) == "1_2");
  }
  CHECK(result("C2", Regime::p0odd).d_spectrum == std::set<int>{0, 4, 6, 8});
  CHECK(result("C2", Regime::p2).d_spectrum == std::set<int>{0, 4, 6, 8});
}

TEST_CASE("Sp6 strata") {
  const std::set<std::string> rep_star{"1_0", "3_1", "2_2", "3_2", "3_2+1_3", "3_3", "3_4", "2_5", "1_6", "1_9"};
  const std::set<std::string> strata{"1_0", "3_1", "2_2", "3_2", "3_3", "3_4", "2_5", "1_6", "1_9"};
  for (Regime r : {Regime::p0odd, Regime::p2}) {
    const auto& res = result("C3", r);
    std::set<std::string> got;
    for (const auto& v : res.rep_star) got.insert(res.display(v));
    CHECK(got == rep_star);
    got.clear();
    for (const auto& [id, s] : res.strata) got.insert(res.display(s.label));
    CHECK(got == strata);
    CHECK(res.d_spectrum == std::set<int>{0, 6, 8, 10, 12, 14, 16, 18});

    std::set<std::string> d14;
    for (const auto& [id, s] : res.substrata)
      if (s.d == 14) d14.insert(res.display(s.value));
    CHECK(d14 == std::set<std::string>{"2_2", "3_2", "3_2+1_3"});

    // (a), (c), (e)
    CHECK(v_prime_of(res, "Sp6 u=4,1,1") == "2_2");
    CHECK(v_prime_of(res, "Sp4xGL1 u=2,1,1|1") == "2_2");
    CHECK(v_prime_of(res, "Sp2xGL2 u=1,1|1,1") == "3_2");
  }
  const auto& two = result("C3", Regime::p2);
  const auto& odd = result("C3", Regime::p0odd);
  // (b) and (f) for p = 2
  CHECK(v_prime_of(two, "Sp6 u=3,3") == "3_2+1_3");
  CHECK(v_prime_of(two, "Sp4xGL1 u=2,2~|1") == "3_2+1_3");
  // (b), (d), (g) for p != 2
  CHECK(v_prime_of(odd, "Sp6 u=3,3") == "3_2");
  CHECK(v_prime_of(odd, "Sp6 u=3,3 z=-1") == "3_2");
  CHECK(v_prime_of(odd, "Sp2xSp2xGL1 u=1,1|1,1|1") == "3_2+1_3");
  CHECK(v_prime_of(odd, "Sp4xSp2 u=2,2|1,1") == "3_2+1_3");
  // (h) is listed under two substrata; it has to land in exactly one of them.
  const auto h = v_prime_of(odd, "Sp4xSp2 u=2,1,1|2");
  CHECK((h == "2_2" || h == "3_2+1_3"));
  MESSAGE("(h) lands in V' = " << h);
}

TEST_CASE("descending induction agrees with the definition") {
  for (auto t : {"A3", "A4", "C2", "C3"})
    for (Regime r : {Regime::p0odd, Regime::p2}) {
      const auto& res = result(t, r);
      const auto naive = naive_v_prime(res);
      for (const auto& rec : res.records) {
        CHECK(rec.v1 == naive.at(rec.datum.id()));
        CHECK(!rec.v1.empty());
        for (const auto& [e, m] : rec.v1.entries()) CHECK(rec.v.multiplicity(e) == m);
        CHECK(rec.v1.multiplicity(rec.v2) == 1);
      }
    }
}

TEST_CASE("descending induction is independent of data order") {
  for (auto [t, r] : {std::pair{"C3", Regime::p0odd}, {"C3", Regime::p2}, {"A4", Regime::p0odd}}) {
    const auto s = build_setting(t, t[0] == 'C' ? Flavor::Sp : Flavor::GL);
    const auto& ref = result(t, r);
    auto data = enumerate_class_data(s, r, package());
    for (int k = 0; k < 10; ++k) {
      std::shuffle(data.begin(), data.end(), oracle::rng());
      const auto res = compute_substrata(s, r, data);
      REQUIRE(res.records.size() == ref.records.size());
      for (std::size_t i = 0; i < res.records.size(); ++i) {
        CHECK(res.records[i].datum.id() == ref.records[i].datum.id());
        CHECK(res.records[i].v1 == ref.records[i].v1);
        CHECK(res.records[i].substratum == ref.records[i].substratum);
      }
      CHECK(res.rep_star == ref.rep_star);
    }
  }
}

TEST_CASE("central twist does not change V") {
  const auto& res = result("C3", Regime::p0odd);
  int twisted = 0;
  for (const auto& rec : res.records) {
    const auto id = rec.datum.id();
    if (rec.datum.central_twist != -1) continue;
    ++twisted;
    const auto& plain = res.record(id.substr(0, id.size() - std::string(" z=-1").size()));
    CHECK(plain.v == rec.v);
    CHECK(plain.substratum == rec.substratum);
  }
  CHECK(twisted > 0);
}

TEST_CASE("V'' is the j-induction of the minimal constituent of V_u") {
  for (auto t : {"A1", "A2", "A3", "A4", "C2", "C3"})
    for (Regime r : {Regime::p0odd, Regime::p2}) {
      const auto& res = result(t, r);
      for (const auto& rec : res.records) {
        const auto sub_fd = fake_degree_table(character_table(rec.datum.subgroup));
        const IrrLabel e = v_double_prime(*sub_fd, rec.datum.v_u, rec.datum.b);
        CHECK(j_induce(rec.datum.subgroup, e) == rec.v2);
      }
    }
}

TEST_CASE("properties and conjectures") {
  for (auto t : {"A1", "A2", "A3", "A4", "C2", "C3"})
    for (Regime r : {Regime::p0odd, Regime::p2}) {
      const auto& res = result(t, r);
      CAPTURE(t);
      const auto props = check_properties(res);
      CHECK(props.passed());
      for (const auto& item : props.items)
        if (!item.passed) FAIL_CHECK(item.clause << " " << item.subject << ": " << item.detail);
      CHECK(check_conjecture_4b(res, package().xi(t)).passed());
    }
  for (auto t : {"C2", "C3"}) CHECK(check_conjecture_4c(result(t, Regime::p2), result(t, Regime::p0odd)).passed());
}

TEST_CASE("stratum matrix for 3_2") {
  for (Regime r : {Regime::p0odd, Regime::p2}) {
    const auto& res = result("C3", r);
    std::string key;
    for (const auto& [id, s] : res.strata)
      if (res.display(s.label) == "3_2") key = id;
    REQUIRE(!key.empty());
    const auto m = stratum_matrix(res, key, package().xi("C3"));
    REQUIRE(m.columns.size() == 2);
    CHECK(res.display(m.columns[0]) == "3_2");
    CHECK(res.display(m.columns[1]) == "1_3");
    CHECK(m.entries == std::vector<std::vector<int>>{{1, 0}, {1, 1}});
    CHECK(m.unitriangular());
  }
}

TEST_CASE("checks fail on inconsistent input") {
  SUBCASE("an xi table that is the identity breaks the xi matrix for C3") {
    XiTable id;
    id.weyl_type = "C3";
    for (const auto& e : fake_degree_table(c3())->entries()) id.map.emplace(e.label, e.label);
    CHECK(!check_conjecture_4b(result("C3", Regime::p2), id).passed());
  }
  SUBCASE("a non-unitriangular matrix is detected") {
    StratumMatrix m;
    m.rows.resize(2);
    m.columns = {IrrLabel::parse("(1;2)"), IrrLabel::parse("(-;3)")};
    m.entries = {{1, 1}, {0, 1}};
    CHECK(!m.unitriangular());
    m.entries = {{2, 0}, {1, 1}};
    CHECK(!m.unitriangular());
    m.entries = {{1, 0}, {5, 1}};
    CHECK(m.unitriangular());
  }
  SUBCASE("regime comparison refuses different settings") {
    CHECK_THROWS_AS(check_conjecture_4c(result("C2", Regime::p2), result("C3", Regime::p2)), InputError);
  }
}
