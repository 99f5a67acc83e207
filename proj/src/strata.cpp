#include "substrata/strata.hpp"

#include <algorithm>

namespace substrata {

namespace {

const char* kModule = "strata";

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

IrrLabel v_double_prime_in(const FakeDegreeTable& fd, const RepMultiset& v, int b, const std::string& context) {
  const std::string where = context.empty() ? "" : context + ": ";
  std::vector<IrrLabel> minimal;
  for (const auto& [label, _] : v.entries())
    if (fd.n_e(label) == b) minimal.push_back(label);
  if (minimal.empty())
    throw NoMinimalConstituent(kModule, where + "no constituent of " + v.canonical() + " has n_E = " + std::to_string(b));
  if (minimal.size() > 1)
    throw MultipleMinimal(kModule, where + std::to_string(minimal.size()) + " constituents of " + v.canonical() +
                                       " have n_E = " + std::to_string(b));
  const IrrLabel& e = minimal.front();
  if (v.multiplicity(e) != 1)
    throw MultiplicityNotOne(kModule, where + e.to_string() + " has multiplicity " + std::to_string(v.multiplicity(e)) +
                                          " in " + v.canonical());
  for (const auto& [label, _] : v.entries())
    if (fd.n_e(label) < b)
      throw StrictnessViolation(kModule, where + "constituent " + label.to_string() + " of " + v.canonical() +
                                             " has n_E = " + std::to_string(fd.n_e(label)) + " < " + std::to_string(b));
  return e;
}

// True when e occurs once in m and every other constituent has larger n_E.
bool strictly_minimal(const FakeDegreeTable& fd, const RepMultiset& m, const IrrLabel& e) {
  if (m.multiplicity(e) != 1) return false;
  const int b = fd.n_e(e);
  for (const auto& [label, _] : m.entries())
    if (label != e && fd.n_e(label) <= b) return false;
  return true;
}

}  // namespace

std::string ClassDatum::id() const {
  std::string s = shape.name() + " u=" + join(unipotent, "|");
  if (central_twist == -1) s += " z=-1";
  return s;
}

ClassDatum make_class_datum(const GroupSetting& setting, Regime regime, const DataPackage& package,
                            const CentralizerShape& shape, const std::vector<std::string>& unipotent,
                            int central_twist) {
  ClassDatum d;
  d.shape = shape;
  d.central_twist = central_twist;
  if (central_twist != 1 && central_twist != -1) throw InputError(kModule, "central twist must be +1 or -1");
  if (central_twist == -1 && !(setting.flavor == Flavor::Sp && regime == Regime::p0odd))
    throw InputError(kModule, "central twist -1 exists only for Sp in regime p0odd");
  if (shape.size() != setting.n)
    throw InputError(kModule, "shape " + shape.name() + " does not fit " + setting.group_name());
  if (setting.flavor == Flavor::GL && !shape.sp_blocks.empty())
    throw InputError(kModule, "shape " + shape.name() + " has symplectic blocks in " + setting.group_name());

  const auto factors = shape.factors();
  if (unipotent.size() != factors.size())
    throw InputError(kModule, "shape " + shape.name() + " needs " + std::to_string(factors.size()) +
                                  " unipotent labels, got " + std::to_string(unipotent.size()));
  std::vector<RepMultiset> tops;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    d.factor_data.push_back(package.find(factors[i], regime, unipotent[i]));
    d.unipotent.push_back(d.factor_data.back().label);
    tops.push_back(d.factor_data.back().top_homology);
    d.b += d.factor_data.back().dim_bu;
  }
  d.d = 2 * (setting.nu - d.b);
  d.subgroup = realize_subgroup(setting, shape);
  d.v_u = outer_product(tops);
  if (d.v_u.empty()) throw DataError(kModule, d.id() + ": V_u is empty");
  return d;
}

std::vector<ClassDatum> enumerate_class_data(const GroupSetting& setting, Regime regime, const DataPackage& package) {
  std::vector<ClassDatum> out;
  for (const auto& shape : enumerate_centralizer_shapes(setting, regime)) {
    std::vector<std::vector<UnipotentDatum>> choices;
    for (const auto& f : shape.factors()) choices.push_back(package.classes(f, regime));
    const bool twisted = setting.flavor == Flavor::Sp && regime == Regime::p0odd && shape.gl_blocks.empty() &&
                         shape.sp_blocks.size() == 1;
    std::vector<std::size_t> idx(choices.size(), 0);
    while (true) {
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < idx.size(); ++i) labels.push_back(choices[i][idx[i]].label);
      out.push_back(make_class_datum(setting, regime, package, shape, labels, 1));
      if (twisted) out.push_back(make_class_datum(setting, regime, package, shape, labels, -1));
      std::size_t k = idx.size();
      while (k > 0 && ++idx[k - 1] == choices[k - 1].size()) idx[--k] = 0;
      if (k == 0) break;
    }
  }
  return out;
}

RepMultiset total_springer_module(const ClassDatum& datum) {
  const auto sub_table = character_table(datum.subgroup);
  const auto amb_table = character_table(datum.subgroup.ambient);
  const RepMultiset v = decompose(*amb_table, induce(datum.subgroup, character_of(*sub_table, datum.v_u)));
  if (dimension(*amb_table, v) != datum.subgroup.index() * dimension(*sub_table, datum.v_u))
    throw ConsistencyError(kModule, datum.id() + ": dim V_g differs from index * dim V_u");
  return v;
}

IrrLabel v_double_prime(const FakeDegreeTable& fd, const RepMultiset& v, int b) { return v_double_prime_in(fd, v, b, {}); }

const DatumRecord& StratificationResult::record(const std::string& datum_id) const {
  for (const auto& r : records)
    if (r.datum.id() == datum_id) return r;
  throw InputError(kModule, "no class datum '" + datum_id + "'");
}

StratificationResult compute_substrata(const GroupSetting& setting, Regime regime, std::vector<ClassDatum> data,
                                       const std::string& package_version) {
  if (data.empty()) throw InputError(kModule, "no class data");
  StratificationResult res;
  res.setting = setting;
  res.regime = regime;
  res.package_version = package_version;
  res.fake_degrees = fake_degree_table(setting);
  const auto& fd = *res.fake_degrees;

  std::vector<DatumRecord> recs;
  recs.reserve(data.size());
  for (auto& d : data) {
    DatumRecord r;
    r.v = total_springer_module(d);
    r.v2 = v_double_prime_in(fd, r.v, d.b, d.id());
    r.datum = std::move(d);
    recs.push_back(std::move(r));
  }

  // Descending induction on b. Used holds the supports of all V' at levels
  // strictly above the one being processed.
  std::set<int> levels;
  for (const auto& r : recs) levels.insert(r.datum.b);
  std::set<IrrLabel> used;
  for (auto lvl = levels.rbegin(); lvl != levels.rend(); ++lvl) {
    std::set<IrrLabel> fresh;
    for (auto& r : recs) {
      if (r.datum.b != *lvl) continue;
      r.v1 = r.v.without(used);
      if (r.v1.empty()) throw ConsistencyError(kModule, r.datum.id() + ": V' is empty");
      for (const auto& e : r.v1.support()) fresh.insert(e);
    }
    used.insert(fresh.begin(), fresh.end());
  }

  for (auto& r : recs) {
    r.stratum = r.v2.to_string();
    r.substratum = r.v1.canonical();
    const std::string id = r.datum.id();

    auto& st = res.strata[r.stratum];
    st.label = r.v2;
    st.b = r.datum.b;
    st.d = r.datum.d;
    st.members.push_back(id);

    auto& sub = res.substrata[r.substratum];
    sub.value = r.v1;
    sub.v2 = r.v2;
    sub.b = r.datum.b;
    sub.d = r.datum.d;
    sub.members.push_back(id);

    res.rep_star.insert(r.v1);
    res.rep_sigma[r.stratum].insert(r.v1);
    res.d_spectrum.insert(r.datum.d);
  }
  for (auto& [_, st] : res.strata) std::sort(st.members.begin(), st.members.end());
  for (auto& [_, sub] : res.substrata) std::sort(sub.members.begin(), sub.members.end());

  std::sort(recs.begin(), recs.end(), [](const DatumRecord& a, const DatumRecord& b) {
    if (a.datum.b != b.datum.b) return a.datum.b < b.datum.b;
    return a.datum.id() < b.datum.id();
  });
  res.records = std::move(recs);
  return res;
}

StratificationResult stratify(const GroupSetting& setting, Regime regime, const DataPackage& package) {
  return compute_substrata(setting, regime, enumerate_class_data(setting, regime, package), package.package_version);
}

bool CheckReport::passed() const { return failures() == 0; }

std::size_t CheckReport::failures() const {
  return static_cast<std::size_t>(std::count_if(items.begin(), items.end(), [](const auto& i) { return !i.passed; }));
}

void CheckReport::add(std::string clause, std::string subject, bool passed, std::string detail) {
  items.push_back({std::move(clause), std::move(subject), passed, std::move(detail)});
}

CheckReport check_properties(const StratificationResult& result) {
  CheckReport rep;
  rep.name = "properties";
  const auto& fd = *result.fake_degrees;

  for (const auto& r : result.records) {
    const std::string id = r.datum.id();
    rep.add("levels", id, r.datum.d == 2 * (result.setting.nu - r.datum.b) && r.datum.d % 2 == 0,
            "b=" + std::to_string(r.datum.b) + " d=" + std::to_string(r.datum.d));
    rep.add("v2-minimal", id, fd.n_e(r.v2) == r.datum.b && strictly_minimal(fd, r.v, r.v2),
            "V''=" + result.display(r.v2) + " in V=" + result.display(r.v));
    rep.add("v2-in-v1", id, strictly_minimal(fd, r.v1, r.v2), "V''=" + result.display(r.v2) + " in V'=" + result.display(r.v1));

    // V'' against truncated induction of the minimal constituent of V_u.
    std::string detail;
    bool ok = false;
    try {
      const auto sub_fd = fake_degree_table(character_table(r.datum.subgroup));
      const IrrLabel e0 = v_double_prime(*sub_fd, r.datum.v_u, r.datum.b);
      const IrrLabel j = j_induce(r.datum.subgroup, e0);
      ok = j == r.v2;
      detail = "j(" + e0.to_string() + ")=" + result.display(j);
    } catch (const ConsistencyError& e) {
      detail = e.what();
    }
    rep.add("j-induction", id, ok, detail);
  }

  // V' determines V''.
  std::map<std::string, std::set<IrrLabel>> v2_of;
  for (const auto& r : result.records) v2_of[r.substratum].insert(r.v2);
  for (const auto& [sub, v2s] : v2_of)
    rep.add("v1-determines-v2", result.display(result.substrata.at(sub).value), v2s.size() == 1,
            std::to_string(v2s.size()) + " value(s) of V''");

  // Substrata refine strata.
  for (const auto& [sub, info] : result.substrata) {
    std::set<std::string> strata;
    for (const auto& m : info.members) strata.insert(result.record(m).stratum);
    rep.add("refines-strata", result.display(info.value), strata.size() == 1, std::to_string(strata.size()) + " stratum id(s)");
  }

  // Rep_Sigma partitions Rep_*.
  std::set<RepMultiset> seen;
  bool disjoint = true;
  for (const auto& [_, values] : result.rep_sigma)
    for (const auto& v : values) disjoint = seen.insert(v).second && disjoint;
  rep.add("partition", result.setting.group_name(), disjoint && seen == result.rep_star,
          std::to_string(result.rep_star.size()) + " objects in " + std::to_string(result.rep_sigma.size()) + " parts");

  for (const auto& v : result.rep_star) {
    IrrLabel e;
    int best = -1;
    for (const auto& [label, _] : v.entries())
      if (best < 0 || fd.n_e(label) < best) {
        best = fd.n_e(label);
        e = label;
      }
    rep.add("rep-star-minimal", result.display(v), strictly_minimal(fd, v, e), "minimal constituent " + result.display(e));
  }
  return rep;
}

bool StratumMatrix::unitriangular() const {
  if (rows.size() != columns.size()) return false;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (i == j && entries[i][j] != 1) return false;
      if (j > i && entries[i][j] != 0) return false;
    }
  return true;
}

StratumMatrix stratum_matrix(const StratificationResult& result, const std::string& stratum, const XiTable& xi) {
  const auto& fd = *result.fake_degrees;
  StratumMatrix m;
  m.stratum = stratum;
  m.columns = xi.preimage(result.strata.at(stratum).label);
  std::sort(m.columns.begin(), m.columns.end(), [&](const IrrLabel& a, const IrrLabel& b) {
    return std::make_pair(fd.n_e(a), a) < std::make_pair(fd.n_e(b), b);
  });
  std::vector<std::pair<int, RepMultiset>> keyed;
  for (const auto& v : result.rep_sigma.at(stratum)) {
    int last = -1;
    for (std::size_t j = 0; j < m.columns.size(); ++j)
      if (v.multiplicity(m.columns[j]) != 0) last = static_cast<int>(j);
    keyed.emplace_back(last, v);
  }
  std::sort(keyed.begin(), keyed.end());
  for (const auto& [_, v] : keyed) {
    m.rows.push_back(v);
    std::vector<int> row;
    for (const auto& c : m.columns) row.push_back(v.multiplicity(c));
    m.entries.push_back(std::move(row));
  }
  return m;
}

CheckReport check_conjecture_4b(const StratificationResult& result, const XiTable& xi) {
  CheckReport rep;
  rep.name = "xi-matrix";
  if (xi.weyl_type != result.setting.type_name())
    throw InputError(kModule, "xi table " + xi.weyl_type + " does not belong to " + result.setting.type_name());
  for (const auto& [id, st] : result.strata) {
    const std::string subject = result.display(st.label);
    const auto& values = result.rep_sigma.at(id);
    bool fibre = true;
    for (const auto& v : values)
      for (const auto& [e, _] : v.entries()) fibre = fibre && xi(e) == st.label;
    rep.add("xi-fibre", subject, fibre, "constituents lie in xi^-1(E_Sigma)");
    const auto pre = xi.preimage(st.label);
    rep.add("xi-count", subject, values.size() == pre.size(),
            std::to_string(values.size()) + " objects, |xi^-1| = " + std::to_string(pre.size()));
    const auto m = stratum_matrix(result, id, xi);
    std::string detail;
    for (const auto& row : m.entries) {
      detail += "(";
      for (std::size_t j = 0; j < row.size(); ++j) detail += (j ? "," : "") + std::to_string(row[j]);
      detail += ")";
    }
    rep.add("xi-unitriangular", subject, m.unitriangular(), detail);
  }
  return rep;
}

CheckReport check_conjecture_4c(const StratificationResult& a, const StratificationResult& b) {
  CheckReport rep;
  rep.name = "regime-independence";
  if (a.setting.type_name() != b.setting.type_name() || a.setting.flavor != b.setting.flavor)
    throw InputError(kModule, "regime comparison needs two regimes of one setting");
  const std::string pair = to_string(a.regime) + " vs " + to_string(b.regime);
  rep.add("rep-star", pair, a.rep_star == b.rep_star,
          std::to_string(a.rep_star.size()) + " vs " + std::to_string(b.rep_star.size()) + " objects");
  std::set<std::string> ids;
  for (const auto& [id, _] : a.rep_sigma) ids.insert(id);
  for (const auto& [id, _] : b.rep_sigma) ids.insert(id);
  for (const auto& id : ids) {
    const auto ia = a.rep_sigma.find(id), ib = b.rep_sigma.find(id);
    const bool same = ia != a.rep_sigma.end() && ib != b.rep_sigma.end() && ia->second == ib->second;
    rep.add("rep-sigma", a.fake_degrees->display(IrrLabel::parse(id)), same);
  }
  rep.add("d-spectrum", pair, a.d_spectrum == b.d_spectrum);
  return rep;
}

}  // namespace substrata
