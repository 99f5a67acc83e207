#include "substrata/report.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "substrata/strata.hpp"

namespace substrata {

using nlohmann::json;

namespace {

const char* kModule = "report";

// A clause failed; the report is still printed.
struct Outcome {
  json doc;
  std::string text;
  bool checks_passed = true;
};

GroupSetting setting_of(const RunConfig& cfg) {
  if (cfg.type.empty()) throw InputError(kModule, "--type is required for '" + cfg.verb + "'");
  const Flavor flavor = cfg.flavor.value_or(cfg.type.front() == 'C' ? Flavor::Sp : Flavor::GL);
  GroupSetting s = build_setting(cfg.type, flavor);
  fill_invariant_degrees(s);
  return s;
}

DataPackage package_of(const RunConfig& cfg) {
  return load_package(cfg.data_dir.empty() ? default_data_directory() : cfg.data_dir);
}

json setting_json(const GroupSetting& s) {
  return {{"type", s.type_name()}, {"group", s.group_name()}, {"flavor", to_string(s.flavor)}, {"nu", s.nu},
          {"dim_g", s.dim_g}, {"rank_torus", s.rank_torus}, {"invariant_degrees", s.degrees},
          {"weyl_order", s.weyl_order()}};
}

std::string setting_line(const GroupSetting& s) {
  return s.group_name() + " (" + s.type_name() + ", |W| = " + std::to_string(s.weyl_order()) + ", nu = " +
         std::to_string(s.nu) + ")";
}

json irr_json(const FakeDegreeTable& fd, const IrrLabel& e) { return {{"label", e.to_string()}, {"display", fd.display(e)}}; }

json rep_json(const FakeDegreeTable& fd, const RepMultiset& m) {
  return {{"label", m.canonical()}, {"display", fd.display(m)}};
}

json member_json(const ClassDatum& d) {
  return {{"id", d.id()}, {"shape", d.shape.name()}, {"unipotent", d.unipotent}, {"central_twist", d.central_twist}};
}

json report_json(const CheckReport& r) {
  json items = json::array();
  for (const auto& i : r.items)
    items.push_back({{"clause", i.clause}, {"subject", i.subject}, {"passed", i.passed}, {"detail", i.detail}});
  return {{"name", r.name}, {"passed", r.passed()}, {"failures", r.failures()}, {"items", items}};
}

void report_text(std::ostream& os, const CheckReport& r) {
  os << r.name << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.items.size() - r.failures() << "/"
     << r.items.size() << " clauses)\n";
  for (const auto& i : r.items)
    if (!i.passed || i.clause == "xi-unitriangular")
      os << "  " << (i.passed ? "pass" : "FAIL") << " " << i.clause << " " << i.subject
         << (i.detail.empty() ? "" : "  " + i.detail) << "\n";
}

// Rep_* ordered by (b, label) for display.
std::vector<RepMultiset> ordered_rep_star(const StratificationResult& res) {
  std::vector<RepMultiset> v(res.rep_star.begin(), res.rep_star.end());
  const auto& fd = *res.fake_degrees;
  auto key = [&](const RepMultiset& m) {
    int b = -1;
    for (const auto& [e, _] : m.entries()) b = b < 0 ? fd.n_e(e) : std::min(b, fd.n_e(e));
    return std::make_pair(b, m.canonical());
  };
  std::sort(v.begin(), v.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
  return v;
}

std::vector<const Substratum*> ordered_substrata(const StratificationResult& res) {
  std::vector<const Substratum*> v;
  for (const auto& [_, s] : res.substrata) v.push_back(&s);
  std::sort(v.begin(), v.end(), [](const Substratum* a, const Substratum* b) {
    return std::make_pair(a->b, a->value.canonical()) < std::make_pair(b->b, b->value.canonical());
  });
  return v;
}

std::vector<const Stratum*> ordered_strata(const StratificationResult& res) {
  std::vector<const Stratum*> v;
  for (const auto& [_, s] : res.strata) v.push_back(&s);
  std::sort(v.begin(), v.end(), [](const Stratum* a, const Stratum* b) {
    return std::make_pair(a->b, a->label) < std::make_pair(b->b, b->label);
  });
  return v;
}

json summary_json(const StratificationResult& res) {
  const auto& fd = *res.fake_degrees;
  json star = json::array();
  for (const auto& v : ordered_rep_star(res)) star.push_back(rep_json(fd, v));
  json sigma = json::array();
  for (const auto* st : ordered_strata(res)) {
    json values = json::array();
    for (const auto& v : res.rep_sigma.at(st->label.to_string())) values.push_back(rep_json(fd, v));
    sigma.push_back({{"stratum", irr_json(fd, st->label)}, {"rep_sigma", values}});
  }
  return {{"rep_star", star}, {"rep_sigma", sigma}, {"d_spectrum", res.d_spectrum}};
}

std::string spectrum_text(const std::set<int>& d) {
  std::string s = "{";
  for (int x : d) s += (s.size() > 1 ? ", " : "") + std::to_string(x);
  return s + "}";
}

Outcome do_chartable(const RunConfig& cfg) {
  const auto s = setting_of(cfg);
  const auto table = character_table(s);
  const auto fd = fake_degree_table(table);
  Outcome o;
  json classes = json::array();
  for (const auto& c : table->group().classes())
    classes.push_back({{"label", class_label_string(c.label)}, {"size", c.size}});
  json irr = json::array();
  for (std::size_t i = 0; i < table->size(); ++i)
    irr.push_back({{"label", table->labels()[i].to_string()}, {"display", fd->entries()[i].display},
                   {"values", table->row(i).values}});
  o.doc = {{"classes", classes}, {"irreducibles", irr}, {"setting", setting_json(s)}};

  std::ostringstream os;
  os << "Character table of W(" << s.type_name() << "), " << table->size() << " classes\n";
  os << "classes:";
  for (const auto& c : table->group().classes()) os << " " << class_label_string(c.label) << "(" << c.size << ")";
  os << "\n";
  for (std::size_t i = 0; i < table->size(); ++i) {
    os << "  " << table->labels()[i].to_string() << " " << fd->entries()[i].display << ":";
    for (auto v : table->row(i).values) os << " " << v;
    os << "\n";
  }
  o.text = os.str();
  return o;
}

Outcome do_fakedeg(const RunConfig& cfg) {
  const auto s = setting_of(cfg);
  const auto fd = fake_degree_table(s);
  Outcome o;
  json irr = json::array();
  std::ostringstream os;
  os << "Fake degrees for W(" << s.type_name() << "), invariant degrees";
  for (int d : s.degrees) os << " " << d;
  os << "\n";
  for (const auto& e : fd->sorted_by_b()) {
    irr.push_back({{"label", e.label.to_string()}, {"display", e.display}, {"dim", e.dim}, {"n_e", e.n_e},
                   {"coefficients", e.coefficients}, {"polynomial", e.polynomial_string()}});
    os << "  " << e.label.to_string() << "  " << e.display << "  dim " << e.dim << "  n_E " << e.n_e << "  "
       << e.polynomial_string() << "\n";
  }
  o.doc = {{"irreducibles", irr}, {"setting", setting_json(s)}};
  o.text = os.str();
  return o;
}

Outcome do_substrata(const RunConfig& cfg, bool by_stratum) {
  const auto s = setting_of(cfg);
  const auto pkg = package_of(cfg);
  const auto res = stratify(s, cfg.regime, pkg);
  const auto& fd = *res.fake_degrees;
  Outcome o;
  std::ostringstream os;
  os << setting_line(s);
  if (s.flavor == Flavor::Sp) os << ", regime " << to_string(cfg.regime);
  os << ": " << res.substrata.size() << " substrata, " << res.strata.size() << " strata\n";

  json list = json::array();
  if (!by_stratum) {
    for (const auto* sub : ordered_substrata(res)) {
      json members = json::array();
      os << "d=" << sub->d << " b=" << sub->b << "  V'=" << fd.display(sub->value) << "  V''=" << fd.display(sub->v2)
         << "\n";
      for (const auto& m : sub->members) {
        members.push_back(member_json(res.record(m).datum));
        os << "    " << m << "\n";
      }
      list.push_back({{"id", sub->value.canonical()}, {"v_prime", rep_json(fd, sub->value)},
                      {"v_double_prime", irr_json(fd, sub->v2)}, {"b", sub->b}, {"d", sub->d}, {"members", members}});
    }
    o.doc["substrata"] = list;
  } else {
    for (const auto* st : ordered_strata(res)) {
      json members = json::array(), values = json::array();
      os << "d=" << st->d << " b=" << st->b << "  E=" << fd.display(st->label) << "  Rep_Sigma = {";
      bool first = true;
      for (const auto& v : res.rep_sigma.at(st->label.to_string())) {
        values.push_back(rep_json(fd, v));
        os << (first ? "" : ", ") << fd.display(v);
        first = false;
      }
      os << "}\n";
      for (const auto& m : st->members) {
        members.push_back(member_json(res.record(m).datum));
        os << "    " << m << "\n";
      }
      list.push_back({{"id", st->label.to_string()}, {"label", irr_json(fd, st->label)}, {"b", st->b}, {"d", st->d},
                      {"rep_sigma", values}, {"members", members}});
    }
    o.doc["strata"] = list;
  }
  json star = json::array();
  os << "Rep_* (" << res.rep_star.size() << "):";
  for (const auto& v : ordered_rep_star(res)) {
    star.push_back(rep_json(fd, v));
    os << " " << fd.display(v);
  }
  os << "\nd-spectrum: " << spectrum_text(res.d_spectrum) << "\n";
  o.doc["rep_star"] = star;
  o.doc["d_spectrum"] = res.d_spectrum;
  o.doc["package_version"] = pkg.package_version;
  o.doc["setting"] = setting_json(s);
  o.text = os.str();
  return o;
}

Outcome do_check(const RunConfig& cfg) {
  const auto s = setting_of(cfg);
  const auto pkg = package_of(cfg);
  const auto res = stratify(s, cfg.regime, pkg);
  const auto props = check_properties(res);
  const auto c4b = check_conjecture_4b(res, pkg.xi(s.type_name()));
  Outcome o;
  o.checks_passed = props.passed() && c4b.passed();
  o.doc = {{"properties", report_json(props)}, {"xi_matrix", report_json(c4b)}, {"passed", o.checks_passed},
           {"d_spectrum", res.d_spectrum}, {"package_version", pkg.package_version}, {"setting", setting_json(s)}};
  std::ostringstream os;
  os << setting_line(s);
  if (s.flavor == Flavor::Sp) os << ", regime " << to_string(cfg.regime);
  os << "\n";
  report_text(os, props);
  report_text(os, c4b);
  os << "d-spectrum: " << spectrum_text(res.d_spectrum) << "\n";
  o.text = os.str();
  return o;
}

Outcome do_compare(const RunConfig& cfg) {
  const auto s = setting_of(cfg);
  const auto pkg = package_of(cfg);
  const auto a = stratify(s, Regime::p0odd, pkg);
  const auto b = stratify(s, Regime::p2, pkg);
  const auto c4c = check_conjecture_4c(a, b);
  Outcome o;
  o.checks_passed = c4c.passed();
  o.doc = {{"regimes", {{"p0odd", summary_json(a)}, {"p2", summary_json(b)}}},
           {"regime_independence", report_json(c4c)},
           {"passed", o.checks_passed},
           {"package_version", pkg.package_version},
           {"setting", setting_json(s)}};
  std::ostringstream os;
  os << setting_line(s) << ": p0odd vs p2\n";
  for (const auto* r : {&a, &b}) {
    os << "  " << to_string(r->regime) << ": Rep_* (" << r->rep_star.size() << "):";
    for (const auto& v : ordered_rep_star(*r)) os << " " << r->display(v);
    os << "; d-spectrum " << spectrum_text(r->d_spectrum) << "\n";
  }
  report_text(os, c4c);
  for (const auto& i : c4c.items)
    if (i.passed) os << "  pass " << i.clause << " " << i.subject << "\n";
  o.text = os.str();
  return o;
}

Outcome do_validate(const RunConfig& cfg) {
  const auto pkg = package_of(cfg);
  const auto rep = cfg.type.empty() ? validate_against_engine(pkg) : validate_against_engine(pkg, setting_of(cfg));
  Outcome o;
  o.checks_passed = rep.passed();
  json entries = json::array();
  for (const auto& e : rep.entries)
    entries.push_back({{"coordinate", e.coordinate}, {"check", e.check}, {"passed", e.passed}, {"detail", e.detail}});
  o.doc = {{"entries", entries}, {"failures", rep.failures()}, {"passed", rep.passed()},
           {"package_version", pkg.package_version}};
  std::ostringstream os;
  os << "data package " << pkg.package_version << ": " << rep.entries.size() - rep.failures() << "/" << rep.entries.size()
     << " checks pass\n";
  for (const auto& e : rep.entries)
    if (!e.passed) os << "  FAIL " << e.coordinate << " " << e.check << "  " << e.detail << "\n";
  o.text = os.str();
  return o;
}

}  // namespace

const std::vector<std::string>& known_verbs() {
  static const std::vector<std::string> verbs{"chartable", "fakedeg", "substrata", "strata",
                                              "check", "compare-regimes", "validate-data"};
  return verbs;
}

Format parse_format(const std::string& text) {
  if (text == "text") return Format::text;
  if (text == "json") return Format::json;
  throw InputError(kModule, "unknown format '" + text + "' (expected text or json)");
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    Outcome o;
    const std::string& v = config.verb;
    if (v == "chartable") o = do_chartable(config);
    else if (v == "fakedeg") o = do_fakedeg(config);
    else if (v == "substrata") o = do_substrata(config, false);
    else if (v == "strata") o = do_substrata(config, true);
    else if (v == "check") o = do_check(config);
    else if (v == "compare-regimes") o = do_compare(config);
    else if (v == "validate-data") o = do_validate(config);
    else throw InputError(kModule, "unknown command '" + v + "'");

    if (config.format == Format::json) {
      o.doc["schema_version"] = kReportSchemaVersion;
      o.doc["command"] = v;
      const bool regime_matters =
          v != "compare-regimes" && v != "validate-data" && !config.type.empty() && config.type.front() == 'C' &&
          config.flavor.value_or(Flavor::Sp) == Flavor::Sp && v != "chartable" && v != "fakedeg";
      if (regime_matters) o.doc["regime"] = to_string(config.regime);
      out << o.doc.dump(2) << "\n";
    } else {
      out << o.text;
    }
    return o.checks_passed ? 0 : 1;
  } catch (const Error& e) {
    err << "substrata: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "substrata: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace substrata
