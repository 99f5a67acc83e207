#include "substrata/springerdata.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "json.hpp"
#include "substrata/coinvar.hpp"

#ifndef SUBSTRATA_DEFAULT_DATA_DIR
#define SUBSTRATA_DEFAULT_DATA_DIR "data"
#endif

namespace substrata {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const char* kModule = "springerdata";

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw DataError(kModule, where + ": " + what);
}

json read_json(const fs::path& path, const std::string& where) {
  std::ifstream in(path);
  if (!in) fail(where, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    fail(where, std::string("invalid JSON: ") + e.what());
  }
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) fail(where, std::string("missing field '") + key + "'");
  return obj.at(key);
}

int int_field(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
    fail(where, std::string("field '") + key + "' must be a nonnegative integer");
  return v.get<int>();
}

std::string string_field(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_string()) fail(where, std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

Partition parse_parts(const json& v, const std::string& where) {
  if (!v.is_array()) fail(where, "partition must be an array of integers");
  std::vector<int> parts;
  for (const auto& x : v) {
    if (!x.is_number_integer() || x.get<int>() <= 0) fail(where, "partition parts must be positive integers");
    parts.push_back(x.get<int>());
  }
  if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>()))
    fail(where, "partition " + v.dump() + " is not weakly decreasing");
  return Partition(parts);
}

// [[alpha],[beta]] for a hyperoctahedral factor, [lambda] for a symmetric one.
IrrLabel parse_irr(const json& v, FactorKind kind, const std::string& where) {
  if (kind == FactorKind::Symmetric) return IrrLabel(parse_parts(v, where));
  if (!v.is_array() || v.size() != 2) fail(where, "bipartition must be a pair of arrays");
  return IrrLabel(Bipartition{parse_parts(v[0], where), parse_parts(v[1], where)});
}

void resolve(const CharacterTable& table, const IrrLabel& label, const std::string& where) {
  if (!table.find(label)) fail(where, "label " + label.to_string() + " is not an irreducible of " + table.group().id());
}

// Lie type "C3" / "A4" -> the Weyl group as a single factor.
Factor factor_of_type(const std::string& type, const std::string& where) {
  try {
    const auto setting = build_setting(type, type.front() == 'C' ? Flavor::Sp : Flavor::GL);
    return setting.ambient_factor();
  } catch (const Error& e) {
    fail(where, "unknown Weyl type '" + type + "'");
  }
}

// Arithmetic invariants that need no character theory.
void check_arithmetic(const UnipotentDatum& d) {
  if (d.class_dim % 2 != 0) fail(d.source, "class-dim-even: class_dim " + std::to_string(d.class_dim) + " is odd");
  const int expected = d.factor.num_reflections() - d.class_dim / 2;
  if (d.dim_bu != expected)
    fail(d.source, "dim-bu-formula: dim_bu " + std::to_string(d.dim_bu) + " but nu - class_dim/2 = " +
                       std::to_string(expected));
  if (d.top_homology.empty()) fail(d.source, "top-homology-nonempty: no constituents");
}

std::vector<UnipotentDatum> load_springer_file(const fs::path& path, const std::string& where, Factor& factor,
                                               Regime& regime) {
  const json doc = read_json(path, where);
  if (int_field(doc, "schema_version", where) != kDataSchemaVersion)
    fail(where, "unsupported schema_version (expected " + std::to_string(kDataSchemaVersion) + ")");
  const std::string fname = string_field(doc, "factor", where);
  if (fname.size() < 2 || fname[0] != 'B') fail(where, "factor must look like 'B<rank>'");
  factor = Factor{FactorKind::Hyperoctahedral, std::stoi(fname.substr(1))};
  try {
    regime = parse_regime(string_field(doc, "regime", where));
  } catch (const InputError& e) {
    fail(where, e.what());
  }
  const auto table = factor_character_table(factor);

  const json& classes = field(doc, "classes", where);
  if (!classes.is_array() || classes.empty()) fail(where, "'classes' must be a nonempty array");
  std::vector<UnipotentDatum> out;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const json& c = classes[i];
    UnipotentDatum d;
    d.factor = factor;
    d.regime = regime;
    d.source = where + "#" + std::to_string(i);
    d.label = string_field(c, "label", d.source);
    d.source += " (" + d.label + ")";
    const Partition jordan = parse_parts(field(c, "jordan", d.source), d.source);
    if (jordan.size() != 2 * factor.rank)
      fail(d.source, "jordan partition " + jordan.to_string() + " does not have size " + std::to_string(2 * factor.rank));
    if (d.label.rfind(jordan.to_string(), 0) != 0) fail(d.source, "label does not start with its Jordan partition");
    if (c.contains("aliases"))
      for (const auto& a : c.at("aliases")) {
        if (!a.is_string()) fail(d.source, "aliases must be strings");
        d.aliases.push_back(a.get<std::string>());
      }
    d.class_dim = int_field(c, "class_dim", d.source);
    d.dim_bu = int_field(c, "dim_bu", d.source);
    d.provenance = string_field(c, "provenance", d.source);
    const json& top = field(c, "top_homology", d.source);
    if (!top.is_array()) fail(d.source, "'top_homology' must be an array");
    for (const auto& t : top) {
      const IrrLabel irr = parse_irr(field(t, "irr", d.source), FactorKind::Hyperoctahedral, d.source);
      resolve(*table, irr, d.source);
      const int mult = int_field(t, "mult", d.source);
      if (mult == 0) fail(d.source, "multiplicity of " + irr.to_string() + " is zero");
      if (d.top_homology.multiplicity(irr) != 0) fail(d.source, "constituent " + irr.to_string() + " listed twice");
      d.top_homology.add(irr, mult);
    }
    for (const std::string& name : [&] {
           auto names = d.aliases;
           names.push_back(d.label);
           return names;
         }())
      if (!seen.insert(name).second) fail(d.source, "duplicate class label or alias '" + name + "'");
    check_arithmetic(d);
    out.push_back(std::move(d));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.label < b.label; });
  return out;
}

XiTable load_xi_file(const fs::path& path, const std::string& where) {
  const json doc = read_json(path, where);
  if (int_field(doc, "schema_version", where) != kDataSchemaVersion)
    fail(where, "unsupported schema_version (expected " + std::to_string(kDataSchemaVersion) + ")");
  XiTable xi;
  xi.weyl_type = string_field(doc, "weyl_type", where);
  if (path.stem().string() != xi.weyl_type) fail(where, "weyl_type does not match the file name");
  const Factor f = factor_of_type(xi.weyl_type, where);
  const auto table = factor_character_table(f);
  const json& entries = field(doc, "map", where);
  if (!entries.is_array()) fail(where, "'map' must be an array");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string at = where + "#" + std::to_string(i);
    const IrrLabel from = parse_irr(field(entries[i], "from", at), f.kind, at);
    const IrrLabel to = parse_irr(field(entries[i], "to", at), f.kind, at);
    resolve(*table, from, at);
    resolve(*table, to, at);
    if (!xi.map.emplace(from, to).second) fail(at, "xi defined twice on " + from.to_string());
  }
  if (xi.map.size() != table->size())
    fail(where, "xi-total: defined on " + std::to_string(xi.map.size()) + " of " + std::to_string(table->size()) +
                    " irreducibles");
  for (const auto& e : xi.image())
    if (xi(e) != e) fail(where, "xi-idempotent: " + e.to_string() + " is in the image but maps to " + xi(e).to_string());
  return xi;
}

void add_entry(ValidationReport& report, const std::string& coordinate, const std::string& check, bool passed,
               std::string detail = {}) {
  report.entries.push_back({coordinate, check, passed, std::move(detail)});
}

void validate_datum(ValidationReport& report, const UnipotentDatum& d) {
  const std::string& at = d.source.empty() ? d.factor.name() + " " + d.label : d.source;
  add_entry(report, at, "class-dim-even", d.class_dim % 2 == 0, "class_dim " + std::to_string(d.class_dim));
  const int expected = d.factor.num_reflections() - d.class_dim / 2;
  add_entry(report, at, "dim-bu-formula", d.dim_bu == expected,
            "dim_bu " + std::to_string(d.dim_bu) + ", nu - class_dim/2 = " + std::to_string(expected));

  const auto table = factor_character_table(d.factor);
  bool resolved = !d.top_homology.empty();
  for (const auto& [label, _] : d.top_homology.entries()) resolved = resolved && table->find(label).has_value();
  add_entry(report, at, "labels-resolve", resolved, d.top_homology.canonical());
  if (!resolved) return;

  const auto fd = fake_degree_table(table);
  int min_n = -1;
  std::vector<IrrLabel> minimal;
  for (const auto& [label, _] : d.top_homology.entries()) {
    const int n = fd->n_e(label);
    if (min_n < 0 || n < min_n) {
      min_n = n;
      minimal.clear();
    }
    if (n == min_n) minimal.push_back(label);
  }
  const bool unique = minimal.size() == 1 && d.top_homology.multiplicity(minimal.front()) == 1;
  add_entry(report, at, "minimal-constituent", min_n == d.dim_bu && unique,
            "min n_E " + std::to_string(min_n) + " attained by " + std::to_string(minimal.size()) +
                " constituent(s), dim_bu " + std::to_string(d.dim_bu));
  bool strict = true;
  for (const auto& [label, _] : d.top_homology.entries())
    if (fd->n_e(label) <= d.dim_bu && !(minimal.size() == 1 && label == minimal.front())) strict = false;
  add_entry(report, at, "strictness", strict, "other constituents have n_E > dim_bu");
}

void validate_distinct(ValidationReport& report, const std::vector<UnipotentDatum>& data, const std::string& at) {
  std::set<std::string> names;
  bool ok = true;
  for (const auto& d : data) {
    ok = names.insert(d.label).second && ok;
    for (const auto& a : d.aliases) ok = names.insert(a).second && ok;
  }
  add_entry(report, at, "distinct-labels", ok);
}

void validate_xi(ValidationReport& report, const XiTable& xi) {
  const std::string at = "xi/" + xi.weyl_type + ".json";
  const Factor f = factor_of_type(xi.weyl_type, at);
  const auto table = factor_character_table(f);
  bool total = xi.map.size() == table->size();
  for (const auto& label : table->labels()) total = total && xi.map.count(label);
  add_entry(report, at, "xi-total", total);
  bool idempotent = total;
  if (total)
    for (const auto& e : xi.image()) idempotent = idempotent && xi(e) == e;
  add_entry(report, at, "xi-idempotent", idempotent);
}

void validate_symmetric(ValidationReport& report, int m) {
  std::vector<UnipotentDatum> data;
  for (const auto& lambda : partitions_of(m)) data.push_back(typeA_springer(m, lambda));
  for (const auto& d : data) validate_datum(report, d);
  validate_distinct(report, data, "generated/symmetric-" + std::to_string(m));
}

}  // namespace

bool UnipotentDatum::matches(const std::string& name) const {
  return label == name || std::find(aliases.begin(), aliases.end(), name) != aliases.end();
}

UnipotentDatum typeA_springer(int m, const Partition& lambda) {
  if (m < 1 || lambda.size() != m)
    throw InputError(kModule, "typeA_springer: " + lambda.to_string() + " is not a partition of " + std::to_string(m));
  UnipotentDatum d;
  d.factor = Factor{FactorKind::Symmetric, m};
  d.label = lambda.to_string();
  int sq = 0;
  for (int c : conjugate(lambda).parts) sq += c * c;
  d.class_dim = m * m - sq;
  d.dim_bu = partition_n(lambda);
  d.top_homology.add(IrrLabel(lambda));
  d.provenance = "generated: Springer correspondence for GL_m, lambda -> S^lambda";
  d.source = "generated/symmetric-" + std::to_string(m) + " (" + d.label + ")";
  return d;
}

const IrrLabel& XiTable::operator()(const IrrLabel& e) const {
  auto it = map.find(e);
  if (it == map.end()) throw DataError(kModule, "xi table " + weyl_type + " has no entry for " + e.to_string());
  return it->second;
}

std::set<IrrLabel> XiTable::image() const {
  std::set<IrrLabel> out;
  for (const auto& [_, to] : map) out.insert(to);
  return out;
}

std::vector<IrrLabel> XiTable::preimage(const IrrLabel& e) const {
  std::vector<IrrLabel> out;
  for (const auto& [from, to] : map)
    if (to == e) out.push_back(from);
  return out;
}

bool XiTable::is_identity() const {
  return std::all_of(map.begin(), map.end(), [](const auto& kv) { return kv.first == kv.second; });
}

std::vector<UnipotentDatum> DataPackage::classes(const Factor& f, Regime regime) const {
  if (f.kind == FactorKind::Symmetric) {
    std::vector<UnipotentDatum> out;
    for (const auto& lambda : partitions_of(f.rank)) {
      out.push_back(typeA_springer(f.rank, lambda));
      out.back().regime = regime;
    }
    return out;
  }
  auto it = unipotent_.find({f, regime});
  if (it == unipotent_.end())
    throw DataError(kModule, "no Springer data for " + f.kind_name() + " in regime " + to_string(regime));
  return it->second;
}

UnipotentDatum DataPackage::find(const Factor& f, Regime regime, const std::string& name) const {
  for (auto& d : classes(f, regime))
    if (d.matches(name)) return d;
  throw InputError(kModule, "no unipotent class '" + name + "' for " + f.kind_name() + " in regime " + to_string(regime));
}

bool DataPackage::has(const Factor& f, Regime regime) const {
  return f.kind == FactorKind::Symmetric || unipotent_.count({f, regime}) > 0;
}

const XiTable& DataPackage::xi(const std::string& weyl_type) const {
  auto it = xi_.find(weyl_type);
  if (it == xi_.end()) throw DataError(kModule, "no xi table for " + weyl_type);
  return it->second;
}

bool DataPackage::has_xi(const std::string& weyl_type) const { return xi_.count(weyl_type) > 0; }

std::vector<std::pair<Factor, Regime>> DataPackage::stored_keys() const {
  std::vector<std::pair<Factor, Regime>> keys;
  for (const auto& [k, _] : unipotent_) keys.push_back(k);
  return keys;
}

void DataPackage::set_classes(const Factor& f, Regime regime, std::vector<UnipotentDatum> data) {
  unipotent_[{f, regime}] = std::move(data);
}

void DataPackage::set_xi(XiTable table) {
  auto key = table.weyl_type;
  xi_[key] = std::move(table);
}

std::vector<UnipotentDatum>& DataPackage::stored(const Factor& f, Regime regime) {
  auto it = unipotent_.find({f, regime});
  if (it == unipotent_.end())
    throw DataError(kModule, "no Springer data for " + f.kind_name() + " in regime " + to_string(regime));
  return it->second;
}

DataPackage load_package(const std::string& directory) {
  const fs::path root(directory);
  if (!fs::is_directory(root)) throw DataError(kModule, "data directory '" + directory + "' does not exist");
  DataPackage pkg;
  pkg.source = directory;

  const json manifest = read_json(root / "manifest.json", "manifest.json");
  pkg.schema_version = int_field(manifest, "schema_version", "manifest.json");
  if (pkg.schema_version != kDataSchemaVersion) fail("manifest.json", "unsupported schema_version");
  pkg.package_version = string_field(manifest, "package_version", "manifest.json");

  // Directory iteration order is unspecified; sort before loading.
  auto sorted_entries = [](const fs::path& dir) {
    std::vector<fs::path> out;
    if (fs::is_directory(dir))
      for (const auto& e : fs::directory_iterator(dir)) out.push_back(e.path());
    std::sort(out.begin(), out.end());
    return out;
  };

  for (const auto& dir : sorted_entries(root / "springer")) {
    if (!fs::is_directory(dir)) continue;
    for (const auto& file : sorted_entries(dir)) {
      if (file.extension() != ".json") continue;
      const std::string where = "springer/" + dir.filename().string() + "/" + file.filename().string();
      Factor f;
      Regime r = Regime::p0odd;
      auto data = load_springer_file(file, where, f, r);
      if (dir.filename().string() != f.kind_name()) fail(where, "factor does not match directory " + f.kind_name());
      if (file.stem().string() != to_string(r)) fail(where, "regime does not match the file name");
      pkg.set_classes(f, r, std::move(data));
    }
  }
  for (const auto& file : sorted_entries(root / "xi")) {
    if (file.extension() != ".json") continue;
    pkg.set_xi(load_xi_file(file, "xi/" + file.filename().string()));
  }
  return pkg;
}

std::string default_data_directory() {
  if (const char* env = std::getenv("SUBSTRATA_DATA_DIR"); env && *env) return env;
  return SUBSTRATA_DEFAULT_DATA_DIR;
}

bool ValidationReport::passed() const { return failures() == 0; }

std::size_t ValidationReport::failures() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const auto& e) { return !e.passed; }));
}

ValidationReport validate_against_engine(const DataPackage& package) {
  ValidationReport report;
  for (const auto& [f, r] : package.stored_keys()) {
    const auto data = package.classes(f, r);
    for (const auto& d : data) validate_datum(report, d);
    validate_distinct(report, data, "springer/" + f.kind_name() + "/" + to_string(r) + ".json");
  }
  for (int m = 1; m <= 6; ++m) validate_symmetric(report, m);
  for (const auto& [_, xi] : package.xi_tables()) validate_xi(report, xi);
  return report;
}

ValidationReport validate_against_engine(const DataPackage& package, const GroupSetting& setting) {
  ValidationReport report;
  for (int m = 1; m <= setting.n; ++m) validate_symmetric(report, m);
  if (setting.flavor == Flavor::Sp)
    for (int a = 1; a <= setting.n; ++a)
      for (Regime r : {Regime::p0odd, Regime::p2}) {
        const Factor f{FactorKind::Hyperoctahedral, a};
        const std::string at = "springer/" + f.kind_name() + "/" + to_string(r) + ".json";
        if (!package.has(f, r)) {
          add_entry(report, at, "present", false, "missing");
          continue;
        }
        const auto data = package.classes(f, r);
        for (const auto& d : data) validate_datum(report, d);
        validate_distinct(report, data, at);
      }
  if (package.has_xi(setting.type_name()))
    validate_xi(report, package.xi(setting.type_name()));
  else
    add_entry(report, "xi/" + setting.type_name() + ".json", "present", false, "missing");
  return report;
}

}  // namespace substrata
