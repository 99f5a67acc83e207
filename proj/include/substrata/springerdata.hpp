// Springer data per factor and characteristic regime, and xi tables per Weyl type.
//
// Symmetric factors are generated (the Springer correspondence for GL_m is
// lambda -> S^lambda). Hyperoctahedral factors and xi tables are read from a
// data directory:
//
//   data/manifest.json
//   data/springer/hyperoctahedral-<a>/<regime>.json
//   data/xi/<type>.json
//
// See data/README.md for the schema.

#ifndef SUBSTRATA_SPRINGERDATA_HPP
#define SUBSTRATA_SPRINGERDATA_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "substrata/chartheory.hpp"

namespace substrata {

inline constexpr int kDataSchemaVersion = 1;

/// A unipotent class of one centralizer factor together with its Springer data.
struct UnipotentDatum {
  Factor factor;
  Regime regime = Regime::p0odd;
  std::string label;  // Jordan partition, e.g. "2,2,1,1"; "~" marks a second class with that partition
  std::vector<std::string> aliases;
  int class_dim = 0;
  int dim_bu = 0;
  RepMultiset top_homology;  // over Irr of the factor
  std::string provenance;
  std::string source;  // file and entry index, for error messages

  bool matches(const std::string& name) const;
};

/// The datum for the unipotent class lambda of GL_m.
UnipotentDatum typeA_springer(int m, const Partition& lambda);

struct XiTable {
  std::string weyl_type;  // "C3", "A4"
  std::map<IrrLabel, IrrLabel> map;

  const IrrLabel& operator()(const IrrLabel& e) const;
  std::set<IrrLabel> image() const;
  /// xi^{-1}(e), in label order.
  std::vector<IrrLabel> preimage(const IrrLabel& e) const;
  bool is_identity() const;
};

class DataPackage {
 public:
  int schema_version = kDataSchemaVersion;
  std::string package_version;
  std::string source;  // directory it was loaded from

  /// Unipotent data of a factor. Symmetric factors are generated and do not
  /// depend on the regime; hyperoctahedral factors throw DataError when absent.
  std::vector<UnipotentDatum> classes(const Factor& f, Regime regime) const;
  /// Looks a class up by label or alias.
  UnipotentDatum find(const Factor& f, Regime regime, const std::string& name) const;
  bool has(const Factor& f, Regime regime) const;
  const XiTable& xi(const std::string& weyl_type) const;
  bool has_xi(const std::string& weyl_type) const;

  /// (factor, regime) pairs with stored data, in canonical order.
  std::vector<std::pair<Factor, Regime>> stored_keys() const;
  const std::map<std::string, XiTable>& xi_tables() const { return xi_; }

  void set_classes(const Factor& f, Regime regime, std::vector<UnipotentDatum> data);
  void set_xi(XiTable table);
  /// Mutable access for tests that perturb a loaded package.
  std::vector<UnipotentDatum>& stored(const Factor& f, Regime regime);

 private:
  std::map<std::pair<Factor, Regime>, std::vector<UnipotentDatum>> unipotent_;
  std::map<std::string, XiTable> xi_;
};

/// Reads and checks a data directory. Throws DataError naming the file, entry
/// and failed check on schema violations, unresolved labels and arithmetic
/// invariant failures (class_dim parity, dim_bu formula, duplicate labels).
DataPackage load_package(const std::string& directory);

/// Directory from SUBSTRATA_DATA_DIR, falling back to the compiled-in default.
std::string default_data_directory();

struct ValidationEntry {
  std::string coordinate;  // "springer/hyperoctahedral-2/p0odd.json#1 (2,2)"
  std::string check;       // "minimal-constituent", "dim-bu-formula", ...
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationEntry> entries;

  bool passed() const;
  std::size_t failures() const;
};

/// Replays every per-datum invariant against independently computed fake
/// degrees. Without a setting, covers all stored data, symmetric factors of
/// rank <= 6 and all xi tables; with one, only the factors that can occur in
/// it and its xi table.
ValidationReport validate_against_engine(const DataPackage& package);
ValidationReport validate_against_engine(const DataPackage& package, const GroupSetting& setting);

}  // namespace substrata

#endif  // SUBSTRATA_SPRINGERDATA_HPP
