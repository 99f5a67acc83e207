// Class data, total Springer modules, and the descending induction that cuts
// G into substrata.
//
// A class datum is a centralizer shape (the Weyl group W' of Z(s)), a
// unipotent class in each factor, and an optional central twist. Its total
// Springer module is modeled as V = Ind_{W'}^W(V_u), where V_u is the outer
// tensor product of the factors' top Springer modules. V'' is the unique
// constituent E of V with n_E = b. V' is obtained by processing b-levels from
// the top down and keeping the constituents of V that were not used by any V'
// at a strictly higher level.

#ifndef SUBSTRATA_STRATA_HPP
#define SUBSTRATA_STRATA_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "substrata/coinvar.hpp"
#include "substrata/springerdata.hpp"

namespace substrata {

struct ClassDatum {
  CentralizerShape shape;
  std::vector<std::string> unipotent;  // one label per factor of shape.factors()
  int central_twist = 1;               // -1: the datum multiplied by the central element -1

  ReflectionSubgroup subgroup;
  std::vector<UnipotentDatum> factor_data;
  RepMultiset v_u;  // over Irr(W')
  int b = 0;
  int d = 0;

  /// "Sp4xGL1 u=2,1,1|1", with " z=-1" appended for the twisted copy.
  std::string id() const;
};

/// Builds one datum and fills its derived fields. Unipotent labels may be aliases.
ClassDatum make_class_datum(const GroupSetting& setting, Regime regime, const DataPackage& package,
                            const CentralizerShape& shape, const std::vector<std::string>& unipotent,
                            int central_twist = 1);

/// One datum per (shape, unipotent class per factor, central twist).
std::vector<ClassDatum> enumerate_class_data(const GroupSetting& setting, Regime regime, const DataPackage& package);

/// V_g = Ind_{W'}^W(V_u), decomposed over Irr(W).
RepMultiset total_springer_module(const ClassDatum& datum);

/// Raised when V_g has no well-defined V''.
class VDoublePrimeError : public ConsistencyError {
 public:
  using ConsistencyError::ConsistencyError;
};
class NoMinimalConstituent : public VDoublePrimeError {
 public:
  using VDoublePrimeError::VDoublePrimeError;
};
class MultipleMinimal : public VDoublePrimeError {
 public:
  using VDoublePrimeError::VDoublePrimeError;
};
class MultiplicityNotOne : public VDoublePrimeError {
 public:
  using VDoublePrimeError::VDoublePrimeError;
};
class StrictnessViolation : public VDoublePrimeError {
 public:
  using VDoublePrimeError::VDoublePrimeError;
};

/// The unique constituent with n_E = b; every other constituent must have n_E > b.
IrrLabel v_double_prime(const FakeDegreeTable& fd, const RepMultiset& v, int b);

struct DatumRecord {
  ClassDatum datum;
  RepMultiset v;        // V_g
  IrrLabel v2;          // V''_g
  RepMultiset v1;       // V'_g
  std::string stratum;     // canonical id of V''
  std::string substratum;  // canonical id of V'
};

struct Stratum {
  IrrLabel label;  // E_Sigma
  int b = 0;
  int d = 0;
  std::vector<std::string> members;  // datum ids
};

struct Substratum {
  RepMultiset value;  // V'
  IrrLabel v2;
  int b = 0;
  int d = 0;
  std::vector<std::string> members;
};

struct StratificationResult {
  GroupSetting setting;
  Regime regime = Regime::p0odd;
  std::string package_version;
  std::shared_ptr<const FakeDegreeTable> fake_degrees;

  std::vector<DatumRecord> records;  // sorted by (b, datum id)
  std::set<RepMultiset> rep_star;
  std::map<std::string, Stratum> strata;
  std::map<std::string, Substratum> substrata;
  std::map<std::string, std::set<RepMultiset>> rep_sigma;  // stratum id -> V' values
  std::set<int> d_spectrum;

  const DatumRecord& record(const std::string& datum_id) const;
  std::string display(const IrrLabel& e) const { return fake_degrees->display(e); }
  std::string display(const RepMultiset& m) const { return fake_degrees->display(m); }
};

/// Runs the descending induction over the given data (all data of one setting
/// and regime). The result does not depend on the order of `data`.
StratificationResult compute_substrata(const GroupSetting& setting, Regime regime, std::vector<ClassDatum> data,
                                       const std::string& package_version = {});
/// enumerate_class_data followed by compute_substrata.
StratificationResult stratify(const GroupSetting& setting, Regime regime, const DataPackage& package);

struct CheckItem {
  std::string clause;   // "v2-in-v1", "xi-unitriangular", ...
  std::string subject;  // datum, stratum or value the clause was checked on
  bool passed = false;
  std::string detail;
};

struct CheckReport {
  std::string name;
  std::vector<CheckItem> items;

  bool passed() const;
  std::size_t failures() const;
  void add(std::string clause, std::string subject, bool passed, std::string detail = {});
};

/// Per datum: V'' is strictly minimal in V and in V', and equals the
/// j-induction of the minimal constituent of V_u. Per value: V' determines V''
/// and substrata refine strata. Rep_Sigma partitions Rep_*.
CheckReport check_properties(const StratificationResult& result);

/// Multiplicity matrix of one stratum: rows are the members of Rep_Sigma,
/// columns xi^{-1}(E_Sigma) ordered by (n_E, label). Rows are ordered by their
/// last nonzero column.
struct StratumMatrix {
  std::string stratum;
  std::vector<RepMultiset> rows;
  std::vector<IrrLabel> columns;
  std::vector<std::vector<int>> entries;
  bool unitriangular() const;
};

StratumMatrix stratum_matrix(const StratificationResult& result, const std::string& stratum, const XiTable& xi);
CheckReport check_conjecture_4b(const StratificationResult& result, const XiTable& xi);
/// Rep_* and the Rep_Sigma partition agree between two regimes of one setting.
CheckReport check_conjecture_4c(const StratificationResult& a, const StratificationResult& b);

}  // namespace substrata

#endif  // SUBSTRATA_STRATA_HPP
