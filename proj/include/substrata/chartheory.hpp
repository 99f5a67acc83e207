// Exact character theory for the (signed) permutation groups of rootsys.
//
// Character tables are built by saturation: a pool of easily computed
// characters (linear characters, exterior powers of the natural
// representation, permutation characters of block subgroups) is reduced
// against the irreducibles found so far and closed under tensor products
// until the number of irreducibles equals the number of classes. Rows are
// then named by matching against the Murnaghan-Nakayama rule.

#ifndef SUBSTRATA_CHARTHEORY_HPP
#define SUBSTRATA_CHARTHEORY_HPP

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "substrata/exact.hpp"
#include "substrata/rootsys.hpp"

namespace substrata {

/// Irreducible of W(C_m): alpha carries the trivial sign character, beta the
/// character that is -1 on each sign change.
struct Bipartition {
  Partition alpha;
  Partition beta;

  int size() const { return alpha.size() + beta.size(); }
  /// "(2,1;-)"
  std::string to_string() const;

  auto operator<=>(const Bipartition&) const = default;
  bool operator==(const Bipartition&) const = default;
};

using FactorIrr = std::variant<Partition, Bipartition>;
std::string to_string(const FactorIrr& irr);

/// Canonical name of an irreducible of a product group: one label per factor.
struct IrrLabel {
  std::vector<FactorIrr> parts;

  IrrLabel() = default;
  explicit IrrLabel(std::vector<FactorIrr> p) : parts(std::move(p)) {}
  IrrLabel(Partition p) : parts{std::move(p)} {}       // NOLINT: single-factor convenience
  IrrLabel(Bipartition b) : parts{std::move(b)} {}     // NOLINT

  /// "(2,1;-)" or "(1;1)x(2)" for products.
  std::string to_string() const;
  /// Inverse of to_string.
  static IrrLabel parse(const std::string& text);

  auto operator<=>(const IrrLabel&) const = default;
  bool operator==(const IrrLabel&) const = default;
};

IrrLabel concat(const IrrLabel& a, const IrrLabel& b);

struct ClassFunction {
  std::string group_id;
  std::vector<std::int64_t> values;  // indexed like ProductGroup::classes()

  std::int64_t degree() const { return values.at(0); }
  ClassFunction& operator+=(const ClassFunction& rhs);
  ClassFunction& operator-=(const ClassFunction& rhs);
  ClassFunction operator*(const ClassFunction& rhs) const;  // pointwise (tensor product)
  ClassFunction scaled(std::int64_t k) const;
  bool operator==(const ClassFunction&) const = default;
};

/// Formal nonnegative combination of irreducibles: an object of Rep(W).
class RepMultiset {
 public:
  RepMultiset() = default;
  RepMultiset(std::initializer_list<std::pair<const IrrLabel, int>> init);

  void add(const IrrLabel& label, int mult = 1);
  int multiplicity(const IrrLabel& label) const;
  bool empty() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }
  int total_count() const;
  std::set<IrrLabel> support() const;
  const std::map<IrrLabel, int>& entries() const { return entries_; }

  /// Constituents restricted to those not in `excluded`, multiplicities kept.
  RepMultiset without(const std::set<IrrLabel>& excluded) const;
  /// Labels joined by '+', repeated constituents as "2*label".
  std::string canonical() const;

  auto operator<=>(const RepMultiset&) const = default;
  bool operator==(const RepMultiset&) const = default;

 private:
  std::map<IrrLabel, int> entries_;
};

/// External tensor product: labels are concatenated factor by factor.
RepMultiset outer_product(const std::vector<RepMultiset>& factors);

class CharacterTable {
 public:
  CharacterTable(std::shared_ptr<const ProductGroup> group, std::vector<IrrLabel> labels,
                 std::vector<ClassFunction> rows);

  const ProductGroup& group() const { return *group_; }
  std::shared_ptr<const ProductGroup> group_ptr() const { return group_; }
  std::size_t size() const { return rows_.size(); }
  const std::vector<IrrLabel>& labels() const { return labels_; }
  const std::vector<ClassFunction>& rows() const { return rows_; }
  const ClassFunction& row(std::size_t i) const { return rows_.at(i); }
  const ClassFunction& row(const IrrLabel& label) const { return rows_.at(index_of(label)); }
  std::size_t index_of(const IrrLabel& label) const;
  std::optional<std::size_t> find(const IrrLabel& label) const;
  std::int64_t dim(std::size_t i) const { return rows_.at(i).degree(); }
  std::int64_t dim(const IrrLabel& label) const { return dim(index_of(label)); }
  std::size_t trivial_index() const;
  std::size_t sign_index() const;

 private:
  std::shared_ptr<const ProductGroup> group_;
  std::vector<IrrLabel> labels_;
  std::vector<ClassFunction> rows_;
};

/// Table of a single factor, computed once by saturation and cached.
std::shared_ptr<const CharacterTable> factor_character_table(const Factor& f);
/// Table of a product group: tensor products of the factor tables.
std::shared_ptr<const CharacterTable> character_table(std::shared_ptr<const ProductGroup> group);
std::shared_ptr<const CharacterTable> character_table(const GroupSetting& setting);
std::shared_ptr<const CharacterTable> character_table(const ReflectionSubgroup& sub);

/// Runs the saturation algorithm on one factor (uncached; the cached entry
/// point is factor_character_table).
std::shared_ptr<const CharacterTable> saturate_character_table(const Factor& f);

/// Murnaghan-Nakayama value of the irreducible `irr` of factor `f` at class `c`.
std::int64_t mn_character_value(const FactorIrr& irr, const SignedCycleType& c);
std::vector<FactorIrr> factor_irreducible_labels(const Factor& f);

/// (1/|G|) sum_c |c| f(c) g(c); characters here are rational-valued.
Rational inner_product(const ProductGroup& group, const ClassFunction& f, const ClassFunction& g);

ClassFunction trivial_character(const ProductGroup& group);
ClassFunction regular_character(const ProductGroup& group);
ClassFunction induce(const ReflectionSubgroup& sub, const ClassFunction& f);
ClassFunction restrict_character(const ReflectionSubgroup& sub, const ClassFunction& f);

RepMultiset decompose(const CharacterTable& table, const ClassFunction& f);
ClassFunction character_of(const CharacterTable& table, const RepMultiset& m);
std::int64_t dimension(const CharacterTable& table, const RepMultiset& m);

}  // namespace substrata

#endif  // SUBSTRATA_CHARTHEORY_HPP
