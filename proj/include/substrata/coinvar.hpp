// Graded multiplicities in the coinvariant algebra (= H_*(B)) via Molien series.
//
// For an irreducible E of a group G acting on its coordinate space,
//   P_E(q) = prod_j (1 - q^{d_j}) * (1/|G|) sum_w chi_E(w) / det(1 - q w)
// where d_j are the degrees read off the invariant Molien series. The
// coefficient of q^i is the multiplicity of E in degree i, and n_E is the
// lowest degree in which E occurs.

#ifndef SUBSTRATA_COINVAR_HPP
#define SUBSTRATA_COINVAR_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "substrata/chartheory.hpp"
#include "substrata/series.hpp"

namespace substrata {

struct FakeDegree {
  IrrLabel label;
  std::int64_t dim = 0;
  std::vector<std::int64_t> coefficients;  // index i: multiplicity in degree i
  int n_e = 0;
  std::string display;  // "d_b", with primes when (d, b) is shared

  std::string polynomial_string() const;
};

class FakeDegreeTable {
 public:
  FakeDegreeTable(std::shared_ptr<const CharacterTable> table, std::vector<int> molien_degrees,
                  std::vector<FakeDegree> entries);

  const CharacterTable& table() const { return *table_; }
  std::shared_ptr<const CharacterTable> table_ptr() const { return table_; }
  /// Aligned with table().rows().
  const std::vector<FakeDegree>& entries() const { return entries_; }
  const FakeDegree& of(const IrrLabel& label) const { return entries_.at(table_->index_of(label)); }
  int n_e(const IrrLabel& label) const { return of(label).n_e; }
  const std::string& display(const IrrLabel& label) const { return of(label).display; }
  /// "3_2+1_3": constituents ordered by n_E, then label.
  std::string display(const RepMultiset& m) const;
  /// Degrees of the Molien factorization, including degree-1 factors.
  const std::vector<int>& molien_degrees() const { return molien_degrees_; }
  std::vector<int> invariant_degrees() const;
  /// Number of reflections: sum of (d_j - 1).
  int nu() const;
  /// Entries sorted by (n_E, label), the usual presentation order.
  std::vector<FakeDegree> sorted_by_b() const;

 private:
  std::shared_ptr<const CharacterTable> table_;
  std::vector<int> molien_degrees_;
  std::vector<FakeDegree> entries_;
};

/// Degrees d_j with prod 1/(1 - q^{d_j}) equal to the invariant Molien series,
/// extracted greedily. Degree-1 factors (fixed coordinates) are included.
std::vector<int> molien_degrees(const ProductGroup& group);
/// molien_degrees without the degree-1 factors.
std::vector<int> invariant_degrees(const ProductGroup& group);
void fill_invariant_degrees(GroupSetting& setting);

std::shared_ptr<const FakeDegreeTable> fake_degree_table(std::shared_ptr<const CharacterTable> table);
std::shared_ptr<const FakeDegreeTable> fake_degree_table(const GroupSetting& setting);
FakeDegree fake_degree(const GroupSetting& setting, const IrrLabel& label);

/// Poincare polynomial of the coinvariant algebra: prod_j (1 - q^{d_j}) / (1 - q).
std::vector<std::int64_t> coinvariant_poincare_polynomial(const ProductGroup& group);

/// Truncated induction failed to single out one constituent.
class JInductionDefect : public ConsistencyError {
 public:
  using ConsistencyError::ConsistencyError;
};

/// The unique constituent E of Ind_{W'}^W(E') with n_E = n_{E'}.
IrrLabel j_induce(const ReflectionSubgroup& sub, const IrrLabel& sub_irr);

}  // namespace substrata

#endif  // SUBSTRATA_COINVAR_HPP
