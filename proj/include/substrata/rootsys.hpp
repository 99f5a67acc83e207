// Weyl groups of types A and C realized as (signed) permutation groups.
//
// A Weyl group of type A_{n-1} is S_n acting on n coordinates by permutation;
// type C_n is the hyperoctahedral group acting by signed permutations. The
// reflection subgroups attached to centralizers of semisimple elements are
// products of such factors acting on disjoint blocks of coordinates.

#ifndef SUBSTRATA_ROOTSYS_HPP
#define SUBSTRATA_ROOTSYS_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "substrata/error.hpp"

namespace substrata {

enum class Series { A, C };
enum class Flavor { GL, Sp };
enum class Regime { p0odd, p2 };

std::string to_string(Series s);
std::string to_string(Flavor f);
std::string to_string(Regime r);
Regime parse_regime(const std::string& text);

/// A partition stored with parts in weakly decreasing order, no zero parts.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int size() const;
  int length() const { return static_cast<int>(parts.size()); }
  bool empty() const { return parts.empty(); }
  /// Parts joined by commas; "-" for the empty partition.
  std::string to_string() const;
  static Partition parse(const std::string& text);

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;
};

/// All partitions of n, in increasing lexicographic order of their part vectors
/// (so (1^n) comes first and (n) last).
std::vector<Partition> partitions_of(int n);
Partition conjugate(const Partition& p);
/// n(p) = sum_i (i-1) p_i.
int partition_n(const Partition& p);
std::int64_t factorial(int n);

/// Conjugacy class label of a signed permutation: the lengths of its positive
/// and negative cycles. For plain permutations `negative` is empty.
struct SignedCycleType {
  Partition positive;
  Partition negative;

  int size() const { return positive.size() + negative.size(); }
  std::string to_string() const;

  auto operator<=>(const SignedCycleType&) const = default;
  bool operator==(const SignedCycleType&) const = default;
};

/// Signed permutation of {0..n-1}: e_i -> sign(i) * e_{image(i)}.
class WeylElement {
 public:
  WeylElement() = default;
  WeylElement(std::vector<int> image, std::vector<int> signs);

  static WeylElement identity(int n);
  /// Canonical representative: cycles laid out on consecutive coordinates,
  /// positive cycles first, each negative cycle carrying one sign flip.
  static WeylElement from_cycle_type(const SignedCycleType& type);

  int degree() const { return static_cast<int>(image_.size()); }
  int image(int i) const { return image_[i]; }
  int sign(int i) const { return signs_[i]; }
  const std::vector<int>& images() const { return image_; }
  const std::vector<int>& signs() const { return signs_; }

  WeylElement operator*(const WeylElement& rhs) const;
  WeylElement inverse() const;
  bool is_identity() const;
  bool is_unsigned() const;
  SignedCycleType cycle_type() const;
  /// det(1 - q w) as a polynomial in q: product over cycles of (1 -+ q^len).
  std::vector<std::int64_t> char_poly_one_minus_q() const;

  auto operator<=>(const WeylElement&) const = default;
  bool operator==(const WeylElement&) const = default;

 private:
  std::vector<int> image_;
  std::vector<int> signs_;
};

enum class FactorKind { Symmetric, Hyperoctahedral };

/// One irreducible factor of a reflection subgroup: S_m or W(C_m).
struct Factor {
  FactorKind kind = FactorKind::Symmetric;
  int rank = 0;  // number of coordinates it acts on

  std::int64_t order() const;
  /// "S3" / "B2"
  std::string name() const;
  /// Directory-style name used by data packages: "symmetric-3" / "hyperoctahedral-2".
  std::string kind_name() const;
  int num_reflections() const;

  auto operator<=>(const Factor&) const = default;
  bool operator==(const Factor&) const = default;
};

/// Conjugacy classes of a single factor in a fixed canonical order, identity first.
std::vector<SignedCycleType> factor_class_labels(const Factor& f);
std::int64_t factor_class_size(const Factor& f, const SignedCycleType& c);

/// Class label in a product group: one signed cycle type per factor.
using ClassLabel = std::vector<SignedCycleType>;
std::string class_label_string(const ClassLabel& label);

struct ConjugacyClass {
  ClassLabel label;
  WeylElement representative;  // acting on the full coordinate space
  std::int64_t size = 0;
};

/// A direct product of factors acting on disjoint coordinate blocks that cover
/// {0..dimension-1}. The ambient Weyl group is the one-factor case.
class ProductGroup {
 public:
  ProductGroup(std::vector<Factor> factors, std::vector<std::vector<int>> blocks, int dimension);

  static std::shared_ptr<const ProductGroup> single(const Factor& f);

  const std::vector<Factor>& factors() const { return factors_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int dimension() const { return dimension_; }
  std::int64_t order() const { return order_; }
  int num_reflections() const;
  /// Factor names joined by 'x', e.g. "B2xS1".
  const std::string& id() const { return id_; }

  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  std::size_t num_classes() const { return classes_.size(); }
  std::int64_t centralizer_order(std::size_t class_index) const;
  std::size_t class_index(const ClassLabel& label) const;

  /// Places per-factor elements (each on its own factor's coordinates) onto
  /// the group's coordinate blocks.
  WeylElement embed(const std::vector<WeylElement>& parts) const;
  /// Class of an element lying in this group.
  std::size_t class_of(const WeylElement& w) const;

 private:
  std::vector<Factor> factors_;
  std::vector<std::vector<int>> blocks_;
  int dimension_;
  std::int64_t order_ = 1;
  std::string id_;
  std::vector<ConjugacyClass> classes_;
};

/// Group setting: GL_n (type A_{n-1}) or Sp_2n (type C_n).
struct GroupSetting {
  Series series = Series::A;
  int n = 1;  // number of coordinates permuted by W
  Flavor flavor = Flavor::GL;
  int nu = 0;
  int dim_g = 0;
  int rank_torus = 0;
  std::vector<int> degrees;  // invariant degrees of W, filled by coinvar

  /// "A2", "C3": the Lie type with its rank.
  std::string type_name() const;
  /// "GL3", "Sp6".
  std::string group_name() const;
  Factor ambient_factor() const;
  std::int64_t weyl_order() const;
  std::shared_ptr<const ProductGroup> weyl_group() const;
  std::vector<WeylElement> simple_reflections() const;
};

/// `rank` is the Lie rank: (A, r, GL) is GL_{r+1}, (C, r, Sp) is Sp_{2r}.
GroupSetting build_setting(Series series, int rank, Flavor flavor);
/// Parses "C3" / "A4" together with a flavor.
GroupSetting build_setting(const std::string& type, Flavor flavor);
Flavor parse_flavor(const std::string& text);

std::vector<ConjugacyClass> conjugacy_classes(const GroupSetting& setting);

/// Isomorphism type of the centralizer of a semisimple element: symplectic
/// blocks (eigenvalues +1 / -1) and general linear blocks.
struct CentralizerShape {
  std::vector<int> sp_blocks;  // decreasing, at most two
  std::vector<int> gl_blocks;  // decreasing

  int size() const;
  /// "Sp4xGL1", "GL2xGL1"; the full symplectic group is "Sp6".
  std::string name() const;
  std::vector<Factor> factors() const;
  /// Consecutive coordinate blocks, symplectic blocks first.
  std::vector<std::vector<int>> coordinate_blocks() const;

  auto operator<=>(const CentralizerShape&) const = default;
  bool operator==(const CentralizerShape&) const = default;
};

std::vector<CentralizerShape> enumerate_centralizer_shapes(const GroupSetting& setting, Regime regime);

/// Weyl group W' of a centralizer, embedded in W by coordinate blocks.
struct ReflectionSubgroup {
  CentralizerShape shape;
  std::shared_ptr<const ProductGroup> group;
  std::shared_ptr<const ProductGroup> ambient;
  std::vector<std::size_t> fusion;  // subgroup class index -> ambient class index

  std::int64_t index() const { return ambient->order() / group->order(); }
};

ReflectionSubgroup realize_subgroup(const GroupSetting& setting, const CentralizerShape& shape);
/// Same construction inside an arbitrary single-factor ambient group.
ReflectionSubgroup realize_subgroup(std::shared_ptr<const ProductGroup> ambient, const CentralizerShape& shape);

}  // namespace substrata

#endif  // SUBSTRATA_ROOTSYS_HPP
