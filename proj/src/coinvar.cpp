#include "substrata/coinvar.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

namespace substrata {

namespace {

const char* kModule = "coinvar";

// (1/|G|) sum_c |c| chi(c) / det(1 - q w_c), with the per-class inverses shared.
class MolienSums {
 public:
  MolienSums(const ProductGroup& group, std::size_t order) : group_(group), order_(order) {
    for (const auto& c : group.classes())
      inverses_.push_back(TruncatedSeries(order, c.representative.char_poly_one_minus_q()).inverse());
  }

  TruncatedSeries operator()(const ClassFunction& chi) const {
    TruncatedSeries acc(order_);
    const auto& cls = group_.classes();
    for (std::size_t i = 0; i < cls.size(); ++i) {
      const std::int64_t w = cls[i].size * chi.values[i];
      if (w != 0) acc += inverses_[i].scaled(Rational(w));
    }
    return acc.scaled(Rational(1, group_.order()));
  }

 private:
  const ProductGroup& group_;
  std::size_t order_;
  std::vector<TruncatedSeries> inverses_;
};

std::string prime_suffix(std::size_t k) { return std::string(k, '\''); }

}  // namespace

std::string FakeDegree::polynomial_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    const auto c = coefficients[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c;
    } else {
      if (c != 1) os << c;
      os << "q";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

FakeDegreeTable::FakeDegreeTable(std::shared_ptr<const CharacterTable> table, std::vector<int> molien_degrees,
                                 std::vector<FakeDegree> entries)
    : table_(std::move(table)), molien_degrees_(std::move(molien_degrees)), entries_(std::move(entries)) {}

std::string FakeDegreeTable::display(const RepMultiset& m) const {
  std::vector<std::pair<int, IrrLabel>> order;
  for (const auto& [label, _] : m.entries()) order.emplace_back(n_e(label), label);
  std::sort(order.begin(), order.end());
  std::string s;
  for (const auto& [_, label] : order) {
    if (!s.empty()) s += "+";
    const int mult = m.multiplicity(label);
    if (mult != 1) s += std::to_string(mult) + "*";
    s += display(label);
  }
  return s.empty() ? "0" : s;
}

std::vector<int> FakeDegreeTable::invariant_degrees() const {
  std::vector<int> d;
  for (int x : molien_degrees_)
    if (x > 1) d.push_back(x);
  return d;
}

int FakeDegreeTable::nu() const {
  int s = 0;
  for (int d : molien_degrees_) s += d - 1;
  return s;
}

std::vector<FakeDegree> FakeDegreeTable::sorted_by_b() const {
  auto v = entries_;
  std::sort(v.begin(), v.end(), [](const FakeDegree& a, const FakeDegree& b) {
    return std::tie(a.n_e, a.label) < std::tie(b.n_e, b.label);
  });
  return v;
}

std::vector<int> molien_degrees(const ProductGroup& group) {
  const int dim = group.dimension();
  const std::size_t order = static_cast<std::size_t>(2 * dim + 2);
  MolienSums sums(group, order);
  TruncatedSeries rest = sums(trivial_character(group));
  std::vector<int> degrees;
  for (std::size_t k = 1; k < order && static_cast<int>(degrees.size()) < dim; ++k) {
    const Rational r = rest[k];
    if (r == 0) continue;
    if (r < 0 || denominator(r) != 1)
      throw ConsistencyError(kModule, "Molien series of " + group.id() + " is not of product form (coefficient " +
                                          r.str() + " at degree " + std::to_string(k) + ")");
    const auto count = static_cast<int>(numerator(r));
    for (int i = 0; i < count; ++i) {
      degrees.push_back(static_cast<int>(k));
      rest.mul_binomial(1, static_cast<int>(k));
    }
  }
  if (static_cast<int>(degrees.size()) != dim || rest != TruncatedSeries::one(order))
    throw ConsistencyError(kModule, "Molien series of " + group.id() + " does not factor into " + std::to_string(dim) +
                                        " degrees");
  Integer prod = 1;
  for (int d : degrees) prod *= d;
  if (prod != group.order())
    throw ConsistencyError(kModule, "product of degrees differs from the order of " + group.id());
  return degrees;
}

std::vector<int> invariant_degrees(const ProductGroup& group) {
  std::vector<int> d;
  for (int x : molien_degrees(group))
    if (x > 1) d.push_back(x);
  return d;
}

void fill_invariant_degrees(GroupSetting& setting) { setting.degrees = invariant_degrees(*setting.weyl_group()); }

std::shared_ptr<const FakeDegreeTable> fake_degree_table(std::shared_ptr<const CharacterTable> table) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const FakeDegreeTable>> cache;
  const auto& group = table->group();
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(group.id()); it != cache.end()) return it->second;
  }

  const auto degrees = molien_degrees(group);
  int nu = 0;
  for (int d : degrees) nu += d - 1;
  // Keep one coefficient past nu so that the polynomial check below has teeth.
  const auto order = static_cast<std::size_t>(nu + 2);
  MolienSums sums(group, order);

  std::vector<FakeDegree> entries;
  for (std::size_t i = 0; i < table->size(); ++i) {
    TruncatedSeries p = sums(table->row(i));
    for (int d : degrees) p.mul_binomial(1, d);
    FakeDegree fd;
    fd.label = table->labels()[i];
    fd.dim = table->dim(i);
    const auto coeffs = p.integer_coefficients();
    if (coeffs.back() != 0)
      throw ConsistencyError(kModule, "fake degree of " + fd.label.to_string() + " exceeds degree " + std::to_string(nu));
    std::int64_t total = 0;
    for (std::size_t k = 0; k + 1 < coeffs.size(); ++k) {
      if (coeffs[k] < 0)
        throw ConsistencyError(kModule, "negative coefficient in fake degree of " + fd.label.to_string());
      fd.coefficients.push_back(static_cast<std::int64_t>(coeffs[k]));
      total += fd.coefficients.back();
    }
    if (total != fd.dim)
      throw ConsistencyError(kModule, "fake degree of " + fd.label.to_string() + " does not sum to its dimension");
    fd.n_e = static_cast<int>(std::find_if(fd.coefficients.begin(), fd.coefficients.end(), [](auto c) { return c != 0; }) -
                              fd.coefficients.begin());
    entries.push_back(std::move(fd));
  }

  // Display names d_b; labels sharing (d, b) get primes in label order.
  std::map<std::pair<std::int64_t, int>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < entries.size(); ++i) groups[{entries[i].dim, entries[i].n_e}].push_back(i);
  for (auto& [key, idx] : groups) {
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return entries[a].label.to_string() < entries[b].label.to_string();
    });
    for (std::size_t k = 0; k < idx.size(); ++k)
      entries[idx[k]].display = std::to_string(key.first) + "_" + std::to_string(key.second) + prime_suffix(k);
  }

  auto result = std::make_shared<const FakeDegreeTable>(table, degrees, std::move(entries));
  std::lock_guard lock(mu);
  return cache.emplace(group.id(), std::move(result)).first->second;
}

std::shared_ptr<const FakeDegreeTable> fake_degree_table(const GroupSetting& setting) {
  return fake_degree_table(character_table(setting));
}

FakeDegree fake_degree(const GroupSetting& setting, const IrrLabel& label) { return fake_degree_table(setting)->of(label); }

std::vector<std::int64_t> coinvariant_poincare_polynomial(const ProductGroup& group) {
  std::vector<std::int64_t> poly{1};
  for (int d : molien_degrees(group)) {
    // multiply by 1 + q + ... + q^{d-1}
    std::vector<std::int64_t> r(poly.size() + d - 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i)
      for (int k = 0; k < d; ++k) r[i + k] += poly[i];
    poly = std::move(r);
  }
  return poly;
}

IrrLabel j_induce(const ReflectionSubgroup& sub, const IrrLabel& sub_irr) {
  const auto sub_table = character_table(sub);
  const auto sub_fd = fake_degree_table(sub_table);
  const auto amb_table = character_table(sub.ambient);
  const auto amb_fd = fake_degree_table(amb_table);

  const int target = sub_fd->n_e(sub_irr);
  const RepMultiset ind = decompose(*amb_table, induce(sub, sub_table->row(sub_irr)));
  std::vector<IrrLabel> hits;
  for (const auto& [label, mult] : ind.entries()) {
    const int n = amb_fd->n_e(label);
    if (n < target)
      throw JInductionDefect(kModule, "Ind(" + sub_irr.to_string() + ") contains " + label.to_string() +
                                          " with n_E below " + std::to_string(target));
    if (n == target) {
      if (mult != 1)
        throw JInductionDefect(kModule, "minimal constituent " + label.to_string() + " of Ind(" + sub_irr.to_string() +
                                            ") has multiplicity " + std::to_string(mult));
      hits.push_back(label);
    }
  }
  if (hits.size() != 1)
    throw JInductionDefect(kModule, "Ind(" + sub_irr.to_string() + ") has " + std::to_string(hits.size()) +
                                        " constituents with n_E = " + std::to_string(target));
  return hits.front();
}

}  // namespace substrata
