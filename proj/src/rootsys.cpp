#include "substrata/rootsys.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace substrata {

namespace {

const char* kModule = "rootsys";

void partitions_rec(int remaining, int max_part, std::vector<int>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_rec(remaining - part, part, current, out);
    current.pop_back();
  }
}

std::int64_t int_pow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

// Size of the centralizer of an element with cycle type `c` in S_m / W(C_m).
std::int64_t centralizer_size(const Factor& f, const SignedCycleType& c) {
  std::map<int, int> pos, neg;
  for (int l : c.positive.parts) ++pos[l];
  for (int l : c.negative.parts) ++neg[l];
  std::int64_t z = 1;
  const std::int64_t scale = f.kind == FactorKind::Hyperoctahedral ? 2 : 1;
  for (auto [len, mult] : pos) z *= int_pow(scale * len, mult) * factorial(mult);
  for (auto [len, mult] : neg) z *= int_pow(scale * len, mult) * factorial(mult);
  return z;
}

std::vector<std::int64_t> poly_mul(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

}  // namespace

std::string to_string(Series s) { return s == Series::A ? "A" : "C"; }
std::string to_string(Flavor f) { return f == Flavor::GL ? "GL" : "Sp"; }
std::string to_string(Regime r) { return r == Regime::p0odd ? "p0odd" : "p2"; }

Regime parse_regime(const std::string& text) {
  if (text == "p0odd") return Regime::p0odd;
  if (text == "p2") return Regime::p2;
  throw InputError(kModule, "unknown regime '" + text + "' (expected p0odd or p2)");
}

Flavor parse_flavor(const std::string& text) {
  if (text == "GL") return Flavor::GL;
  if (text == "Sp") return Flavor::Sp;
  throw InputError(kModule, "unknown flavor '" + text + "' (expected GL or Sp)");
}

// ---------------------------------------------------------------------------
// Partitions

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  if (!parts.empty() && parts.back() < 0) throw InputError(kModule, "negative part in partition");
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::to_string() const {
  if (parts.empty()) return "-";
  std::ostringstream os;
  for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
  return os.str();
}

Partition Partition::parse(const std::string& text) {
  if (text == "-" || text.empty()) return {};
  std::vector<int> parts;
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size() || v <= 0) throw std::invalid_argument(tok);
      parts.push_back(v);
    } catch (const std::exception&) {
      throw InputError(kModule, "bad partition '" + text + "'");
    }
  }
  if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>()))
    throw InputError(kModule, "partition '" + text + "' is not weakly decreasing");
  return Partition(parts);
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

Partition conjugate(const Partition& p) {
  std::vector<int> c;
  for (int i = 1; !p.empty() && i <= p.parts.front(); ++i)
    c.push_back(static_cast<int>(std::count_if(p.parts.begin(), p.parts.end(), [i](int x) { return x >= i; })));
  return Partition(c);
}

int partition_n(const Partition& p) {
  int s = 0;
  for (int i = 0; i < p.length(); ++i) s += i * p.parts[i];
  return s;
}

std::int64_t factorial(int n) {
  std::int64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

std::string SignedCycleType::to_string() const {
  if (negative.empty()) return "[" + positive.to_string() + "]";
  return "[" + positive.to_string() + ";" + negative.to_string() + "]";
}

// ---------------------------------------------------------------------------
// Signed permutations

WeylElement::WeylElement(std::vector<int> image, std::vector<int> signs)
    : image_(std::move(image)), signs_(std::move(signs)) {
  if (image_.size() != signs_.size()) throw InputError(kModule, "image/sign length mismatch");
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t i = 0; i < image_.size(); ++i) {
    int j = image_[i];
    if (j < 0 || j >= static_cast<int>(image_.size()) || seen[j]) throw InputError(kModule, "not a permutation");
    seen[j] = true;
    if (signs_[i] != 1 && signs_[i] != -1) throw InputError(kModule, "signs must be +1 or -1");
  }
}

WeylElement WeylElement::identity(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  return WeylElement(std::move(im), std::vector<int>(n, 1));
}

WeylElement WeylElement::from_cycle_type(const SignedCycleType& type) {
  const int n = type.size();
  std::vector<int> im(n), sg(n, 1);
  int start = 0;
  auto lay = [&](int len, bool negative) {
    for (int k = 0; k < len; ++k) im[start + k] = start + (k + 1) % len;
    if (negative) sg[start + len - 1] = -1;
    start += len;
  };
  for (int l : type.positive.parts) lay(l, false);
  for (int l : type.negative.parts) lay(l, true);
  return WeylElement(std::move(im), std::move(sg));
}

WeylElement WeylElement::operator*(const WeylElement& rhs) const {
  if (degree() != rhs.degree()) throw InputError(kModule, "degree mismatch in product");
  const int n = degree();
  std::vector<int> im(n), sg(n);
  for (int i = 0; i < n; ++i) {
    const int mid = rhs.image_[i];
    im[i] = image_[mid];
    sg[i] = rhs.signs_[i] * signs_[mid];
  }
  return WeylElement(std::move(im), std::move(sg));
}

WeylElement WeylElement::inverse() const {
  const int n = degree();
  std::vector<int> im(n), sg(n);
  for (int i = 0; i < n; ++i) {
    im[image_[i]] = i;
    sg[image_[i]] = signs_[i];
  }
  return WeylElement(std::move(im), std::move(sg));
}

bool WeylElement::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (image_[i] != i || signs_[i] != 1) return false;
  return true;
}

bool WeylElement::is_unsigned() const {
  return std::all_of(signs_.begin(), signs_.end(), [](int s) { return s == 1; });
}

SignedCycleType WeylElement::cycle_type() const {
  const int n = degree();
  std::vector<bool> seen(n, false);
  std::vector<int> pos, neg;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0, sign = 1;
    for (int j = i; !seen[j]; j = image_[j]) {
      seen[j] = true;
      sign *= signs_[j];
      ++len;
    }
    (sign > 0 ? pos : neg).push_back(len);
  }
  return {Partition(pos), Partition(neg)};
}

std::vector<std::int64_t> WeylElement::char_poly_one_minus_q() const {
  const SignedCycleType t = cycle_type();
  std::vector<std::int64_t> poly{1};
  auto mul_cycle = [&](int len, std::int64_t c) {
    std::vector<std::int64_t> f(len + 1, 0);
    f[0] = 1;
    f[len] = -c;
    poly = poly_mul(poly, f);
  };
  for (int l : t.positive.parts) mul_cycle(l, 1);
  for (int l : t.negative.parts) mul_cycle(l, -1);
  return poly;
}

// ---------------------------------------------------------------------------
// Factors

std::int64_t Factor::order() const {
  return kind == FactorKind::Symmetric ? factorial(rank) : int_pow(2, rank) * factorial(rank);
}

std::string Factor::name() const { return (kind == FactorKind::Symmetric ? "S" : "B") + std::to_string(rank); }

std::string Factor::kind_name() const {
  return (kind == FactorKind::Symmetric ? "symmetric-" : "hyperoctahedral-") + std::to_string(rank);
}

int Factor::num_reflections() const { return kind == FactorKind::Symmetric ? rank * (rank - 1) / 2 : rank * rank; }

std::vector<SignedCycleType> factor_class_labels(const Factor& f) {
  std::vector<SignedCycleType> out;
  if (f.kind == FactorKind::Symmetric) {
    for (auto& p : partitions_of(f.rank)) out.push_back({p, {}});
    return out;
  }
  for (int neg = 0; neg <= f.rank; ++neg)
    for (auto& p : partitions_of(f.rank - neg))
      for (auto& q : partitions_of(neg)) out.push_back({p, q});
  return out;
}

std::int64_t factor_class_size(const Factor& f, const SignedCycleType& c) {
  if (c.size() != f.rank || (f.kind == FactorKind::Symmetric && !c.negative.empty()))
    throw InputError(kModule, "class " + c.to_string() + " does not belong to " + f.name());
  return f.order() / centralizer_size(f, c);
}

std::string class_label_string(const ClassLabel& label) {
  std::string s;
  for (std::size_t i = 0; i < label.size(); ++i) s += (i ? "x" : "") + label[i].to_string();
  return s;
}

// ---------------------------------------------------------------------------
// Product groups

ProductGroup::ProductGroup(std::vector<Factor> factors, std::vector<std::vector<int>> blocks, int dimension)
    : factors_(std::move(factors)), blocks_(std::move(blocks)), dimension_(dimension) {
  if (factors_.size() != blocks_.size()) throw InputError(kModule, "factor/block count mismatch");
  std::vector<bool> used(dimension_, false);
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (static_cast<int>(blocks_[i].size()) != factors_[i].rank)
      throw InputError(kModule, "block size does not match factor rank");
    for (int c : blocks_[i]) {
      if (c < 0 || c >= dimension_ || used[c]) throw InputError(kModule, "blocks overlap or leave range");
      used[c] = true;
    }
    order_ *= factors_[i].order();
    id_ += (i ? "x" : "") + factors_[i].name();
  }
  if (std::find(used.begin(), used.end(), false) != used.end())
    throw InputError(kModule, "blocks do not cover all coordinates");

  // Cartesian product of factor classes, first factor slowest.
  std::vector<std::vector<SignedCycleType>> per_factor;
  for (auto& f : factors_) per_factor.push_back(factor_class_labels(f));
  std::size_t total = 1;
  for (auto& v : per_factor) total *= v.size();
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::vector<std::size_t> idx(factors_.size());
    std::size_t rest = flat;
    for (std::size_t k = factors_.size(); k-- > 0;) {
      idx[k] = rest % per_factor[k].size();
      rest /= per_factor[k].size();
    }
    ConjugacyClass cls;
    std::vector<WeylElement> parts;
    cls.size = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      const auto& c = per_factor[i][idx[i]];
      cls.label.push_back(c);
      cls.size *= factor_class_size(factors_[i], c);
      parts.push_back(WeylElement::from_cycle_type(c));
    }
    cls.representative = embed(parts);
    classes_.push_back(std::move(cls));
  }
}

std::shared_ptr<const ProductGroup> ProductGroup::single(const Factor& f) {
  std::vector<int> block(f.rank);
  std::iota(block.begin(), block.end(), 0);
  return std::make_shared<const ProductGroup>(std::vector<Factor>{f}, std::vector<std::vector<int>>{block}, f.rank);
}

int ProductGroup::num_reflections() const {
  int r = 0;
  for (auto& f : factors_) r += f.num_reflections();
  return r;
}

std::int64_t ProductGroup::centralizer_order(std::size_t class_index) const {
  return order_ / classes_.at(class_index).size;
}

std::size_t ProductGroup::class_index(const ClassLabel& label) const {
  for (std::size_t i = 0; i < classes_.size(); ++i)
    if (classes_[i].label == label) return i;
  throw InputError(kModule, "no class " + class_label_string(label) + " in " + id_);
}

WeylElement ProductGroup::embed(const std::vector<WeylElement>& parts) const {
  if (parts.size() != factors_.size()) throw InputError(kModule, "wrong number of factor elements");
  std::vector<int> im(dimension_), sg(dimension_, 1);
  for (std::size_t f = 0; f < parts.size(); ++f) {
    const auto& blk = blocks_[f];
    const auto& w = parts[f];
    if (w.degree() != static_cast<int>(blk.size())) throw InputError(kModule, "factor element has wrong degree");
    if (factors_[f].kind == FactorKind::Symmetric && !w.is_unsigned())
      throw InputError(kModule, "signed element in a symmetric factor");
    for (int i = 0; i < w.degree(); ++i) {
      im[blk[i]] = blk[w.image(i)];
      sg[blk[i]] = w.sign(i);
    }
  }
  return WeylElement(std::move(im), std::move(sg));
}

std::size_t ProductGroup::class_of(const WeylElement& w) const {
  if (w.degree() != dimension_) throw InputError(kModule, "element has wrong degree");
  ClassLabel label;
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    const auto& blk = blocks_[f];
    std::vector<int> local(dimension_, -1);
    for (std::size_t i = 0; i < blk.size(); ++i) local[blk[i]] = static_cast<int>(i);
    std::vector<int> im(blk.size()), sg(blk.size());
    for (std::size_t i = 0; i < blk.size(); ++i) {
      const int target = local[w.image(blk[i])];
      if (target < 0) throw InputError(kModule, "element does not preserve the block structure");
      im[i] = target;
      sg[i] = w.sign(blk[i]);
    }
    WeylElement part(std::move(im), std::move(sg));
    if (factors_[f].kind == FactorKind::Symmetric && !part.is_unsigned())
      throw InputError(kModule, "element is not in the subgroup");
    label.push_back(part.cycle_type());
  }
  return class_index(label);
}

// ---------------------------------------------------------------------------
// Settings

std::string GroupSetting::type_name() const {
  return to_string(series) + std::to_string(series == Series::A ? n - 1 : n);
}

std::string GroupSetting::group_name() const {
  return flavor == Flavor::GL ? "GL" + std::to_string(n) : "Sp" + std::to_string(2 * n);
}

Factor GroupSetting::ambient_factor() const {
  return {series == Series::A ? FactorKind::Symmetric : FactorKind::Hyperoctahedral, n};
}

std::int64_t GroupSetting::weyl_order() const { return ambient_factor().order(); }

std::shared_ptr<const ProductGroup> GroupSetting::weyl_group() const {
  static std::mutex mu;
  static std::map<Factor, std::shared_ptr<const ProductGroup>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[ambient_factor()];
  if (!slot) slot = ProductGroup::single(ambient_factor());
  return slot;
}

std::vector<WeylElement> GroupSetting::simple_reflections() const {
  std::vector<WeylElement> gens;
  for (int i = 0; i + 1 < n; ++i) {
    auto w = WeylElement::identity(n);
    std::vector<int> im = w.images();
    std::swap(im[i], im[i + 1]);
    gens.emplace_back(im, w.signs());
  }
  if (series == Series::C) {
    auto w = WeylElement::identity(n);
    std::vector<int> sg = w.signs();
    sg[n - 1] = -1;
    gens.emplace_back(w.images(), sg);
  }
  return gens;
}

GroupSetting build_setting(Series series, int rank, Flavor flavor) {
  if (rank < 1) throw InputError(kModule, "rank must be at least 1");
  if ((flavor == Flavor::GL) != (series == Series::A))
    throw InputError(kModule, "flavor " + to_string(flavor) + " is incompatible with series " + to_string(series));
  GroupSetting s;
  s.series = series;
  s.flavor = flavor;
  if (series == Series::A) {
    s.n = rank + 1;
    s.nu = s.n * (s.n - 1) / 2;
    s.dim_g = s.n * s.n;
  } else {
    s.n = rank;
    s.nu = s.n * s.n;
    s.dim_g = 2 * s.n * s.n + s.n;
  }
  s.rank_torus = s.n;
  return s;
}

GroupSetting build_setting(const std::string& type, Flavor flavor) {
  if (type.size() < 2 || (type[0] != 'A' && type[0] != 'C'))
    throw InputError(kModule, "bad type '" + type + "' (expected e.g. A3 or C2)");
  int rank = 0;
  try {
    std::size_t used = 0;
    rank = std::stoi(type.substr(1), &used);
    if (used != type.size() - 1) throw std::invalid_argument(type);
  } catch (const std::exception&) {
    throw InputError(kModule, "bad type '" + type + "'");
  }
  return build_setting(type[0] == 'A' ? Series::A : Series::C, rank, flavor);
}

std::vector<ConjugacyClass> conjugacy_classes(const GroupSetting& setting) { return setting.weyl_group()->classes(); }

// ---------------------------------------------------------------------------
// Centralizer shapes

int CentralizerShape::size() const {
  return std::accumulate(sp_blocks.begin(), sp_blocks.end(), 0) + std::accumulate(gl_blocks.begin(), gl_blocks.end(), 0);
}

std::string CentralizerShape::name() const {
  std::string s;
  for (int a : sp_blocks) s += (s.empty() ? "" : "x") + ("Sp" + std::to_string(2 * a));
  for (int m : gl_blocks) s += (s.empty() ? "" : "x") + ("GL" + std::to_string(m));
  return s;
}

std::vector<Factor> CentralizerShape::factors() const {
  std::vector<Factor> f;
  for (int a : sp_blocks) f.push_back({FactorKind::Hyperoctahedral, a});
  for (int m : gl_blocks) f.push_back({FactorKind::Symmetric, m});
  return f;
}

std::vector<std::vector<int>> CentralizerShape::coordinate_blocks() const {
  std::vector<std::vector<int>> blocks;
  int next = 0;
  for (const auto& f : factors()) {
    std::vector<int> b(f.rank);
    std::iota(b.begin(), b.end(), next);
    next += f.rank;
    blocks.push_back(std::move(b));
  }
  return blocks;
}

std::vector<CentralizerShape> enumerate_centralizer_shapes(const GroupSetting& setting, Regime regime) {
  std::vector<CentralizerShape> out;
  const int n = setting.n;
  if (setting.flavor == Flavor::GL) {
    auto parts = partitions_of(n);
    std::reverse(parts.begin(), parts.end());
    for (auto& p : parts) out.push_back({{}, p.parts});
    return out;
  }
  const int max_sp_blocks = regime == Regime::p2 ? 1 : 2;
  // Symplectic part (a >= b >= 0), then a partition of what remains.
  for (int a = n; a >= 0; --a) {
    for (int b = std::min(a, n - a); b >= 0; --b) {
      if (a == 0 && b > 0) continue;
      if (b > 0 && max_sp_blocks < 2) continue;
      std::vector<int> sp;
      if (a > 0) sp.push_back(a);
      if (b > 0) sp.push_back(b);
      auto rest = partitions_of(n - a - b);
      std::reverse(rest.begin(), rest.end());
      for (auto& p : rest) out.push_back({sp, p.parts});
    }
  }
  return out;
}

ReflectionSubgroup realize_subgroup(std::shared_ptr<const ProductGroup> ambient, const CentralizerShape& shape) {
  if (ambient->factors().size() != 1) throw InputError(kModule, "ambient group must have a single factor");
  if (shape.size() != ambient->dimension())
    throw InputError(kModule, "shape " + shape.name() + " does not fit " + ambient->id());
  if (ambient->factors()[0].kind == FactorKind::Symmetric && !shape.sp_blocks.empty())
    throw InputError(kModule, "symplectic block inside a symmetric group");
  if (shape.sp_blocks.size() > 2) throw InputError(kModule, "at most two symplectic blocks");
  ReflectionSubgroup sub;
  sub.shape = shape;
  sub.ambient = std::move(ambient);
  sub.group = std::make_shared<const ProductGroup>(shape.factors(), shape.coordinate_blocks(), sub.ambient->dimension());
  for (const auto& cls : sub.group->classes()) sub.fusion.push_back(sub.ambient->class_of(cls.representative));
  return sub;
}

ReflectionSubgroup realize_subgroup(const GroupSetting& setting, const CentralizerShape& shape) {
  if (setting.flavor == Flavor::GL && !shape.sp_blocks.empty())
    throw InputError(kModule, "symplectic block in a GL shape");
  return realize_subgroup(setting.weyl_group(), shape);
}

}  // namespace substrata
