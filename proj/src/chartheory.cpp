#include "substrata/chartheory.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace substrata {

namespace {

const char* kModule = "chartheory";

using Wide = __int128;

// ---------------------------------------------------------------------------
// Murnaghan-Nakayama

// Partitions obtained by removing a rim hook of length `len`, with sign (-1)^height.
std::vector<std::pair<Partition, int>> remove_rim_hooks(const Partition& p, int len) {
  const int length = p.length();
  std::vector<int> beta(length);
  for (int i = 0; i < length; ++i) beta[i] = p.parts[i] + (length - 1 - i);
  std::vector<std::pair<Partition, int>> out;
  for (int i = 0; i < length; ++i) {
    const int from = beta[i], to = from - len;
    if (to < 0 || std::find(beta.begin(), beta.end(), to) != beta.end()) continue;
    const auto height = std::count_if(beta.begin(), beta.end(), [&](int x) { return x > to && x < from; });
    std::vector<int> nb = beta;
    nb[i] = to;
    std::sort(nb.begin(), nb.end(), std::greater<>());
    std::vector<int> parts(length);
    for (int j = 0; j < length; ++j) parts[j] = nb[j] - (length - 1 - j);
    out.emplace_back(Partition(parts), height % 2 ? -1 : 1);
  }
  return out;
}

// cycles: (length, +1/-1), consumed from index k on.
std::int64_t mn_recursive(const Partition& a, const Partition& b, const std::vector<std::pair<int, int>>& cycles,
                          std::size_t k, bool bipartite) {
  if (k == cycles.size()) return a.empty() && b.empty() ? 1 : 0;
  const auto [len, sign] = cycles[k];
  std::int64_t sum = 0;
  for (const auto& [rest, s] : remove_rim_hooks(a, len)) sum += s * mn_recursive(rest, b, cycles, k + 1, bipartite);
  if (bipartite)
    for (const auto& [rest, s] : remove_rim_hooks(b, len)) sum += s * sign * mn_recursive(a, rest, cycles, k + 1, bipartite);
  return sum;
}

std::vector<std::pair<int, int>> cycle_list(const SignedCycleType& c) {
  std::vector<std::pair<int, int>> cycles;
  for (int l : c.positive.parts) cycles.emplace_back(l, 1);
  for (int l : c.negative.parts) cycles.emplace_back(l, -1);
  std::sort(cycles.begin(), cycles.end(), std::greater<>());
  return cycles;
}

// ---------------------------------------------------------------------------
// Saturation helpers

Wide raw_inner(const ProductGroup& g, const ClassFunction& f, const ClassFunction& h) {
  Wide s = 0;
  const auto& cls = g.classes();
  for (std::size_t i = 0; i < cls.size(); ++i) s += Wide(cls[i].size) * f.values[i] * h.values[i];
  return s;
}

ClassFunction from_cycle_types(const ProductGroup& g, auto&& value) {
  ClassFunction cf{g.id(), {}};
  for (const auto& c : g.classes()) {
    std::int64_t v = 1;
    for (std::size_t f = 0; f < c.label.size(); ++f) v *= value(g.factors()[f], c.label[f], f);
    cf.values.push_back(v);
  }
  return cf;
}

std::int64_t perm_sign(const SignedCycleType& c) {
  int odd = 0;
  for (int l : c.positive.parts) odd += l - 1;
  for (int l : c.negative.parts) odd += l - 1;
  return odd % 2 ? -1 : 1;
}

std::int64_t eta(const SignedCycleType& c) { return c.negative.length() % 2 ? -1 : 1; }

// Coefficients of prod over cycles (1 - c (-t)^len): exterior powers of the natural representation.
std::vector<std::int64_t> exterior_power_values(const SignedCycleType& c) {
  std::vector<std::int64_t> poly{1};
  auto mul = [&](int len, int sign) {
    std::vector<std::int64_t> r(poly.size() + len, 0);
    const std::int64_t coeff = -sign * (len % 2 ? -1 : 1);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      r[i] += poly[i];
      r[i + len] += coeff * poly[i];
    }
    poly = std::move(r);
  };
  for (int l : c.positive.parts) mul(l, 1);
  for (int l : c.negative.parts) mul(l, -1);
  return poly;
}

class Saturator {
 public:
  Saturator(std::shared_ptr<const ProductGroup> g) : g_(std::move(g)), order_(g_->order()) {}

  std::vector<ClassFunction> run(const std::vector<ClassFunction>& seeds) {
    const std::size_t target = g_->num_classes();
    for (const auto& s : seeds) absorb(s);
    std::size_t tensor_done = 0;
    while (irr_.size() < target) {
      const std::size_t before = irr_.size();
      // Re-reduce what is left over from earlier rounds.
      auto pending = std::move(remainders_);
      remainders_.clear();
      for (auto& r : pending) absorb(r);
      try_differences();
      if (irr_.size() < target && irr_.size() == before) {
        // Close under tensor products with the newly found irreducibles.
        const std::size_t known = irr_.size();
        for (std::size_t i = tensor_done; i < known; ++i)
          for (std::size_t j = 0; j <= i; ++j) absorb(irr_[i] * irr_[j]);
        const auto rems = remainders_;
        for (std::size_t i = 0; i < known; ++i)
          for (const auto& r : rems) absorb(irr_[i] * r);
        try_differences();
        tensor_done = known;
        if (irr_.size() == before)
          throw ConsistencyError(kModule, "character saturation stalled for " + g_->id() + " at " +
                                              std::to_string(before) + " of " + std::to_string(target) +
                                              " irreducibles");
      }
    }
    return irr_;
  }

 private:
  ClassFunction reduce(ClassFunction f) const {
    for (const auto& chi : irr_) {
      const Wide ip = raw_inner(*g_, f, chi);
      if (ip % order_ != 0) throw ConsistencyError(kModule, "non-integral multiplicity during saturation");
      const auto m = static_cast<std::int64_t>(ip / order_);
      if (m != 0) f -= chi.scaled(m);
    }
    return f;
  }

  void absorb(const ClassFunction& candidate) {
    ClassFunction f = reduce(candidate);
    const Wide norm = raw_inner(*g_, f, f);
    if (norm == 0) return;
    if (norm == order_) {
      if (f.degree() < 0) f = f.scaled(-1);
      irr_.push_back(std::move(f));
      // Earlier remainders may now shrink.
      return;
    }
    if (std::find(remainders_.begin(), remainders_.end(), f) == remainders_.end()) remainders_.push_back(std::move(f));
  }

  // Two remainders differing by exactly one irreducible expose it.
  void try_differences() {
    bool found = true;
    while (found && !remainders_.empty()) {
      found = false;
      for (auto& r : remainders_) r = reduce(r);
      std::erase_if(remainders_, [&](const ClassFunction& r) { return raw_inner(*g_, r, r) == 0; });
      for (std::size_t i = 0; i < remainders_.size() && !found; ++i) {
        if (raw_inner(*g_, remainders_[i], remainders_[i]) == order_) {
          absorb(remainders_[i]);
          remainders_.erase(remainders_.begin() + static_cast<std::ptrdiff_t>(i));
          found = true;
          break;
        }
        for (std::size_t j = 0; j < i && !found; ++j) {
          ClassFunction d = remainders_[i];
          d -= remainders_[j];
          if (raw_inner(*g_, d, d) == order_) {
            if (d.degree() < 0) d = d.scaled(-1);
            absorb(d);
            found = true;
          }
        }
      }
    }
  }

  std::shared_ptr<const ProductGroup> g_;
  Wide order_;
  std::vector<ClassFunction> irr_;
  std::vector<ClassFunction> remainders_;
};

ClassFunction induce_linear(const ReflectionSubgroup& sub, const std::vector<bool>& twist_by_eta) {
  ClassFunction lin = from_cycle_types(*sub.group, [&](const Factor&, const SignedCycleType& c, std::size_t f) {
    return twist_by_eta[f] ? eta(c) : std::int64_t{1};
  });
  return induce(sub, lin);
}

std::vector<ClassFunction> saturation_seeds(const std::shared_ptr<const ProductGroup>& g, const Factor& f) {
  std::vector<ClassFunction> seeds;
  seeds.push_back(trivial_character(*g));
  seeds.push_back(from_cycle_types(*g, [](const Factor&, const SignedCycleType& c, std::size_t) { return perm_sign(c); }));
  if (f.kind == FactorKind::Hyperoctahedral) {
    seeds.push_back(from_cycle_types(*g, [](const Factor&, const SignedCycleType& c, std::size_t) { return eta(c); }));
    seeds.push_back(from_cycle_types(
        *g, [](const Factor&, const SignedCycleType& c, std::size_t) { return eta(c) * perm_sign(c); }));
  }
  for (int k = 1; k <= f.rank; ++k)
    seeds.push_back(from_cycle_types(*g, [k](const Factor&, const SignedCycleType& c, std::size_t) {
      return exterior_power_values(c)[k];
    }));

  // Permutation characters of block subgroups, and their eta-twists on a
  // symplectic block.
  if (f.kind == FactorKind::Symmetric) {
    for (const auto& p : partitions_of(f.rank)) {
      auto sub = realize_subgroup(g, CentralizerShape{{}, p.parts});
      seeds.push_back(induce_linear(sub, std::vector<bool>(sub.group->factors().size(), false)));
    }
    return seeds;
  }
  for (int a = f.rank; a >= 0; --a) {
    for (int b = std::min(a, f.rank - a); b >= 0; --b) {
      for (const auto& p : partitions_of(f.rank - a - b)) {
        CentralizerShape shape;
        if (a > 0) shape.sp_blocks.push_back(a);
        if (b > 0) shape.sp_blocks.push_back(b);
        shape.gl_blocks = p.parts;
        auto sub = realize_subgroup(g, shape);
        const std::size_t nf = sub.group->factors().size();
        const std::size_t nsp = shape.sp_blocks.size();
        for (unsigned mask = 0; mask < (1u << nsp); ++mask) {
          std::vector<bool> twist(nf, false);
          for (std::size_t i = 0; i < nsp; ++i) twist[i] = (mask >> i) & 1u;
          seeds.push_back(induce_linear(sub, twist));
        }
      }
    }
  }
  return seeds;
}

std::size_t find_row(const CharacterTable& t, const ClassFunction& target, const char* what) {
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t.row(i).values == target.values) return i;
  throw ConsistencyError(kModule, std::string("no ") + what + " character in table of " + t.group().id());
}

}  // namespace

// ---------------------------------------------------------------------------
// Labels

std::string Bipartition::to_string() const { return "(" + alpha.to_string() + ";" + beta.to_string() + ")"; }

std::string to_string(const FactorIrr& irr) {
  if (const auto* p = std::get_if<Partition>(&irr)) return "(" + p->to_string() + ")";
  return std::get<Bipartition>(irr).to_string();
}

std::string IrrLabel::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "x" : "") + substrata::to_string(parts[i]);
  return s;
}

IrrLabel IrrLabel::parse(const std::string& text) {
  IrrLabel label;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] != '(') throw InputError(kModule, "bad irreducible label '" + text + "'");
    const auto close = text.find(')', pos);
    if (close == std::string::npos) throw InputError(kModule, "bad irreducible label '" + text + "'");
    const std::string body = text.substr(pos + 1, close - pos - 1);
    const auto semi = body.find(';');
    if (semi == std::string::npos)
      label.parts.emplace_back(Partition::parse(body));
    else
      label.parts.emplace_back(Bipartition{Partition::parse(body.substr(0, semi)), Partition::parse(body.substr(semi + 1))});
    pos = close + 1;
    if (pos < text.size()) {
      if (text[pos] != 'x') throw InputError(kModule, "bad irreducible label '" + text + "'");
      ++pos;
    }
  }
  if (label.parts.empty()) throw InputError(kModule, "empty irreducible label");
  return label;
}

IrrLabel concat(const IrrLabel& a, const IrrLabel& b) {
  IrrLabel r = a;
  r.parts.insert(r.parts.end(), b.parts.begin(), b.parts.end());
  return r;
}

// ---------------------------------------------------------------------------
// Class functions and multisets

ClassFunction& ClassFunction::operator+=(const ClassFunction& rhs) {
  if (group_id != rhs.group_id || values.size() != rhs.values.size()) throw InputError(kModule, "group mismatch");
  for (std::size_t i = 0; i < values.size(); ++i) values[i] += rhs.values[i];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& rhs) {
  if (group_id != rhs.group_id || values.size() != rhs.values.size()) throw InputError(kModule, "group mismatch");
  for (std::size_t i = 0; i < values.size(); ++i) values[i] -= rhs.values[i];
  return *this;
}

ClassFunction ClassFunction::operator*(const ClassFunction& rhs) const {
  if (group_id != rhs.group_id || values.size() != rhs.values.size()) throw InputError(kModule, "group mismatch");
  ClassFunction r{group_id, values};
  for (std::size_t i = 0; i < values.size(); ++i) r.values[i] *= rhs.values[i];
  return r;
}

ClassFunction ClassFunction::scaled(std::int64_t k) const {
  ClassFunction r{group_id, values};
  for (auto& v : r.values) v *= k;
  return r;
}

RepMultiset::RepMultiset(std::initializer_list<std::pair<const IrrLabel, int>> init) {
  for (const auto& [label, mult] : init) add(label, mult);
}

void RepMultiset::add(const IrrLabel& label, int mult) {
  if (mult < 0) throw InputError(kModule, "negative multiplicity");
  if (mult == 0) return;
  entries_[label] += mult;
}

int RepMultiset::multiplicity(const IrrLabel& label) const {
  auto it = entries_.find(label);
  return it == entries_.end() ? 0 : it->second;
}

int RepMultiset::total_count() const {
  int s = 0;
  for (const auto& [_, m] : entries_) s += m;
  return s;
}

std::set<IrrLabel> RepMultiset::support() const {
  std::set<IrrLabel> s;
  for (const auto& [l, _] : entries_) s.insert(l);
  return s;
}

RepMultiset RepMultiset::without(const std::set<IrrLabel>& excluded) const {
  RepMultiset r;
  for (const auto& [l, m] : entries_)
    if (!excluded.contains(l)) r.add(l, m);
  return r;
}

std::string RepMultiset::canonical() const {
  if (entries_.empty()) return "0";
  std::string s;
  for (const auto& [l, m] : entries_) {
    if (!s.empty()) s += "+";
    if (m != 1) s += std::to_string(m) + "*";
    s += l.to_string();
  }
  return s;
}

RepMultiset outer_product(const std::vector<RepMultiset>& factors) {
  RepMultiset acc;
  acc.add(IrrLabel{}, 1);
  for (const auto& f : factors) {
    RepMultiset next;
    for (const auto& [la, ma] : acc.entries())
      for (const auto& [lb, mb] : f.entries()) next.add(concat(la, lb), ma * mb);
    acc = std::move(next);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Tables

CharacterTable::CharacterTable(std::shared_ptr<const ProductGroup> group, std::vector<IrrLabel> labels,
                               std::vector<ClassFunction> rows)
    : group_(std::move(group)), labels_(std::move(labels)), rows_(std::move(rows)) {
  if (labels_.size() != rows_.size()) throw InputError(kModule, "label/row count mismatch");
}

std::optional<std::size_t> CharacterTable::find(const IrrLabel& label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t CharacterTable::index_of(const IrrLabel& label) const {
  if (auto i = find(label)) return *i;
  throw InputError(kModule, "no irreducible " + label.to_string() + " in table of " + group_->id());
}

std::size_t CharacterTable::trivial_index() const { return find_row(*this, trivial_character(*group_), "trivial"); }

std::size_t CharacterTable::sign_index() const {
  ClassFunction det{group_->id(), {}};
  for (const auto& c : group_->classes()) {
    std::int64_t v = 1;
    for (const auto& t : c.label) v *= perm_sign(t) * eta(t);
    det.values.push_back(v);
  }
  return find_row(*this, det, "sign");
}

std::int64_t mn_character_value(const FactorIrr& irr, const SignedCycleType& c) {
  if (const auto* p = std::get_if<Partition>(&irr)) {
    if (!c.negative.empty()) throw InputError(kModule, "signed class for a symmetric-group character");
    return mn_recursive(*p, Partition{}, cycle_list(c), 0, false);
  }
  const auto& b = std::get<Bipartition>(irr);
  return mn_recursive(b.alpha, b.beta, cycle_list(c), 0, true);
}

std::vector<FactorIrr> factor_irreducible_labels(const Factor& f) {
  std::vector<FactorIrr> out;
  if (f.kind == FactorKind::Symmetric) {
    for (auto& p : partitions_of(f.rank)) out.emplace_back(p);
  } else {
    for (int k = 0; k <= f.rank; ++k)
      for (auto& a : partitions_of(k))
        for (auto& b : partitions_of(f.rank - k)) out.emplace_back(Bipartition{a, b});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::shared_ptr<const CharacterTable> saturate_character_table(const Factor& f) {
  auto g = ProductGroup::single(f);
  Saturator sat(g);
  auto irr = sat.run(saturation_seeds(g, f));

  // Name each row through the Murnaghan-Nakayama rule.
  std::map<std::vector<std::int64_t>, IrrLabel> by_values;
  for (const auto& label : factor_irreducible_labels(f)) {
    std::vector<std::int64_t> v;
    for (const auto& c : g->classes()) v.push_back(mn_character_value(label, c.label[0]));
    by_values.emplace(std::move(v), IrrLabel(std::vector<FactorIrr>{label}));
  }
  std::vector<std::pair<IrrLabel, ClassFunction>> named;
  for (auto& chi : irr) {
    auto it = by_values.find(chi.values);
    if (it == by_values.end())
      throw ConsistencyError(kModule, "saturated character of " + g->id() + " matches no combinatorial label");
    named.emplace_back(it->second, std::move(chi));
  }
  std::sort(named.begin(), named.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (std::size_t i = 1; i < named.size(); ++i)
    if (named[i].first == named[i - 1].first) throw ConsistencyError(kModule, "duplicate irreducible in saturation");
  std::vector<IrrLabel> labels;
  std::vector<ClassFunction> rows;
  for (auto& [l, r] : named) {
    labels.push_back(l);
    rows.push_back(std::move(r));
  }
  return std::make_shared<const CharacterTable>(g, std::move(labels), std::move(rows));
}

std::shared_ptr<const CharacterTable> factor_character_table(const Factor& f) {
  static std::mutex mu;
  static std::map<Factor, std::shared_ptr<const CharacterTable>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(f); it != cache.end()) return it->second;
  }
  auto table = saturate_character_table(f);
  std::lock_guard lock(mu);
  return cache.emplace(f, std::move(table)).first->second;
}

std::shared_ptr<const CharacterTable> character_table(std::shared_ptr<const ProductGroup> group) {
  const auto& factors = group->factors();
  if (factors.size() == 1) {
    auto ft = factor_character_table(factors[0]);
    std::vector<ClassFunction> rows = ft->rows();
    for (auto& r : rows) r.group_id = group->id();
    return std::make_shared<const CharacterTable>(group, ft->labels(), std::move(rows));
  }
  std::vector<std::shared_ptr<const CharacterTable>> fts;
  for (const auto& f : factors) fts.push_back(factor_character_table(f));

  // Rows: lexicographic in factor labels (first factor slowest), matching
  // the class ordering of ProductGroup.
  std::size_t nrows = 1;
  for (auto& t : fts) nrows *= t->size();
  std::vector<IrrLabel> labels;
  std::vector<ClassFunction> rows;
  const auto& classes = group->classes();
  for (std::size_t flat = 0; flat < nrows; ++flat) {
    std::vector<std::size_t> idx(fts.size());
    std::size_t rest = flat;
    for (std::size_t k = fts.size(); k-- > 0;) {
      idx[k] = rest % fts[k]->size();
      rest /= fts[k]->size();
    }
    IrrLabel label;
    for (std::size_t k = 0; k < fts.size(); ++k) label = concat(label, fts[k]->labels()[idx[k]]);
    ClassFunction row{group->id(), {}};
    for (const auto& c : classes) {
      std::int64_t v = 1;
      for (std::size_t k = 0; k < fts.size(); ++k) {
        const std::size_t ci = fts[k]->group().class_index({c.label[k]});
        v *= fts[k]->row(idx[k]).values[ci];
      }
      row.values.push_back(v);
    }
    labels.push_back(std::move(label));
    rows.push_back(std::move(row));
  }
  return std::make_shared<const CharacterTable>(group, std::move(labels), std::move(rows));
}

std::shared_ptr<const CharacterTable> character_table(const GroupSetting& setting) {
  return character_table(setting.weyl_group());
}

std::shared_ptr<const CharacterTable> character_table(const ReflectionSubgroup& sub) { return character_table(sub.group); }

// ---------------------------------------------------------------------------
// Inner products, induction, decomposition

Rational inner_product(const ProductGroup& group, const ClassFunction& f, const ClassFunction& g) {
  if (f.group_id != group.id() || g.group_id != group.id() || f.values.size() != group.num_classes() ||
      g.values.size() != group.num_classes())
    throw InputError(kModule, "class functions do not belong to " + group.id());
  Integer s = 0;
  const auto& cls = group.classes();
  for (std::size_t i = 0; i < cls.size(); ++i) s += Integer(cls[i].size) * f.values[i] * g.values[i];
  return Rational(s, Integer(group.order()));
}

ClassFunction trivial_character(const ProductGroup& group) {
  return ClassFunction{group.id(), std::vector<std::int64_t>(group.num_classes(), 1)};
}

ClassFunction regular_character(const ProductGroup& group) {
  ClassFunction r{group.id(), std::vector<std::int64_t>(group.num_classes(), 0)};
  r.values[0] = group.order();
  return r;
}

ClassFunction induce(const ReflectionSubgroup& sub, const ClassFunction& f) {
  const auto& g = *sub.group;
  const auto& w = *sub.ambient;
  if (f.group_id != g.id() || f.values.size() != g.num_classes())
    throw InputError(kModule, "class function does not belong to " + g.id());
  std::vector<Integer> acc(w.num_classes(), 0);
  for (std::size_t i = 0; i < g.num_classes(); ++i) acc[sub.fusion[i]] += Integer(f.values[i]) * g.classes()[i].size;
  ClassFunction out{w.id(), {}};
  for (std::size_t c = 0; c < w.num_classes(); ++c) {
    const Integer num = acc[c] * w.order();
    const Integer den = Integer(w.classes()[c].size) * g.order();
    if (num % den != 0) throw ConsistencyError(kModule, "induced value is not an integer");
    out.values.push_back(static_cast<std::int64_t>(num / den));
  }
  return out;
}

ClassFunction restrict_character(const ReflectionSubgroup& sub, const ClassFunction& f) {
  if (f.group_id != sub.ambient->id() || f.values.size() != sub.ambient->num_classes())
    throw InputError(kModule, "class function does not belong to " + sub.ambient->id());
  ClassFunction out{sub.group->id(), {}};
  for (std::size_t i = 0; i < sub.group->num_classes(); ++i) out.values.push_back(f.values[sub.fusion[i]]);
  return out;
}

RepMultiset decompose(const CharacterTable& table, const ClassFunction& f) {
  RepMultiset m;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const Rational ip = inner_product(table.group(), f, table.row(i));
    if (denominator(ip) != 1 || ip < 0)
      throw ConsistencyError(kModule, "not a character: multiplicity of " + table.labels()[i].to_string() + " is " +
                                          ip.str());
    m.add(table.labels()[i], static_cast<int>(numerator(ip)));
  }
  if (character_of(table, m) != f) throw ConsistencyError(kModule, "decomposition does not reconstruct the character");
  return m;
}

ClassFunction character_of(const CharacterTable& table, const RepMultiset& m) {
  ClassFunction r{table.group().id(), std::vector<std::int64_t>(table.group().num_classes(), 0)};
  for (const auto& [label, mult] : m.entries()) r += table.row(label).scaled(mult);
  return r;
}

std::int64_t dimension(const CharacterTable& table, const RepMultiset& m) {
  std::int64_t d = 0;
  for (const auto& [label, mult] : m.entries()) d += mult * table.dim(label);
  return d;
}

}  // namespace substrata
