#include "idminor/functions.hpp"

#include <algorithm>
#include <stdexcept>

namespace idminor {

FiniteFunction::FiniteFunction(int k, int n, int m, Table table)
    : k_(k), n_(n), m_(m), table_(std::move(table)) {
  if (k < 1 || n < 1 || m < 1)
    throw std::invalid_argument("function shape needs k, n, m >= 1");
  if (table_.size() != power(k, n))
    throw std::invalid_argument("table has " + std::to_string(table_.size()) +
                                " entries, expected " +
                                std::to_string(power(k, n)));
  for (int v : table_)
    if (v < 0 || v >= m)
      throw std::invalid_argument("table value " + std::to_string(v + 1) +
                                  " outside 1.." + std::to_string(m));
}

std::size_t power(int base, int exponent) {
  std::size_t r = 1;
  for (int i = 0; i < exponent; ++i)
    r *= static_cast<std::size_t>(base);
  return r;
}

std::string to_string(Invariant phi) {
  switch (phi) {
  case Invariant::supp: return "supp";
  case Invariant::ofo: return "ofo";
  case Invariant::ms: return "ms";
  case Invariant::cs: return "cs";
  }
  return "?";
}

Invariant parse_invariant(const std::string &name) {
  if (name == "supp") return Invariant::supp;
  if (name == "ofo") return Invariant::ofo;
  if (name == "ms") return Invariant::ms;
  if (name == "cs") return Invariant::cs;
  throw std::invalid_argument("unknown invariant '" + name + "'");
}

Tuple fiber_key(Invariant phi, const Tuple &a) {
  switch (phi) {
  case Invariant::ofo:
    return a.empty() ? a : ofo_canonical(a);
  case Invariant::cs:
    return cs_canonical(a);
  case Invariant::ms: {
    std::vector<Symbol> e(a.begin(), a.end());
    std::sort(e.begin(), e.end());
    return Tuple(a.alphabet(), std::move(e));
  }
  case Invariant::supp: {
    const auto s = supp(a);
    return Tuple(a.alphabet(), std::vector<Symbol>(s.begin(), s.end()));
  }
  }
  throw std::invalid_argument("unknown invariant");
}

std::vector<int> fiber_partition(int k, int n, Invariant phi) {
  std::map<Tuple, int> label;
  std::vector<int> out;
  for (const Tuple &a : all_tuples(k, n)) {
    auto [it, fresh] =
        label.try_emplace(fiber_key(phi, a), static_cast<int>(label.size()));
    out.push_back(it->second);
  }
  return out;
}

FunctionSpace::FunctionSpace(int k, int n)
    : k_(k), n_(n), size_(power(k, n)), weight_(n), perms_(all_permutations(n)) {
  for (int i = 0; i < n; ++i)
    weight_[i] = power(k, n - 1 - i);
  digits_.resize(size_ * static_cast<std::size_t>(n));
  repeat_.resize(size_);
  for (std::size_t idx = 0; idx < size_; ++idx) {
    const Tuple a = tuple_at(k, n, idx);
    std::vector<int> seen(k, 0);
    bool rep = false;
    for (int i = 0; i < n; ++i) {
      digits_[idx * n + i] = a[i];
      rep = rep || seen[a[i]]++ > 0;
    }
    repeat_[idx] = rep;
  }
  for (Invariant phi :
       {Invariant::supp, Invariant::ofo, Invariant::ms, Invariant::cs})
    partitions_.push_back(fiber_partition(k, n, phi));
}

const std::vector<int> &FunctionSpace::partition(Invariant phi) const {
  return partitions_[static_cast<std::size_t>(phi)];
}

std::size_t FunctionSpace::permuted_index(std::size_t index,
                                          const Permutation &sigma) const {
  const int *d = &digits_[index * n_];
  std::size_t out = 0;
  for (int i = 0; i < n_; ++i)
    out += weight_[i] * static_cast<std::size_t>(d[sigma(i)]);
  return out;
}

std::vector<std::uint32_t> index_map(int k, int n, const IndexMap &tau) {
  const int m = static_cast<int>(tau.size());
  for (int t : tau)
    if (t < 0 || t >= n)
      throw std::out_of_range("malformed index map: image " +
                              std::to_string(t + 1) + " outside 1.." +
                              std::to_string(n));
  const std::size_t total = power(k, n);
  std::vector<std::uint32_t> out(total);
  std::vector<int> digits(n);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    for (int i = n - 1; i >= 0; --i) {
      digits[i] = static_cast<int>(rest % k);
      rest /= k;
    }
    std::size_t j = 0;
    for (int p = 0; p < m; ++p)
      j = j * k + digits[tau[p]];
    out[idx] = static_cast<std::uint32_t>(j);
  }
  return out;
}

FiniteFunction minor(const FiniteFunction &g, int n, const IndexMap &tau) {
  if (static_cast<int>(tau.size()) != g.arity())
    throw std::invalid_argument("index map length " +
                                std::to_string(tau.size()) +
                                " does not match arity " +
                                std::to_string(g.arity()));
  const auto map = index_map(g.alphabet(), n, tau);
  Table t(map.size());
  for (std::size_t i = 0; i < map.size(); ++i)
    t[i] = g.at(map[i]);
  return FiniteFunction(g.alphabet(), n, g.codomain(), std::move(t));
}

FiniteFunction permute_arguments(const FiniteFunction &f,
                                 const Permutation &sigma) {
  if (sigma.degree() != f.arity())
    throw std::invalid_argument("permutation degree differs from arity");
  return minor(f, f.arity(),
               IndexMap(sigma.images().begin(), sigma.images().end()));
}

FiniteFunction identification_minor(const FiniteFunction &f, Couple I) {
  if (f.arity() < 2)
    throw std::invalid_argument("identification minors need arity >= 2");
  return minor(f, f.arity() - 1, delta_map(f.arity(), I));
}

namespace {

// f == g o sigma^, scanning indices upward and stopping at a mismatch.
bool agrees(const FiniteFunction &f, const FiniteFunction &g,
            const Permutation &sigma, const FunctionSpace &space) {
  for (std::size_t idx = 0; idx < space.size(); ++idx)
    if (f.at(idx) != g.at(space.permuted_index(idx, sigma)))
      return false;
  return true;
}

bool same_shape(const FiniteFunction &f, const FiniteFunction &g) {
  return f.alphabet() == g.alphabet() && f.arity() == g.arity() &&
         f.codomain() == g.codomain();
}

// f o sigma^ is constant on the classes.
bool permuted_constant_on(const FiniteFunction &f, const Permutation &sigma,
                          const std::vector<int> &classes,
                          const FunctionSpace &space) {
  std::vector<int> value(space.size(), -1);
  for (std::size_t idx = 0; idx < space.size(); ++idx) {
    const int v = f.at(space.permuted_index(idx, sigma));
    int &slot = value[classes[idx]];
    if (slot < 0)
      slot = v;
    else if (slot != v)
      return false;
  }
  return true;
}

} // namespace

std::optional<Permutation> is_similar(const FiniteFunction &f,
                                      const FiniteFunction &g) {
  if (!same_shape(f, g))
    return std::nullopt;
  const FunctionSpace space(f.alphabet(), f.arity());
  for (const Permutation &sigma : space.permutations())
    if (agrees(f, g, sigma, space))
      return sigma;
  return std::nullopt;
}

UimResult has_unique_identification_minor(const FiniteFunction &f) {
  const int n = f.arity();
  if (n < 2)
    throw std::invalid_argument("unique identification minor needs arity >= 2");
  UimResult r;
  const auto all = couples(n);
  r.h = identification_minor(f, all.back());
  r.degenerate = n == 2;
  const FunctionSpace space(f.alphabet(), n - 1);
  for (Couple I : all) {
    const FiniteFunction fI = identification_minor(f, I);
    std::optional<Permutation> rho;
    for (const Permutation &sigma : space.permutations())
      if (agrees(fI, *r.h, sigma, space)) {
        rho = sigma;
        break;
      }
    if (!rho) {
      r.witnesses.clear();
      return r;
    }
    r.witnesses.emplace_back(I, *rho);
  }
  r.unique = true;
  return r;
}

PermGroup invariance_group(const FiniteFunction &f, const FunctionSpace &space) {
  PermSet g;
  for (const Permutation &sigma : space.permutations())
    if (agrees(f, f, sigma, space))
      g.insert(sigma);
  return PermGroup(f.arity(), std::move(g));
}

PermGroup invariance_group(const FiniteFunction &f) {
  return invariance_group(f, FunctionSpace(f.alphabet(), f.arity()));
}

bool is_totally_symmetric(const FiniteFunction &f) {
  // The transposition (1 2) and the natural cycle generate S_n.
  const int n = f.arity();
  if (n < 2)
    return true;
  const FunctionSpace space(f.alphabet(), n);
  std::vector<int> swap(n);
  for (int i = 0; i < n; ++i)
    swap[i] = i;
  std::swap(swap[0], swap[1]);
  return agrees(f, f, Permutation(swap), space) &&
         agrees(f, f, Permutation::natural_cycle(n), space);
}

bool is_2set_transitive(const FiniteFunction &f) {
  return is_2set_transitive_group(invariance_group(f));
}

bool constant_on_classes(const Table &table, const std::vector<int> &classes) {
  std::map<int, int> value;
  for (std::size_t i = 0; i < table.size(); ++i) {
    auto [it, fresh] = value.try_emplace(classes[i], table[i]);
    if (!fresh && it->second != table[i])
      return false;
  }
  return true;
}

std::optional<SpecTable> is_determined_by(const FiniteFunction &f,
                                          Invariant phi) {
  SpecTable spec;
  const auto space = all_tuples(f.alphabet(), f.arity());
  for (std::size_t idx = 0; idx < space.size(); ++idx) {
    auto [it, fresh] = spec.try_emplace(fiber_key(phi, space[idx]), f.at(idx));
    if (!fresh && it->second != f.at(idx))
      return std::nullopt;
  }
  return spec;
}

std::optional<Permutation>
similar_to_determined_by(const FiniteFunction &f, Invariant phi,
                         const FunctionSpace &space) {
  const auto &classes = space.partition(phi);
  for (const Permutation &sigma : space.permutations())
    if (permuted_constant_on(f, sigma, classes, space))
      return sigma;
  return std::nullopt;
}

std::optional<DeterminedWitness>
is_similar_to_determined_by(const FiniteFunction &f, Invariant phi) {
  const FunctionSpace space(f.alphabet(), f.arity());
  const auto sigma = similar_to_determined_by(f, phi, space);
  if (!sigma)
    return std::nullopt;
  auto spec = is_determined_by(permute_arguments(f, *sigma), phi);
  return DeterminedWitness{*sigma, std::move(*spec)};
}

bool characterize_ofo_by_minors(const FiniteFunction &f) {
  if (f.arity() < 2)
    throw std::invalid_argument("minor characterization needs arity >= 2");
  const auto all = couples(f.arity());
  const FiniteFunction h = identification_minor(f, all.back());
  return std::all_of(all.begin(), all.end(), [&](Couple I) {
    return identification_minor(f, I) == h;
  });
}

Permutation zeta(int n_minus_one, int i) {
  std::vector<int> w(n_minus_one);
  for (int j = 0; j < n_minus_one; ++j) {
    if (j < i)
      w[j] = j;
    else if (j < n_minus_one - 1)
      w[j] = j + 1;
    else
      w[j] = i;
  }
  return Permutation(std::move(w));
}

bool characterize_cs_by_minors(const FiniteFunction &f) {
  if (f.arity() < 2)
    throw std::invalid_argument("minor characterization needs arity >= 2");
  const int n = f.arity();
  const auto all = couples(n);
  const FiniteFunction h = identification_minor(f, all.back());
  return std::all_of(all.begin(), all.end(), [&](Couple I) {
    return identification_minor(f, I) ==
           permute_arguments(h, zeta(n - 1, I.lo));
  });
}

NeqRestriction restrict_neq_tests(const FiniteFunction &f) {
  const FunctionSpace space(f.alphabet(), f.arity());
  NeqRestriction r;

  std::map<int, int> by_support;
  r.supp_determined_on_neq = true;
  const auto &supp_classes = space.partition(Invariant::supp);
  for (std::size_t idx = 0; idx < space.size(); ++idx) {
    if (!space.has_repeat(idx))
      continue;
    auto [it, fresh] = by_support.try_emplace(supp_classes[idx], f.at(idx));
    if (!fresh && it->second != f.at(idx)) {
      r.supp_determined_on_neq = false;
      break;
    }
  }

  // The domain is closed under every permutation, so invariance of the
  // partial function is a group condition.
  PermSet inv;
  for (const Permutation &sigma : space.permutations()) {
    bool ok = true;
    for (std::size_t idx = 0; idx < space.size() && ok; ++idx)
      if (space.has_repeat(idx))
        ok = f.at(idx) == f.at(space.permuted_index(idx, sigma));
    if (ok)
      inv.insert(sigma);
  }
  const PermGroup G(f.arity(), std::move(inv));
  r.totally_symmetric_on_neq = G.order() == space.permutations().size();
  r.two_set_transitive_on_neq = is_2set_transitive_group(G);
  return r;
}

std::string to_string(ClassLabel label) {
  switch (label) {
  case ClassLabel::UIM: return "UIM";
  case ClassLabel::OFO: return "OFO";
  case ClassLabel::CS: return "CS";
  case ClassLabel::TwoST: return "2ST";
  case ClassLabel::SYMM: return "SYMM";
  case ClassLabel::SUPP: return "SUPP";
  }
  return "?";
}

std::set<ClassLabel> classify(const FiniteFunction &f,
                              const FunctionSpace &space) {
  std::set<ClassLabel> out;
  if (f.arity() <= 2 || has_unique_identification_minor(f).unique)
    out.insert(ClassLabel::UIM);
  if (similar_to_determined_by(f, Invariant::ofo, space))
    out.insert(ClassLabel::OFO);
  if (similar_to_determined_by(f, Invariant::cs, space))
    out.insert(ClassLabel::CS);
  const PermGroup inv = invariance_group(f, space);
  if (is_2set_transitive_group(inv))
    out.insert(ClassLabel::TwoST);
  if (inv.order() == space.permutations().size())
    out.insert(ClassLabel::SYMM);
  if (constant_on_classes(f.table(), space.partition(Invariant::supp)))
    out.insert(ClassLabel::SUPP);
  return out;
}

std::set<ClassLabel> classify(const FiniteFunction &f) {
  return classify(f, FunctionSpace(f.alphabet(), f.arity()));
}

FiniteFunction reverse(const FiniteFunction &f) {
  return permute_arguments(f, Permutation::descending(f.arity()));
}

Table canonical_table(const FiniteFunction &f) {
  const FunctionSpace space(f.alphabet(), f.arity());
  Table best = f.table();
  Table cand(space.size());
  for (const Permutation &sigma : space.permutations()) {
    // Build the permuted table only while it can still beat the best.
    bool smaller = false;
    bool worse = false;
    for (std::size_t idx = 0; idx < space.size(); ++idx) {
      cand[idx] = f.at(space.permuted_index(idx, sigma));
      if (!smaller) {
        if (cand[idx] > best[idx]) {
          worse = true;
          break;
        }
        if (cand[idx] < best[idx])
          smaller = true;
      }
    }
    if (smaller && !worse)
      best = cand;
  }
  return best;
}

Deck deck(const FiniteFunction &f) {
  if (f.arity() < 3)
    throw std::invalid_argument("decks are defined for arity >= 3");
  Deck d;
  for (Couple I : couples(f.arity()))
    ++d[canonical_table(identification_minor(f, I))];
  return d;
}

} // namespace idminor
