#include "idminor/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace idminor {

std::string format_cs_key(const CSValue &v) {
  std::string out;
  for (int c : v.content.counts())
    out += std::to_string(c) + ' ';
  out += '|';
  for (Symbol x : v.singles)
    out += ' ' + std::to_string(x + 1);
  return out;
}

IncompleteSpec::IncompleteSpec(const CSValue &missing)
    : std::runtime_error("incomplete spec: no value for " +
                         format_cs_key(missing)),
      missing_(missing) {}

CSSpec::CSSpec(int k, int n, int m, std::map<CSValue, int> values)
    : k_(k), n_(n), m_(m), values_(std::move(values)) {
  if (k < 1 || n < 1 || m < 1)
    throw std::invalid_argument("spec shape needs k, n, m >= 1");
}

int CSSpec::operator()(const CSValue &v) const {
  auto it = values_.find(v);
  if (it == values_.end())
    throw IncompleteSpec(v);
  return it->second;
}

void CSSpec::validate() const {
  const auto expected = enumerate_values(k_, n_);
  for (const CSValue &v : expected)
    if (!values_.count(v))
      throw IncompleteSpec(v);
  if (values_.size() != expected.size()) {
    const std::set<CSValue> allowed(expected.begin(), expected.end());
    for (const auto &[key, value] : values_)
      if (!allowed.count(key))
        throw std::invalid_argument("spec key outside the cs value space: " +
                                    format_cs_key(key));
  }
  for (const auto &[key, value] : values_)
    if (value < 0 || value >= m_)
      throw std::invalid_argument("spec value outside codomain at " +
                                  format_cs_key(key));
}

std::vector<int> z_levels(int k, int n) {
  if (k < 1 || n < 1)
    throw std::invalid_argument("z_levels needs k, n >= 1");
  std::vector<int> out;
  if (k < n) {
    for (int l = 0; l < k; ++l)
      out.push_back(l);
  } else {
    for (int l = 0; l <= n; ++l)
      if (l != n - 1)
        out.push_back(l);
  }
  return out;
}

namespace {

// Count vectors with the given total in which exactly `ones` entries are 1.
void count_vectors(int k, int remaining, int ones, std::vector<int> &cur,
                   std::vector<std::vector<int>> &out) {
  const int pos = static_cast<int>(cur.size());
  if (pos == k) {
    if (remaining == 0 && ones == 0)
      out.push_back(cur);
    return;
  }
  for (int c = 0; c <= remaining; ++c) {
    if (c == 1 && ones == 0)
      continue;
    cur.push_back(c);
    count_vectors(k, remaining - c, ones - (c == 1 ? 1 : 0), cur, out);
    cur.pop_back();
  }
}

bool level_admissible(int k, int n, int l) {
  const auto levels = z_levels(k, n);
  return std::find(levels.begin(), levels.end(), l) != levels.end();
}

void require_level(int k, int n, int l) {
  if (!level_admissible(k, n, l))
    throw std::invalid_argument("level " + std::to_string(l) +
                                " not admissible for k=" + std::to_string(k) +
                                ", n=" + std::to_string(n));
}

Tuple act(const Tuple &a, const Permutation &sigma) {
  return compose_tuple(a, IndexMap(sigma.images().begin(), sigma.images().end()));
}

} // namespace

std::vector<CSValue> enumerate_level(int k, int n, int l) {
  require_level(k, n, l);
  std::vector<std::vector<int>> vectors;
  std::vector<int> cur;
  count_vectors(k, n, l, cur, vectors);
  std::vector<CSValue> out;
  for (const auto &counts : vectors) {
    std::vector<Symbol> single;
    for (Symbol x = 0; x < k; ++x)
      if (counts[x] == 1)
        single.push_back(x);
    do {
      out.push_back({Multiset(counts), Tuple(k, single)});
    } while (std::next_permutation(single.begin(), single.end()));
  }
  return out;
}

std::vector<CSValue> enumerate_values(int k, int n) {
  std::vector<CSValue> out;
  for (int l : z_levels(k, n)) {
    auto level = enumerate_level(k, n, l);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

FiniteFunction build_cs_function(const CSSpec &spec) {
  return FiniteFunction::tabulate(
      spec.alphabet(), spec.arity(), spec.codomain(),
      [&](const Tuple &a) { return spec(cs(a)); });
}

std::optional<CSSpec> extract_cs_spec(const FiniteFunction &f) {
  std::map<CSValue, int> values;
  const auto space = all_tuples(f.alphabet(), f.arity());
  for (std::size_t idx = 0; idx < space.size(); ++idx) {
    auto [it, fresh] = values.try_emplace(cs(space[idx]), f.at(idx));
    if (!fresh && it->second != f.at(idx))
      return std::nullopt;
  }
  return CSSpec(f.alphabet(), f.arity(), f.codomain(), std::move(values));
}

CSSpec witness_new_spec(int k, int n, int m) {
  if (k < 3 || n < k + 1 || m < 2)
    throw std::invalid_argument("witness_new needs k >= 3, n >= k + 1, m >= 2");
  std::vector<int> counts(k, 1);
  counts[0] = n - k + 1;
  std::vector<Symbol> word(k - 1);
  std::iota(word.begin(), word.end(), 1);
  const CSValue marked{Multiset(counts), Tuple(k, word)};
  std::map<CSValue, int> values;
  for (const CSValue &v : enumerate_values(k, n))
    values.emplace(v, v == marked ? 1 : 0);
  return CSSpec(k, n, m, std::move(values));
}

FiniteFunction witness_new(int k, int n, int m) {
  return build_cs_function(witness_new_spec(k, n, m));
}

PermGroup level_invariants(const CSSpec &spec, int l) {
  require_level(spec.alphabet(), spec.arity(), l);
  if (l == 0)
    return PermGroup::trivial(0);
  const auto level = enumerate_level(spec.alphabet(), spec.arity(), l);
  PermSet inv;
  for (const Permutation &sigma : all_permutations(l)) {
    const bool ok = std::all_of(level.begin(), level.end(), [&](const CSValue &v) {
      return spec(v) == spec({v.content, act(v.singles, sigma)});
    });
    if (ok)
      inv.insert(sigma);
  }
  return PermGroup(l, std::move(inv));
}

PermGroup inv_from_levels(const CSSpec &spec) {
  const int n = spec.arity();
  PermGroup result = PermGroup::symmetric(n);
  // Levels 0 and 1 never constrain: every 1-pattern is the identity.
  for (int l : z_levels(spec.alphabet(), n))
    if (l >= 2)
      result = result.intersect(comp(n, level_invariants(spec, l)));
  return result;
}

bool check_sigma_transport(const CSSpec &f_spec, const CSSpec &g_spec,
                           const Permutation &sigma) {
  if (f_spec.alphabet() != g_spec.alphabet() ||
      f_spec.arity() != g_spec.arity() ||
      f_spec.codomain() != g_spec.codomain() ||
      sigma.degree() != f_spec.arity())
    throw std::invalid_argument("check_sigma_transport: shape mismatch");
  const int k = f_spec.alphabet();
  const int n = f_spec.arity();
  for (int l : z_levels(k, n)) {
    const PermSet pats =
        l == 0 ? PermSet{Permutation()} : patterns(sigma, l);
    for (const CSValue &v : enumerate_level(k, n, l))
      for (const Permutation &tau : pats)
        if (g_spec(v) != f_spec({v.content, act(v.singles, tau)}))
          return false;
  }
  return true;
}

NotDifferentiating::NotDifferentiating(EqualizingReport report)
    : std::runtime_error("permutation is " + std::to_string(report.l) +
                         "-equalizing: <Delta P> meets P (|P| = " +
                         std::to_string(report.pattern_count) +
                         ", |<Delta P>| = " +
                         std::to_string(report.generated_order) + ")"),
      report_(report) {}

SimilarPair witness_similar_pair(const Permutation &sigma, int l, int k, int n,
                                 int m) {
  if (sigma.degree() != n)
    throw std::invalid_argument("permutation degree differs from n");
  if (m < 2)
    throw std::invalid_argument("witness pair needs m >= 2");
  if (l < 1)
    throw std::invalid_argument("witness pair needs l >= 1");
  require_level(k, n, l);
  const EqualizingReport report = is_l_equalizing(sigma, l);
  if (report.equalizing)
    throw NotDifferentiating(report);

  const PermSet P = patterns(sigma, l);
  const PermGroup D = generate(differences(P));
  const Permutation rho = *P.begin();
  const Permutation rho_inv = rho.inverse();

  std::set<Tuple> f_words;
  std::set<Tuple> g_words;
  for (const Permutation &pi : D.elements()) {
    // (1 ... l) pi is the word of pi itself.
    f_words.insert(Tuple(k, std::vector<Symbol>(pi.images().begin(),
                                                pi.images().end())));
    const Permutation shifted = pi * rho_inv;
    g_words.insert(Tuple(k, std::vector<Symbol>(shifted.images().begin(),
                                                shifted.images().end())));
  }
  std::map<CSValue, int> f_values;
  std::map<CSValue, int> g_values;
  for (const CSValue &v : enumerate_values(k, n)) {
    f_values.emplace(v, f_words.count(v.singles) ? 1 : 0);
    g_values.emplace(v, g_words.count(v.singles) ? 1 : 0);
  }
  CSSpec f_spec(k, n, m, std::move(f_values));
  CSSpec g_spec(k, n, m, std::move(g_values));
  FiniteFunction f = build_cs_function(f_spec);
  FiniteFunction g = build_cs_function(g_spec);
  return {std::move(f_spec), std::move(g_spec), std::move(f),
          std::move(g), rho, report};
}

CSSpec reverse_spec(const CSSpec &spec) {
  std::map<CSValue, int> out;
  for (const auto &[key, value] : spec.values()) {
    std::vector<Symbol> rev(key.singles.begin(), key.singles.end());
    std::reverse(rev.begin(), rev.end());
    out.emplace(key, spec({key.content, Tuple(spec.alphabet(), rev)}));
  }
  return CSSpec(spec.alphabet(), spec.arity(), spec.codomain(), std::move(out));
}

CSSpec orbit_indicator_spec(int k, int n,
                            const std::map<int, PermGroup> &groups) {
  // Orbit label of every word over {0..l-1}, per level.
  std::map<int, std::map<Tuple, int>> labels;
  int m = 1;
  for (const auto &[l, G] : groups) {
    require_level(k, n, l);
    if (G.degree() != l)
      throw std::invalid_argument("level group of wrong degree");
    std::map<Tuple, int> &lab = labels[l];
    int next = 1; // 0 is reserved
    for (const Permutation &w : all_permutations(l)) {
      const Tuple word(k, std::vector<Symbol>(w.images().begin(), w.images().end()));
      if (lab.count(word))
        continue;
      for (const Permutation &g : G.elements())
        lab.emplace(act(word, g), next);
      ++next;
    }
    m = std::max(m, next);
  }
  m = std::max(m, 2);
  std::map<CSValue, int> values;
  for (const CSValue &v : enumerate_values(k, n)) {
    int value = 0;
    auto lv = labels.find(static_cast<int>(v.singles.size()));
    if (lv != labels.end()) {
      auto it = lv->second.find(v.singles);
      if (it != lv->second.end())
        value = it->second;
    }
    values.emplace(v, value);
  }
  return CSSpec(k, n, m, std::move(values));
}

std::vector<std::pair<std::string, PermGroup>> invariance_shapes(int k, int n) {
  std::vector<std::pair<std::string, PermGroup>> out;
  out.emplace_back("S_n", named_group(GroupName::symmetric, n));
  out.emplace_back("D_n", named_group(GroupName::dihedral, n));
  out.emplace_back("Z_n", named_group(GroupName::cyclic, n));
  out.emplace_back("<desc_n>", named_group(GroupName::desc_pair, n));
  out.emplace_back("{asc_n}", named_group(GroupName::trivial, n));
  for (int a = 1; a <= k - 1; ++a)
    for (int b = 1; a + b <= k - 1; ++b)
      if (a + b <= n)
        out.emplace_back("S_n^{" + std::to_string(a) + "," + std::to_string(b) + "}",
                         named_group(GroupName::stabilizer_ab, n, a, b));
  for (int c = 1; 2 * c <= k - 1; ++c)
    if (2 * c <= n)
      out.emplace_back("<S_n^{" + std::to_string(c) + "," + std::to_string(c) +
                           "}, desc_n>",
                       named_group(GroupName::stabilizer_cc_desc, n, c));
  return out;
}

} // namespace idminor
