#include "idminor/patterns.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace idminor {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || hit[x])
      throw std::invalid_argument("not a permutation word");
    hit[x] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 0);
  return Permutation(std::move(w));
}

Permutation Permutation::descending(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i)
    w[i] = n - 1 - i;
  return Permutation(std::move(w));
}

Permutation Permutation::natural_cycle(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i)
    w[i] = (i + 1) % n;
  return Permutation(std::move(w));
}

Permutation Permutation::from_word(std::span<const int> word) {
  std::vector<int> w;
  w.reserve(word.size());
  for (int x : word)
    w.push_back(x - 1);
  return Permutation(std::move(w));
}

std::vector<int> Permutation::word() const {
  std::vector<int> w;
  w.reserve(images_.size());
  for (int x : images_)
    w.push_back(x + 1);
  return w;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[images_[i]] = static_cast<int>(i);
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i))
      return false;
  return true;
}

Permutation operator*(const Permutation &a, const Permutation &b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("composing permutations of different degree");
  std::vector<int> out(b.images_.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = a.images_[b.images_[i]];
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

namespace {

// Closure of S together with the identity under composition.
PermSet closure(int n, const PermSet &S) {
  PermSet elements{Permutation::identity(n)};
  std::deque<Permutation> queue{Permutation::identity(n)};
  while (!queue.empty()) {
    const Permutation x = queue.front();
    queue.pop_front();
    for (const Permutation &s : S) {
      Permutation y = x * s;
      if (elements.insert(y).second)
        queue.push_back(std::move(y));
    }
  }
  return elements;
}

} // namespace

PermGroup::PermGroup(int degree, PermSet elements)
    : degree_(degree), elements_(std::move(elements)) {
  if (!contains(Permutation::identity(degree)))
    throw std::invalid_argument("group lacks the identity");
  for (const Permutation &x : elements_)
    if (x.degree() != degree)
      throw std::invalid_argument("group element of wrong degree");
  // Grow a generating set greedily; the set is a group iff every
  // intermediate closure stays inside it and the last one exhausts it.
  PermSet gens;
  PermSet span{Permutation::identity(degree)};
  for (const Permutation &x : elements_) {
    if (span.count(x))
      continue;
    gens.insert(x);
    span = closure(degree, gens);
    if (!std::includes(elements_.begin(), elements_.end(), span.begin(),
                       span.end()))
      throw std::invalid_argument("element set not closed under composition");
  }
}

PermGroup PermGroup::trivial(int degree) {
  return PermGroup(degree, {Permutation::identity(degree)});
}

PermGroup PermGroup::symmetric(int degree) {
  const auto all = all_permutations(degree);
  return PermGroup(degree, PermSet(all.begin(), all.end()));
}

PermGroup PermGroup::intersect(const PermGroup &other) const {
  if (other.degree_ != degree_)
    throw std::invalid_argument("intersecting groups of different degree");
  PermSet common;
  std::set_intersection(elements_.begin(), elements_.end(),
                        other.elements_.begin(), other.elements_.end(),
                        std::inserter(common, common.end()));
  return PermGroup(degree_, std::move(common));
}

bool PermGroup::is_subgroup_of(const PermGroup &other) const {
  return degree_ == other.degree_ &&
         std::includes(other.elements_.begin(), other.elements_.end(),
                       elements_.begin(), elements_.end());
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n)
    return out;
  std::vector<int> s(k);
  std::iota(s.begin(), s.end(), 0);
  while (true) {
    out.push_back(s);
    int i = k - 1;
    while (i >= 0 && s[i] == n - k + i)
      --i;
    if (i < 0)
      break;
    ++s[i];
    for (int j = i + 1; j < k; ++j)
      s[j] = s[j - 1] + 1;
  }
  return out;
}

Permutation red(std::span<const int> u) {
  std::vector<int> order(u.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return u[x] < u[y]; });
  std::vector<int> w(u.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    if (rank > 0 && u[order[rank]] == u[order[rank - 1]])
      throw std::invalid_argument("red: repeated entries");
    w[order[rank]] = static_cast<int>(rank);
  }
  return Permutation(std::move(w));
}

namespace {

void check_subset(std::span<const int> S, int n) {
  if (S.empty())
    throw std::invalid_argument("pattern of an empty position set");
  for (std::size_t i = 0; i < S.size(); ++i)
    if (S[i] < 0 || S[i] >= n || (i > 0 && S[i - 1] >= S[i]))
      throw std::invalid_argument("positions must be sorted and distinct");
}

} // namespace

Permutation pattern_at(const Permutation &sigma, std::span<const int> S) {
  check_subset(S, sigma.degree());
  // sigma(S) sorted gives h_{sigma(S)}; invert it by rank lookup.
  std::vector<int> image;
  for (int s : S)
    image.push_back(sigma(s));
  std::vector<int> sorted_image = image;
  std::sort(sorted_image.begin(), sorted_image.end());
  std::vector<int> w;
  w.reserve(S.size());
  for (std::size_t i = 0; i < S.size(); ++i) {
    const int y = sigma(S[i]); // sigma|_S o h_S
    w.push_back(static_cast<int>(
        std::lower_bound(sorted_image.begin(), sorted_image.end(), y) -
        sorted_image.begin()));
  }
  return Permutation(std::move(w));
}

Permutation pattern_by_reduction(const Permutation &sigma,
                                 std::span<const int> S) {
  check_subset(S, sigma.degree());
  std::vector<int> sub;
  for (int s : S)
    sub.push_back(sigma(s));
  return red(sub);
}

PermSet patterns(const Permutation &sigma, int l) {
  if (l < 1 || l > sigma.degree())
    throw std::out_of_range("pattern length " + std::to_string(l) +
                            " outside 1.." + std::to_string(sigma.degree()));
  PermSet out;
  for (const auto &S : subsets_of_size(sigma.degree(), l))
    out.insert(pattern_at(sigma, S));
  return out;
}

PermSet patterns_of_set(const PermSet &T, int l) {
  PermSet out;
  for (const Permutation &t : T) {
    PermSet p = patterns(t, l);
    out.insert(p.begin(), p.end());
  }
  return out;
}

PermSet comp(int n, const PermSet &S, int l) {
  for (const Permutation &s : S)
    if (s.degree() != l)
      throw std::invalid_argument("comp: members of mixed degree");
  if (l < 1 || l > n)
    throw std::out_of_range("comp: pattern degree outside 1..n");
  const auto subsets = subsets_of_size(n, l);
  PermSet out;
  for (const Permutation &pi : all_permutations(n)) {
    bool ok = true;
    for (const auto &Sub : subsets)
      if (!S.count(pattern_at(pi, Sub))) {
        ok = false;
        break;
      }
    if (ok)
      out.insert(pi);
  }
  return out;
}

PermGroup comp(int n, const PermGroup &G) {
  if (G.degree() == 0)
    return PermGroup::symmetric(n);
  return PermGroup(n, comp(n, G.elements(), G.degree()));
}

PermGroup generate(const PermSet &S) {
  if (S.empty())
    throw std::invalid_argument("generate: empty generating set");
  const int n = S.begin()->degree();
  for (const Permutation &s : S)
    if (s.degree() != n)
      throw std::invalid_argument("generate: mixed degrees");
  return PermGroup(n, closure(n, S));
}

PermSet differences(const PermSet &S) {
  if (S.empty())
    throw std::invalid_argument("differences of an empty set");
  PermSet out;
  for (const Permutation &x : S) {
    const Permutation xi = x.inverse();
    for (const Permutation &y : S)
      out.insert(xi * y);
  }
  return out;
}

EqualizingReport is_l_equalizing(const Permutation &sigma, int l) {
  const PermSet P = patterns(sigma, l);
  const PermGroup D = generate(differences(P));
  const PermGroup G = generate(P);
  EqualizingReport r;
  r.l = l;
  r.pattern_count = P.size();
  r.generated_order = D.order();
  r.groups_equal = D == G;
  r.meets_patterns = std::any_of(P.begin(), P.end(),
                                 [&](const Permutation &p) { return D.contains(p); });
  r.contains_patterns = std::all_of(P.begin(), P.end(),
                                    [&](const Permutation &p) { return D.contains(p); });
  r.equalizing = r.meets_patterns;
  return r;
}

EqualizingClassification classify_equalizing(const Permutation &sigma) {
  EqualizingClassification c;
  for (int l = 1; l <= sigma.degree(); ++l) {
    c.levels.push_back(is_l_equalizing(sigma, l));
    c.equalizing = c.equalizing && c.levels.back().equalizing;
  }
  return c;
}

Permutation direct_sum(const Permutation &pi, const Permutation &tau) {
  std::vector<int> w(pi.images().begin(), pi.images().end());
  for (int x : tau.images())
    w.push_back(pi.degree() + x);
  return Permutation(std::move(w));
}

Permutation skew_sum(const Permutation &pi, const Permutation &tau) {
  std::vector<int> w;
  for (int x : pi.images())
    w.push_back(tau.degree() + x);
  w.insert(w.end(), tau.images().begin(), tau.images().end());
  return Permutation(std::move(w));
}

GroupName parse_group_name(std::string_view name) {
  if (name == "symmetric") return GroupName::symmetric;
  if (name == "trivial") return GroupName::trivial;
  if (name == "desc_pair") return GroupName::desc_pair;
  if (name == "cyclic") return GroupName::cyclic;
  if (name == "dihedral") return GroupName::dihedral;
  if (name == "stabilizer_ab") return GroupName::stabilizer_ab;
  if (name == "stabilizer_cc_desc") return GroupName::stabilizer_cc_desc;
  throw std::invalid_argument("unknown group name '" + std::string(name) + "'");
}

namespace {

// S_n^{a,b}: permutes {1..a} and {n-b+1..n} among themselves, fixes the rest.
PermSet block_stabilizer(int n, int a, int b) {
  PermSet out;
  for (const Permutation &p : all_permutations(n)) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      const int x = p(i);
      if (i < a)
        ok = x < a;
      else if (i >= n - b)
        ok = x >= n - b;
      else
        ok = x == i;
    }
    if (ok)
      out.insert(p);
  }
  return out;
}

} // namespace

PermGroup named_group(GroupName name, int n, int a, int b) {
  if (n < 0)
    throw std::invalid_argument("negative degree");
  switch (name) {
  case GroupName::symmetric:
    return PermGroup::symmetric(n);
  case GroupName::trivial:
    return PermGroup::trivial(n);
  case GroupName::desc_pair:
    return generate({Permutation::descending(n)});
  case GroupName::cyclic:
    return generate({Permutation::natural_cycle(n)});
  case GroupName::dihedral:
    return generate({Permutation::natural_cycle(n), Permutation::descending(n)});
  case GroupName::stabilizer_ab:
    if (a < 0 || b < 0 || a + b > n)
      throw std::invalid_argument("stabilizer needs a, b >= 0 with a + b <= n");
    return PermGroup(n, block_stabilizer(n, a, b));
  case GroupName::stabilizer_cc_desc: {
    if (a < 0 || 2 * a > n)
      throw std::invalid_argument("stabilizer needs c >= 0 with 2c <= n");
    PermSet gens = block_stabilizer(n, a, a);
    gens.insert(Permutation::descending(n));
    return generate(gens);
  }
  }
  throw std::invalid_argument("unknown group name");
}

bool is_2set_transitive_group(const PermGroup &G) {
  const int n = G.degree();
  if (n < 2)
    return true;
  // Transitivity on 2-subsets is equivalent to a single orbit containing
  // {0, 1}.
  std::set<std::pair<int, int>> orbit;
  for (const Permutation &p : G.elements()) {
    int x = p(0), y = p(1);
    orbit.insert({std::min(x, y), std::max(x, y)});
  }
  return orbit.size() == static_cast<std::size_t>(n * (n - 1) / 2);
}

bool is_transitive_group(const PermGroup &G) {
  if (G.degree() <= 1)
    return true;
  std::set<int> orbit;
  for (const Permutation &p : G.elements())
    orbit.insert(p(0));
  return orbit.size() == static_cast<std::size_t>(G.degree());
}

bool is_primitive_group(const PermGroup &G) {
  const int n = G.degree();
  if (!is_transitive_group(G))
    return false;
  // A transitive group is imprimitive iff some block {0, x}-generated
  // block is proper: compute the smallest block containing 0 and x.
  for (int x = 1; x < n; ++x) {
    // Union-find closure of the relation generated by g{0,x}.
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[v] != v)
        v = parent[v] = parent[parent[v]];
      return v;
    };
    bool changed = true;
    auto unite = [&](int u, int v) {
      u = find(u);
      v = find(v);
      if (u != v) {
        parent[u] = v;
        changed = true;
      }
    };
    unite(0, x);
    while (changed) {
      changed = false;
      for (const Permutation &g : G.elements())
        for (int u = 0; u < n; ++u)
          for (int v = u + 1; v < n; ++v)
            if (find(u) == find(v))
              unite(g(u), g(v));
    }
    int block = 0;
    for (int v = 0; v < n; ++v)
      if (find(v) == find(0))
        ++block;
    if (block < n)
      return false;
  }
  return true;
}

std::vector<PermGroup> all_subgroups(int n) {
  if (n > 5)
    throw std::invalid_argument("subgroup enumeration limited to degree 5");
  std::set<PermSet> found;
  std::vector<PermSet> cyclic;
  for (const Permutation &p : all_permutations(n)) {
    PermSet c = generate({p}).elements();
    if (found.insert(c).second)
      cyclic.push_back(c);
  }
  std::deque<PermSet> queue(found.begin(), found.end());
  while (!queue.empty()) {
    const PermSet H = queue.front();
    queue.pop_front();
    for (const PermSet &C : cyclic) {
      if (std::includes(H.begin(), H.end(), C.begin(), C.end()))
        continue;
      PermSet gens = H;
      gens.insert(C.begin(), C.end());
      PermSet J = generate(gens).elements();
      if (found.insert(J).second)
        queue.push_back(std::move(J));
    }
  }
  std::vector<PermGroup> out;
  for (const PermSet &s : found)
    out.emplace_back(n, s);
  std::sort(out.begin(), out.end(), [](const PermGroup &x, const PermGroup &y) {
    if (x.order() != y.order())
      return x.order() < y.order();
    return x.elements() < y.elements();
  });
  return out;
}

std::string format_permutation(const Permutation &p) {
  std::string out;
  for (int i = 0; i < p.degree(); ++i) {
    if (i)
      out += ' ';
    out += std::to_string(p(i) + 1);
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  std::string t(text);
  const auto first = t.find_first_not_of(" \t");
  const auto last = t.find_last_not_of(" \t\r\n");
  if (first == std::string::npos)
    return Permutation();
  t = t.substr(first, last - first + 1);
  std::vector<int> w;
  // A single token of several digits is read as a compact word, e.g. 4321.
  if (t.size() > 1 && std::all_of(t.begin(), t.end(), ::isdigit)) {
    for (char c : t)
      w.push_back(c - '0');
    return Permutation::from_word(w);
  }
  std::istringstream in(t);
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (used != tok.size() || used == 0)
      throw std::invalid_argument("malformed permutation entry '" + tok + "'");
    w.push_back(v);
  }
  return Permutation::from_word(w);
}

} // namespace idminor
