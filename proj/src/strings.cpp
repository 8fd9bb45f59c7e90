#include "idminor/strings.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace idminor {

Tuple::Tuple(int k, std::vector<Symbol> entries)
    : k_(k), entries_(std::move(entries)) {
  if (k < 1)
    throw std::invalid_argument("alphabet size must be positive");
  for (Symbol x : entries_)
    if (x < 0 || x >= k)
      throw std::invalid_argument("symbol " + std::to_string(x + 1) +
                                  " outside alphabet of size " +
                                  std::to_string(k));
}

Multiset::Multiset(std::vector<int> counts) : counts_(std::move(counts)) {
  for (int c : counts_)
    if (c < 0)
      throw std::invalid_argument("negative multiplicity");
}

int Multiset::cardinality() const {
  int total = 0;
  for (int c : counts_)
    total += c;
  return total;
}

std::set<Symbol> Multiset::support() const {
  std::set<Symbol> s;
  for (int x = 0; x < alphabet(); ++x)
    if (counts_[x] > 0)
      s.insert(x);
  return s;
}

Multiset Multiset::joined(const Multiset &other) const {
  if (other.alphabet() != alphabet())
    throw std::invalid_argument("multiset join over different alphabets");
  std::vector<int> c = counts_;
  for (int x = 0; x < alphabet(); ++x)
    c[x] += other.counts_[x];
  return Multiset(std::move(c));
}

Multiset Multiset::with_added(Symbol x) const {
  std::vector<int> c = counts_;
  c.at(x) += 1;
  return Multiset(std::move(c));
}

void CSValue::validate() const {
  if (content.alphabet() != singles.alphabet())
    throw std::invalid_argument("cs value over mismatched alphabets");
  std::vector<int> seen(content.alphabet(), 0);
  for (Symbol x : singles) {
    if (seen[x]++)
      throw std::invalid_argument("repeated symbol in singles word");
    if (content.count(x) != 1)
      throw std::invalid_argument("singles word lists a non-singleton");
  }
  for (Symbol x = 0; x < content.alphabet(); ++x)
    if (content.count(x) == 1 && !seen[x])
      throw std::invalid_argument("singleton missing from singles word");
}

std::vector<Couple> couples(int n) {
  std::vector<Couple> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      out.push_back({i, j});
  return out;
}

Tuple compose_tuple(const Tuple &a, const IndexMap &tau) {
  std::vector<Symbol> out;
  out.reserve(tau.size());
  for (int t : tau) {
    if (t < 0 || static_cast<std::size_t>(t) >= a.size())
      throw std::out_of_range("malformed index map: image " +
                              std::to_string(t + 1) + " outside 1.." +
                              std::to_string(a.size()));
    out.push_back(a[t]);
  }
  return Tuple(a.alphabet(), std::move(out));
}

IndexMap delta_map(int n, Couple I) {
  if (n < 2 || I.lo < 0 || I.lo >= I.hi || I.hi >= n)
    throw std::invalid_argument("delta_I needs a 2-subset of 1.." +
                                std::to_string(n));
  IndexMap d(n);
  for (int i = 0; i < n; ++i) {
    if (i < I.hi)
      d[i] = i;
    else if (i == I.hi)
      d[i] = I.lo;
    else
      d[i] = i - 1;
  }
  return d;
}

Tuple apply_delta(const Tuple &a, Couple I) {
  const int n = static_cast<int>(a.size()) + 1;
  if (I.hi >= n)
    throw std::invalid_argument("couple does not fit arity " +
                                std::to_string(n));
  return compose_tuple(a, delta_map(n, I));
}

Multiset ms(const Tuple &a) {
  std::vector<int> c(a.alphabet(), 0);
  for (Symbol x : a)
    ++c[x];
  return Multiset(std::move(c));
}

std::vector<int> indexsingles(const Tuple &a) {
  const Multiset m = ms(a);
  std::vector<int> idx;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (m.count(a[i]) == 1)
      idx.push_back(static_cast<int>(i));
  return idx;
}

Tuple singles(const Tuple &a) { return compose_tuple(a, indexsingles(a)); }

CSValue cs(const Tuple &a) { return {ms(a), singles(a)}; }

Tuple ofo(const Tuple &a) {
  std::vector<bool> seen(a.alphabet(), false);
  std::vector<Symbol> out;
  for (Symbol x : a)
    if (!seen[x]) {
      seen[x] = true;
      out.push_back(x);
    }
  return Tuple(a.alphabet(), std::move(out));
}

std::set<Symbol> supp(const Tuple &a) { return {a.begin(), a.end()}; }

CSValue cs_shifted(int i, const Tuple &a) {
  if (i < 0 || static_cast<std::size_t>(i) >= a.size())
    throw std::out_of_range("cs_shifted index " + std::to_string(i + 1) +
                            " outside 1.." + std::to_string(a.size()));
  // a[i] occurs at least twice after identification, so it is never a
  // singleton; every other symbol keeps its multiplicity.
  std::vector<Symbol> word;
  for (Symbol x : singles(a))
    if (x != a[i])
      word.push_back(x);
  return {ms(a).with_added(a[i]), Tuple(a.alphabet(), std::move(word))};
}

Tuple ofo_canonical(const Tuple &a) {
  if (a.empty())
    throw std::invalid_argument("ofo_canonical of the empty tuple");
  const Tuple w = ofo(a);
  std::vector<Symbol> out(a.size() - w.size(), w[0]);
  out.insert(out.end(), w.begin(), w.end());
  return Tuple(a.alphabet(), std::move(out));
}

Tuple cs_canonical(const Tuple &a) {
  const Multiset m = ms(a);
  const Tuple s = singles(a);
  std::vector<Symbol> out(s.begin(), s.end());
  for (Symbol x = 0; x < a.alphabet(); ++x)
    if (m.count(x) >= 2)
      out.insert(out.end(), m.count(x), x);
  return Tuple(a.alphabet(), std::move(out));
}

namespace {

void require_length_two(const Tuple &a) {
  if (a.size() < 2)
    throw std::invalid_argument("relation defined for tuples of length >= 2");
}

Tuple erase_positions(const Tuple &a, std::size_t p, std::size_t q) {
  std::vector<Symbol> rest;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (i != p && i != q)
      rest.push_back(a[i]);
  return Tuple(a.alphabet(), std::move(rest));
}

} // namespace

std::set<Tuple> sim_neighbors(const Tuple &a) {
  require_length_two(a);
  const int n = static_cast<int>(a.size());
  std::set<Tuple> out;
  // a = u*delta_I has exactly one preimage u when a[lo] == a[hi]:
  // a with position hi removed.
  for (Couple I : couples(n)) {
    if (a[I.lo] != a[I.hi])
      continue;
    std::vector<Symbol> u;
    for (int p = 0; p < n; ++p)
      if (p != I.hi)
        u.push_back(a[p]);
    const Tuple pre(a.alphabet(), std::move(u));
    for (Couple J : couples(n))
      out.insert(apply_delta(pre, J));
  }
  return out;
}

std::set<Tuple> sim2_neighbors(const Tuple &a) {
  require_length_two(a);
  const std::size_t n = a.size();
  std::set<Tuple> out;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) {
      if (a[p] != a[q])
        continue;
      const Symbol alpha = a[p];
      const Tuple rest = erase_positions(a, p, q);
      for (std::size_t p2 = 0; p2 < n; ++p2)
        for (std::size_t q2 = p2 + 1; q2 < n; ++q2) {
          std::vector<Symbol> b;
          b.reserve(n);
          std::size_t r = 0;
          for (std::size_t i = 0; i < n; ++i)
            b.push_back(i == p2 || i == q2 ? alpha : rest[r++]);
          out.insert(Tuple(a.alphabet(), std::move(b)));
        }
    }
  return out;
}

namespace {

std::set<Tuple> neighbors(const Tuple &a, Relation relation) {
  return relation == Relation::sim ? sim_neighbors(a) : sim2_neighbors(a);
}

} // namespace

bool closure_equal(const Tuple &a, const Tuple &b, Relation relation) {
  if (a.size() != b.size())
    throw std::invalid_argument("closure_equal on tuples of different length");
  if (a == b)
    return true;
  std::set<Tuple> seen{a};
  std::deque<Tuple> queue{a};
  while (!queue.empty()) {
    const Tuple cur = queue.front();
    queue.pop_front();
    for (const Tuple &next : neighbors(cur, relation)) {
      if (next == b)
        return true;
      if (seen.insert(next).second)
        queue.push_back(next);
    }
  }
  return false;
}

std::vector<int> closure_classes(int k, int n, Relation relation) {
  const std::vector<Tuple> space = all_tuples(k, n);
  std::vector<int> label(space.size(), -1);
  int next_label = 0;
  for (std::size_t start = 0; start < space.size(); ++start) {
    if (label[start] >= 0)
      continue;
    label[start] = next_label;
    std::deque<Tuple> queue{space[start]};
    while (!queue.empty()) {
      const Tuple cur = queue.front();
      queue.pop_front();
      for (const Tuple &next : neighbors(cur, relation)) {
        int &l = label[tuple_index(next)];
        if (l < 0) {
          l = next_label;
          queue.push_back(next);
        }
      }
    }
    ++next_label;
  }
  return label;
}

std::vector<Tuple> all_tuples(int k, int n) {
  std::size_t total = 1;
  for (int i = 0; i < n; ++i)
    total *= static_cast<std::size_t>(k);
  std::vector<Tuple> out;
  out.reserve(total);
  for (std::size_t idx = 0; idx < total; ++idx)
    out.push_back(tuple_at(k, n, idx));
  return out;
}

std::size_t tuple_index(const Tuple &a) {
  std::size_t idx = 0;
  for (Symbol x : a)
    idx = idx * static_cast<std::size_t>(a.alphabet()) +
          static_cast<std::size_t>(x);
  return idx;
}

Tuple tuple_at(int k, int n, std::size_t index) {
  std::vector<Symbol> e(n);
  for (int i = n - 1; i >= 0; --i) {
    e[i] = static_cast<Symbol>(index % static_cast<std::size_t>(k));
    index /= static_cast<std::size_t>(k);
  }
  return Tuple(k, std::move(e));
}

Tuple parse_tuple(std::string_view text, int k) {
  std::vector<Symbol> e;
  const bool letters =
      std::any_of(text.begin(), text.end(),
                  [](char c) { return std::isalpha(static_cast<unsigned char>(c)); });
  if (letters) {
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c)))
        continue;
      if (!std::islower(static_cast<unsigned char>(c)))
        throw std::invalid_argument(std::string("bad letter '") + c + "'");
      e.push_back(c - 'a');
    }
  } else {
    std::istringstream in{std::string(text)};
    long v = 0;
    while (in >> v) {
      if (v < 1)
        throw std::invalid_argument("symbols are numbered from 1");
      e.push_back(static_cast<Symbol>(v - 1));
    }
    if (!in.eof())
      throw std::invalid_argument("malformed tuple '" + std::string(text) + "'");
  }
  if (k <= 0) {
    k = letters ? 26 : 1;
    for (Symbol x : e)
      k = std::max(k, x + 1);
  }
  return Tuple(k, std::move(e));
}

std::string format_tuple(const Tuple &a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i)
      out += ' ';
    out += std::to_string(a[i] + 1);
  }
  return out;
}

std::string format_multiset(const Multiset &m) {
  std::string out = "<";
  bool first = true;
  for (Symbol x = 0; x < m.alphabet(); ++x) {
    if (m.count(x) == 0)
      continue;
    if (!first)
      out += ", ";
    first = false;
    out += std::to_string(x + 1);
    if (m.count(x) > 1)
      out += '^' + std::to_string(m.count(x));
  }
  return out + ">";
}

std::string format_cs(const CSValue &v) {
  return "(" + format_multiset(v.content) + ", [" + format_tuple(v.singles) +
         "])";
}

} // namespace idminor
