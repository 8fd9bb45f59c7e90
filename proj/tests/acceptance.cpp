// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure.  Every check is exact; each criterion also has a time budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "idminor/constructions.hpp"
#include "idminor/functions.hpp"
#include "idminor/patterns.hpp"
#include "idminor/strings.hpp"

using namespace idminor;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void require(bool cond, const std::string &what) {
    if (!cond && ok) {
      ok = false;
      note << "first failure: " << what << "; ";
    }
  }
};

using Check = std::function<void(Outcome &)>;

struct Criterion {
  int id;
  std::string title;
  double budget_s;
  Check run;
};

Permutation P(const char *text) { return parse_permutation(text); }
Tuple T(const char *text, int k = 0) { return parse_tuple(text, k); }

Tuple act(const Tuple &a, const Permutation &s) {
  return compose_tuple(a, IndexMap(s.images().begin(), s.images().end()));
}

std::vector<int> letter_counts(std::initializer_list<std::pair<char, int>> items) {
  std::vector<int> c(26, 0);
  for (auto [ch, n] : items)
    c[ch - 'a'] = n;
  return c;
}

std::vector<FiniteFunction> every_function(int k, int n, int m) {
  const std::size_t size = power(k, n);
  const std::size_t count = power(m, static_cast<int>(size));
  std::vector<FiniteFunction> out;
  out.reserve(count);
  for (std::size_t code = 0; code < count; ++code) {
    Table t(size);
    std::size_t c = code;
    for (std::size_t i = 0; i < size; ++i) {
      t[i] = static_cast<int>(c % m);
      c /= m;
    }
    out.emplace_back(k, n, m, std::move(t));
  }
  return out;
}

/// Every spec over the cs value space with values in [0, m).
std::vector<CSSpec> every_spec(int k, int n, int m) {
  const auto keys = enumerate_values(k, n);
  const std::size_t count = power(m, static_cast<int>(keys.size()));
  std::vector<CSSpec> out;
  for (std::size_t code = 0; code < count; ++code) {
    std::map<CSValue, int> values;
    std::size_t c = code;
    for (const CSValue &v : keys) {
      values.emplace(v, static_cast<int>(c % m));
      c /= m;
    }
    out.emplace_back(k, n, m, std::move(values));
  }
  return out;
}

// Functions with a unique identification minor collected by criteria 3-5.
std::vector<FiniteFunction> uim_functions;
// Invariance groups observed in criterion 9, keyed by arity.
std::map<int, std::vector<PermGroup>> observed_groups;

void worked_examples(Outcome &o) {
  const CSValue m = cs(T("mathematician"));
  o.require(m.content == Multiset(letter_counts({{'a', 3}, {'c', 1}, {'e', 1}, {'h', 1},
                                                 {'i', 2}, {'m', 2}, {'n', 1}, {'t', 2}})) &&
                m.singles == T("hecn"),
            "cs(mathematician)");
  const CSValue c = cs(T("circumlocution"));
  o.require(c.content == Multiset(letter_counts({{'c', 3}, {'i', 2}, {'l', 1}, {'m', 1},
                                                 {'o', 2}, {'n', 1}, {'r', 1}, {'t', 1},
                                                 {'u', 2}})) &&
                c.singles == T("rmltn"),
            "cs(circumlocution)");
  const Tuple amb = T("ambidextrously");
  o.require(cs(amb).content == Multiset(letter_counts(
                                   {{'a', 1}, {'b', 1}, {'d', 1}, {'e', 1}, {'i', 1},
                                    {'l', 1}, {'m', 1}, {'o', 1}, {'r', 1}, {'s', 1},
                                    {'t', 1}, {'u', 1}, {'x', 1}, {'y', 1}})) &&
                cs(amb).singles == amb,
            "cs(ambidextrously)");
  const CSValue u = cs(T("unprosperousness"));
  o.require(u.content == Multiset(letter_counts({{'e', 2}, {'n', 2}, {'o', 2}, {'p', 2},
                                                 {'r', 2}, {'s', 4}, {'u', 2}})) &&
                u.singles.empty(),
            "cs(unprosperousness)");

  const Tuple a = T("1 2 2 3 4 5 5 5", 6);
  const Tuple b = T("1 2 3 2 4 5 2 6", 6);
  const Permutation sigma = P("5 4 2 3 8 6 1 7");
  o.require(act(a, sigma) == T("4 3 2 2 5 5 1 5", 6), "a sigma = 43225515");
  o.require(act(b, sigma) == T("4 2 2 3 6 5 1 2", 6), "b sigma = 42236512");
  o.require(singles(a) == T("1 3 4", 6), "singles(a) = 134");
  o.require(singles(b) == T("1 3 4 5 6", 6), "singles(b) = 13456");
  o.require(indexsingles(a) == std::vector<int>{0, 3, 4}, "indexsingles(a)");
  o.require(indexsingles(b) == std::vector<int>{0, 2, 4, 5, 7}, "indexsingles(b)");
  o.require(pattern_at(sigma, std::vector<int>{0, 1, 6}) == P("3 2 1"), "sigma_S = 321");
  o.require(pattern_at(sigma, std::vector<int>{0, 3, 4, 5, 6}) == P("3 2 5 4 1"),
            "sigma_T = 32541");
  o.require(red(std::vector<int>{5, 3, 8, 6, 1}) == P("3 2 5 4 1"), "red(53861)");
  o.note << "4 words, 1 worked example";
}

void closures(Outcome &o) {
  for (auto [k, n] : {std::pair{3, 4}, std::pair{2, 5}}) {
    o.require(closure_classes(k, n, Relation::sim) == fiber_partition(k, n, Invariant::ofo),
              "~ vs ofo at k=" + std::to_string(k));
    o.require(closure_classes(k, n, Relation::sim2) == fiber_partition(k, n, Invariant::cs),
              "~2 vs cs at k=" + std::to_string(k));
  }
  o.note << "81 + 32 tuples";
}

void cs_unique(Outcome &o) {
  std::mt19937 rng(20240301);
  int tested = 0;
  for (auto [k, n] : {std::pair{3, 4}, std::pair{2, 5}})
    for (int i = 0; i < 200; ++i) {
      const FiniteFunction f = build_cs_function(oracle::random_spec(k, n, 2, rng));
      const UimResult r = has_unique_identification_minor(f);
      bool witnesses_ok = r.unique;
      for (const auto &[I, rho] : r.witnesses)
        witnesses_ok = witnesses_ok &&
                       identification_minor(f, I) == permute_arguments(*r.h, rho);
      o.require(witnesses_ok, "UIM for a random cs function");
      uim_functions.push_back(f);
      ++tested;
    }
  o.note << tested << " random specs";
}

void cs_new_2(Outcome &o) {
  std::size_t total = 0;
  for (int n = 3; n <= 5; ++n) {
    const auto specs = every_spec(2, n, 2);
    o.require(specs.size() <= 256, "spec count bound");
    for (const CSSpec &s : specs) {
      const FiniteFunction f = build_cs_function(s);
      o.require(is_totally_symmetric(f), "total symmetry at n=" + std::to_string(n));
      uim_functions.push_back(f);
    }
    total += specs.size();
  }
  o.note << total << " specs (exhaustive)";
}

void cs_new(Outcome &o) {
  const FiniteFunction f = witness_new(3, 4);
  o.require(is_determined_by(f, Invariant::cs).has_value(), "cs-determined");
  o.require(invariance_group(f) == PermGroup::trivial(4), "trivial invariance group");
  int checked = 0;
  for (const Permutation &sigma : all_permutations(4)) {
    o.require(!is_determined_by(permute_arguments(f, sigma), Invariant::ofo),
              "f o sigma ofo-determined for sigma = " + format_permutation(sigma));
    ++checked;
  }
  o.require(!is_similar_to_determined_by(f, Invariant::ofo), "similar to ofo-determined");
  o.require(has_unique_identification_minor(f).unique, "UIM");
  uim_functions.push_back(f);
  o.note << checked << " permutations";
}

void characterizations(Outcome &o) {
  std::size_t count = 0;
  for (const FiniteFunction &f : every_function(2, 4, 2)) {
    o.require(characterize_ofo_by_minors(f) == is_determined_by(f, Invariant::ofo).has_value(),
              "ofo characterization at k=2");
    o.require(characterize_cs_by_minors(f) == is_determined_by(f, Invariant::cs).has_value(),
              "cs characterization at k=2");
    ++count;
  }
  std::mt19937 rng(4242);
  for (int i = 0; i < 500; ++i) {
    // Every fifth sample is cs-determined so both outcomes are exercised.
    const FiniteFunction f = i % 5 == 0
                                 ? build_cs_function(oracle::random_spec(3, 4, 2, rng))
                                 : oracle::random_function(3, 4, 2, rng);
    o.require(characterize_ofo_by_minors(f) == is_determined_by(f, Invariant::ofo).has_value(),
              "ofo characterization at k=3");
    o.require(characterize_cs_by_minors(f) == is_determined_by(f, Invariant::cs).has_value(),
              "cs characterization at k=3");
    ++count;
  }
  o.note << count << " functions (65536 exhaustive + 500 sampled)";
}

void class_inclusions(Outcome &o) {
  const FunctionSpace space(2, 4);
  std::map<std::set<ClassLabel>, std::size_t> profiles;
  for (const FiniteFunction &f : every_function(2, 4, 2))
    ++profiles[classify(f, space)];
  auto has = [](const std::set<ClassLabel> &s, ClassLabel l) { return s.count(l) > 0; };
  std::map<ClassLabel, std::size_t> sizes;
  for (const auto &[labels, count] : profiles) {
    for (ClassLabel l : labels)
      sizes[l] += count;
    const bool uim = has(labels, ClassLabel::UIM), ofo = has(labels, ClassLabel::OFO),
               cs = has(labels, ClassLabel::CS), st = has(labels, ClassLabel::TwoST),
               sym = has(labels, ClassLabel::SYMM), sup = has(labels, ClassLabel::SUPP);
    o.require(cs == sym, "CS = SYMM");
    o.require(!sym || st, "SYMM in 2ST");
    o.require(!sup || (ofo && cs && st), "SUPP in OFO, CS, 2ST");
    o.require((ofo && cs) == sup, "OFO and CS = SUPP");
    o.require((st && cs) == sym, "2ST and CS = SYMM");
    o.require((st && ofo) == sup, "2ST and OFO = SUPP");
    o.require(!(ofo || cs || st) || uim, "OFO, CS, 2ST in UIM");
  }
  o.note << "65536 functions; sizes";
  for (ClassLabel l : {ClassLabel::UIM, ClassLabel::OFO, ClassLabel::CS, ClassLabel::TwoST,
                       ClassLabel::SYMM, ClassLabel::SUPP})
    o.note << ' ' << to_string(l) << '=' << sizes[l];
}

void l_diff(Outcome &o) {
  std::size_t checked = 0;
  for (int n = 2; n <= 6; ++n) {
    std::vector<Permutation> diff2;
    for (const Permutation &s : all_permutations(n)) {
      if (!is_l_equalizing(s, 2).equalizing)
        diff2.push_back(s);
      ++checked;
    }
    o.require(diff2 == std::vector<Permutation>{Permutation::descending(n)},
              "2-differentiating set at n=" + std::to_string(n));
  }
  for (int n = 1; n <= 6; ++n) {
    std::vector<Permutation> eq;
    for (const Permutation &s : all_permutations(n))
      if (is_l_equalizing(s, n).equalizing)
        eq.push_back(s);
    o.require(eq == std::vector<Permutation>{Permutation::identity(n)},
              "n-equalizing set at n=" + std::to_string(n));
  }
  const int n = 5;
  std::size_t listed = 0;
  for (int l = 3; l <= 4; ++l) {
    for (int m = 0; m <= n - 1; ++m) {
      const Permutation s =
          direct_sum(Permutation::descending(m), Permutation::descending(n - m));
      o.require(!is_l_equalizing(s, l).equalizing, "desc sum " + format_permutation(s));
      ++listed;
    }
    for (int p = 1; p < l; ++p)
      for (const Permutation &pi : all_permutations(p))
        for (const Permutation &tau : all_permutations(l - p)) {
          const Permutation s = skew_sum(skew_sum(pi, Permutation::descending(n - l)), tau);
          o.require(!is_l_equalizing(s, l).equalizing, "skew family " + format_permutation(s));
          ++listed;
        }
  }
  o.note << checked << " permutations for (ii), " << listed << " listed for (iii)";
}

void symmetries(Outcome &o) {
  std::mt19937 rng(99);
  std::size_t nontrivial = 0;
  for (auto [n, count] : {std::pair{4, 100}, std::pair{5, 25}})
    for (int i = 0; i < count; ++i) {
      // Alternate uniform specs with specs carrying random level symmetries.
      const CSSpec s = i % 2 == 0 ? oracle::random_spec(3, n, 2, rng)
                                  : oracle::random_invariant_spec(3, n, 2, rng);
      const PermGroup levels = inv_from_levels(s);
      const PermGroup brute = invariance_group(build_cs_function(s));
      o.require(levels == brute, "inv_from_levels at n=" + std::to_string(n));
      observed_groups[n].push_back(brute);
      nontrivial += brute.order() > 1;
    }
  o.note << "125 specs, " << nontrivial << " with nontrivial group";
}

void invariance_list(Outcome &o) {
  std::map<std::string, std::size_t> seen;
  for (auto [n, groups] : observed_groups) {
    const auto shapes = invariance_shapes(3, n);
    for (const PermGroup &G : groups) {
      auto it = std::find_if(shapes.begin(), shapes.end(),
                             [&](const auto &s) { return s.second == G; });
      o.require(it != shapes.end(), "group of order " + std::to_string(G.order()) +
                                        " outside the list at n=" + std::to_string(n));
      if (it != shapes.end())
        ++seen[it->first + "@" + std::to_string(n)];
    }
  }
  o.note << "observed";
  for (const auto &[name, count] : seen)
    o.note << ' ' << name << 'x' << count;
}

void similar_pair(Outcome &o) {
  const Permutation sigma = P("4321");
  const SimilarPair p = witness_similar_pair(sigma, 2, 3, 4);
  bool transported = true;
  for (const Tuple &a : all_tuples(3, 4))
    transported = transported && p.g(a) == p.f(act(a, sigma));
  o.require(transported, "g = f o sigma over 81 tuples");
  o.require(p.f != p.g, "f != g");
  o.require(is_determined_by(p.f, Invariant::cs) && is_determined_by(p.g, Invariant::cs),
            "both cs-determined");

  const Permutation tau = P("2341");
  for (int l : z_levels(3, 4))
    o.require(l == 0 || is_l_equalizing(tau, l).equalizing,
              "2341 equalizing at l=" + std::to_string(l));
  std::mt19937 rng(7);
  int accepted = 0;
  long draws = 0;
  while (accepted < 200 && draws < 200000) {
    ++draws;
    const CSSpec fs = draws % 2 ? oracle::random_spec(3, 4, 2, rng)
                                : oracle::random_invariant_spec(3, 4, 2, rng);
    const FiniteFunction f = build_cs_function(fs);
    const FiniteFunction g = permute_arguments(f, tau);
    if (!is_determined_by(g, Invariant::cs))
      continue;
    ++accepted;
    o.require(f == g, "transported cs pair differs");
  }
  o.require(accepted == 200, "not enough cs-determined transports");
  o.note << "converse: " << accepted << " pairs from " << draws << " draws";
}

void galois(Outcome &o) {
  const auto subs = all_subgroups(3);
  o.require(subs.size() == 6, "six subgroups of S_3");
  for (const PermGroup &G : subs) {
    const PermSet C = comp(5, G.elements(), 3);
    bool closed = C.count(Permutation::identity(5)) > 0;
    for (const Permutation &a : C) {
      closed = closed && C.count(a.inverse());
      for (const Permutation &b : C)
        closed = closed && C.count(a * b);
    }
    o.require(closed, "comp(5, G) is a group, |G| = " + std::to_string(G.order()));
  }
  std::mt19937 rng(12);
  std::bernoulli_distribution coin(0.5);
  const auto s3 = all_permutations(3);
  for (int i = 0; i < 50; ++i) {
    PermSet S, U;
    for (const Permutation &p : s3) {
      if (coin(rng))
        S.insert(p);
      if (coin(rng))
        U.insert(p);
    }
    if (S.empty())
      S.insert(s3[i % 6]);
    U.insert(S.begin(), S.end());
    const PermSet CS = comp(5, S, 3);
    const PermSet CU = comp(5, U, 3);
    o.require(std::includes(CU.begin(), CU.end(), CS.begin(), CS.end()), "monotone");
    if (!CS.empty()) {
      const PermSet back = patterns_of_set(CS, 3);
      o.require(std::includes(S.begin(), S.end(), back.begin(), back.end()), "Pat o Comp");
    }
  }
  o.note << "6 subgroups, 50 subsets";
}

void once_sigma(Outcome &o) {
  const int n = 4;
  std::size_t cases = 0;
  for (const Permutation &sigma : all_permutations(n)) {
    const Permutation inv = sigma.inverse();
    for (const Tuple &a : all_tuples(3, n)) {
      std::vector<int> S;
      for (int i : indexsingles(a))
        S.push_back(inv(i));
      std::sort(S.begin(), S.end());
      const Tuple lhs = singles(act(a, sigma));
      const Tuple rhs = S.empty() ? singles(a) : act(singles(a), pattern_at(sigma, S));
      o.require(lhs == rhs, "once-sigma");
      ++cases;
    }
  }
  for (const Permutation &pi : all_permutations(n))
    for (const Permutation &tau : all_permutations(n))
      for (int l = 1; l <= n; ++l)
        for (const auto &S : subsets_of_size(n, l)) {
          std::vector<int> tS;
          for (int i : S)
            tS.push_back(tau(i));
          std::sort(tS.begin(), tS.end());
          o.require(pattern_at(pi * tau, S) == pattern_at(pi, tS) * pattern_at(tau, S),
                    "composition of patterns");
          ++cases;
        }
  o.note << cases << " cases";
}

void decks(Outcome &o) {
  for (const FiniteFunction &f : uim_functions) {
    const Deck d = deck(f);
    const int n = f.arity();
    o.require(d.size() == 1 && d.begin()->second == n * (n - 1) / 2, "single-key deck");
  }
  std::mt19937 rng(14);
  const auto perms = all_permutations(4);
  for (int i = 0; i < 100; ++i) {
    const FiniteFunction f = oracle::random_function(3, 4, 2, rng);
    const FiniteFunction g = permute_arguments(f, perms[(i * 7) % perms.size()]);
    o.require(deck(f) == deck(g), "similar functions have equal decks");
  }
  o.note << uim_functions.size() << " UIM functions, 100 similar pairs";
}

} // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "worked example replay", 1, worked_examples},
      {2, "closure classes equal ofo and cs fibers", 5, closures},
      {3, "cs-determined functions have a unique identification minor", 30, cs_unique},
      {4, "binary cs-determined functions are totally symmetric", 10, cs_new_2},
      {5, "the ternary witness is new", 5, cs_new},
      {6, "characterizations by identification minors", 60, characterizations},
      {7, "class inclusions at k=2, n=4", 120, class_inclusions},
      {8, "l-differentiating permutations", 60, l_diff},
      {9, "invariance group from level groups", 120, symmetries},
      {10, "observed invariance groups are listed shapes", 10, invariance_list},
      {11, "distinct similar cs-determined pairs", 30, similar_pair},
      {12, "comp of groups and the Galois connection", 10, galois},
      {13, "once-sigma and composition of patterns", 60, once_sigma},
      {14, "deck sanity", 30, decks},
  };
  int failures = 0;
  for (const Criterion &c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception &e) {
      o.ok = false;
      o.note << "exception: " << e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.budget_s;
    const bool pass = o.ok && in_time;
    failures += !pass;
    std::printf("%s criterion %2d: %s (%.2fs of %.0fs%s) %s\n", pass ? "PASS" : "FAIL", c.id,
                c.title.c_str(), secs, c.budget_s, in_time ? "" : ", over budget",
                o.note.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
