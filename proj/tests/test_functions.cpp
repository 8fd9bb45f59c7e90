#include <doctest.h>

#include <random>

#include "idminor/constructions.hpp"
#include "idminor/functions.hpp"
#include "oracles.hpp"

using namespace idminor;

namespace {

FiniteFunction majority() {
  return FiniteFunction::tabulate(2, 3, 2, [](const Tuple &a) {
    return (a[0] + a[1] + a[2]) >= 2 ? 1 : 0;
  });
}

FiniteFunction projection(int k, int n, int i) {
  return FiniteFunction::tabulate(k, n, k, [i](const Tuple &a) { return a[i]; });
}

FiniteFunction sum_mod(int k, int n) {
  return FiniteFunction::tabulate(k, n, k, [k](const Tuple &a) {
    int s = 0;
    for (Symbol x : a)
      s += x;
    return s % k;
  });
}

/// Every function A^n -> [0, m) in table order.
std::vector<FiniteFunction> all_functions(int k, int n, int m) {
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

Permutation P(const char *text) { return parse_permutation(text); }

} // namespace

TEST_SUITE("functions") {

TEST_CASE("construction and evaluation") {
  const FiniteFunction maj = majority();
  CHECK(maj.size() == 8);
  CHECK(maj(parse_tuple("1 2 2", 2)) == 1);
  CHECK(maj(parse_tuple("1 2 1", 2)) == 0);
  CHECK_THROWS(FiniteFunction(2, 2, 2, Table{0, 1, 0}));
  CHECK_THROWS(FiniteFunction(2, 2, 2, Table{0, 1, 0, 2}));
  CHECK_THROWS(FiniteFunction(0, 2, 2, Table{}));
}

TEST_CASE("minors") {
  std::mt19937 rng(1);
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      const FiniteFunction g = oracle::random_function(2, m, 3, rng);
      CHECK(minor(g, m, [&] {
              IndexMap id(m);
              std::iota(id.begin(), id.end(), 0);
              return id;
            }()) == g);
      for (const auto &tau : oracle::words(n, m)) {
        const FiniteFunction f = minor(g, n, IndexMap(tau.begin(), tau.end()));
        for (const auto &a : oracle::words(2, n))
          CHECK(oracle::eval(f, a) == oracle::eval(g, oracle::act(a, tau)));
      }
    }
  const FiniteFunction diag = minor(projection(2, 2, 1), 1, {0, 0});
  CHECK(diag.table() == Table{0, 1});
}

TEST_CASE("identification minors") {
  const FiniteFunction maj = majority();
  CHECK(identification_minor(maj, {0, 1}) == projection(2, 2, 0));
  CHECK(identification_minor(maj, {1, 2}) == projection(2, 2, 1));
  std::mt19937 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const FiniteFunction f = oracle::random_function(3, 4, 3, rng);
    for (Couple I : couples(4))
      CHECK(identification_minor(f, I) == oracle::id_minor(f, I.lo, I.hi));
  }
}

TEST_CASE("similarity") {
  const FiniteFunction p0 = projection(2, 2, 0);
  const FiniteFunction p1 = projection(2, 2, 1);
  CHECK(is_similar(p0, p0) == Permutation::identity(2));
  CHECK(is_similar(p0, p1) == P("21"));
  CHECK_FALSE(is_similar(p0, projection(2, 3, 0)).has_value());
  CHECK(is_similar(identification_minor(majority(), {0, 1}),
                   identification_minor(majority(), {1, 2})) == P("21"));
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const FiniteFunction f = oracle::random_function(2, 3, 2, rng);
    const FiniteFunction g = oracle::random_function(2, 3, 2, rng);
    const auto w = is_similar(f, g);
    CHECK(w.has_value() == oracle::similar(f, g));
    if (w)
      CHECK(permute_arguments(g, *w) == f);
    const Permutation s = all_permutations(3)[trial % 6];
    const auto back = is_similar(permute_arguments(f, s), f);
    REQUIRE(back.has_value());
    CHECK(permute_arguments(f, *back) == permute_arguments(f, s));
  }
}

TEST_CASE("unique identification minor") {
  const UimResult maj = has_unique_identification_minor(majority());
  CHECK(maj.unique);
  CHECK_FALSE(maj.degenerate);
  REQUIRE(maj.witnesses.size() == 3);
  for (const auto &[I, rho] : maj.witnesses)
    CHECK(identification_minor(majority(), I) == permute_arguments(*maj.h, rho));
  CHECK(maj.witnesses[0].second == P("21"));

  CHECK(has_unique_identification_minor(projection(2, 3, 0)).unique);
  const UimResult two = has_unique_identification_minor(projection(3, 2, 1));
  CHECK(two.unique);
  CHECK(two.degenerate);
  CHECK_THROWS(has_unique_identification_minor(projection(2, 1, 0)));

  std::mt19937 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const FiniteFunction f = oracle::random_function(2, 3, 2, rng);
    CHECK(has_unique_identification_minor(f).unique == oracle::uim(f));
  }
  for (int trial = 0; trial < 10; ++trial) {
    const FiniteFunction f = build_cs_function(oracle::random_spec(3, 4, 2, rng));
    CHECK(has_unique_identification_minor(f).unique);
  }
}

TEST_CASE("invariance groups") {
  CHECK(invariance_group(sum_mod(3, 4)) == PermGroup::symmetric(4));
  CHECK(invariance_group(witness_new(3, 4)) == PermGroup::trivial(4));
  std::mt19937 rng(5);
  const FunctionSpace space(2, 4);
  for (int trial = 0; trial < 40; ++trial) {
    FiniteFunction f = oracle::random_function(2, 4, 2, rng);
    if (trial % 2)
      f = build_cs_function(oracle::random_structured_spec(2, 4, 2, rng));
    const PermGroup g = invariance_group(f, space);
    CHECK(oracle::words_of(g) == oracle::invariance(f));
    CHECK(g.contains(Permutation::identity(4)));
  }
}

TEST_CASE("symmetry and 2-set transitivity") {
  CHECK(is_totally_symmetric(sum_mod(2, 3)));
  CHECK(is_2set_transitive(sum_mod(2, 3)));
  CHECK_FALSE(is_totally_symmetric(witness_new(3, 4)));
  CHECK_FALSE(is_2set_transitive(witness_new(3, 4)));
  std::mt19937 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const FiniteFunction f = oracle::random_function(2, 3, 2, rng);
    const bool symm = oracle::invariance(f).size() == 6;
    CHECK(is_totally_symmetric(f) == symm);
    if (symm)
      CHECK(is_2set_transitive(f));
  }
}

TEST_CASE("determined by") {
  const FiniteFunction maj = majority();
  CHECK(is_determined_by(maj, Invariant::ms).has_value());
  CHECK(is_determined_by(maj, Invariant::cs).has_value());
  CHECK_FALSE(is_determined_by(maj, Invariant::ofo).has_value());
  for (const FiniteFunction &f : all_functions(2, 3, 2)) {
    CHECK(is_determined_by(f, Invariant::ms).has_value() == is_totally_symmetric(f));
    CHECK(is_determined_by(f, Invariant::ofo).has_value() ==
          oracle::constant_on_fibers(f, oracle::first_occurrences));
    CHECK(is_determined_by(f, Invariant::cs).has_value() ==
          oracle::constant_on_fibers(f, oracle::cs));
    CHECK(is_determined_by(f, Invariant::supp).has_value() ==
          oracle::constant_on_fibers(f, [](const oracle::Word &w) {
            return std::set<int>(w.begin(), w.end());
          }));
    if (is_determined_by(f, Invariant::ms))
      CHECK(is_determined_by(f, Invariant::cs));
    if (is_determined_by(f, Invariant::supp))
      CHECK(is_determined_by(f, Invariant::ofo));
    CHECK(characterize_ofo_by_minors(f) ==
          is_determined_by(f, Invariant::ofo).has_value());
    CHECK(characterize_cs_by_minors(f) ==
          is_determined_by(f, Invariant::cs).has_value());
  }
  const auto spec = is_determined_by(maj, Invariant::ms);
  REQUIRE(spec);
  CHECK(spec->size() == 4);
  CHECK(spec->at(parse_tuple("1 2 2", 2)) == 1);
  CHECK(fiber_key(Invariant::cs, parse_tuple("1 2 2 3 4 5 5 5", 5)) ==
        parse_tuple("1 3 4 2 2 5 5 5", 5));
  CHECK(fiber_key(Invariant::supp, parse_tuple("3 1 3", 3)) == parse_tuple("1 3", 3));
}

TEST_CASE("fiber partitions match the naive keys") {
  for (auto [k, n] : {std::pair{2, 4}, std::pair{3, 4}, std::pair{3, 3}}) {
    CHECK(oracle::as_partition(fiber_partition(k, n, Invariant::ofo)) ==
          oracle::partition_by(k, n, oracle::first_occurrences));
    CHECK(oracle::as_partition(fiber_partition(k, n, Invariant::cs)) ==
          oracle::partition_by(k, n, oracle::cs));
    CHECK(oracle::as_partition(fiber_partition(k, n, Invariant::ms)) ==
          oracle::partition_by(k, n, oracle::content));
    const FunctionSpace space(k, n);
    CHECK(space.partition(Invariant::cs) == fiber_partition(k, n, Invariant::cs));
  }
}

TEST_CASE("similar to determined by") {
  CHECK_FALSE(is_similar_to_determined_by(witness_new(3, 4), Invariant::ofo));
  const FiniteFunction f = witness_new(3, 4);
  const auto w = is_similar_to_determined_by(f, Invariant::cs);
  REQUIRE(w);
  CHECK(w->sigma.is_identity());

  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const FiniteFunction g = build_cs_function(oracle::random_spec(3, 4, 2, rng));
    const FiniteFunction r = reverse(g);
    CHECK(is_determined_by(r, Invariant::cs));
    const auto rw = is_similar_to_determined_by(r, Invariant::cs);
    REQUIRE(rw);
    CHECK(is_determined_by(permute_arguments(r, rw->sigma), Invariant::cs));
    const FiniteFunction s = permute_arguments(g, all_permutations(4)[trial + 1]);
    const auto sw = is_similar_to_determined_by(s, Invariant::cs);
    REQUIRE(sw);
    CHECK(is_determined_by(permute_arguments(s, sw->sigma), Invariant::cs));
  }
}

TEST_CASE("characterizations by minors") {
  CHECK(characterize_ofo_by_minors(projection(2, 3, 0)));
  CHECK_FALSE(characterize_ofo_by_minors(majority()));
  CHECK(characterize_cs_by_minors(witness_new(3, 4)));
  CHECK(zeta(4, 1) == P("1 3 4 2"));
  std::mt19937 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    CHECK(characterize_cs_by_minors(build_cs_function(oracle::random_spec(3, 4, 2, rng))));
    const FiniteFunction f = oracle::random_function(3, 4, 2, rng);
    CHECK(characterize_cs_by_minors(f) == is_determined_by(f, Invariant::cs).has_value());
    CHECK(characterize_ofo_by_minors(f) == is_determined_by(f, Invariant::ofo).has_value());
  }
}

TEST_CASE("restriction to tuples with a repeat") {
  const NeqRestriction s = restrict_neq_tests(sum_mod(2, 4));
  CHECK(s.totally_symmetric_on_neq);
  CHECK(s.two_set_transitive_on_neq);
  std::mt19937 rng(9);
  const FunctionSpace space(2, 4);
  for (int trial = 0; trial < 50; ++trial) {
    // n > k: every tuple has a repeat, so the restricted tests are the plain ones.
    const FiniteFunction f = oracle::random_function(2, 4, 2, rng);
    const NeqRestriction r = restrict_neq_tests(f);
    CHECK(r.totally_symmetric_on_neq == is_totally_symmetric(f));
    CHECK(r.two_set_transitive_on_neq == is_2set_transitive(f));
    CHECK(r.supp_determined_on_neq == is_determined_by(f, Invariant::supp).has_value());
  }
  // n <= k: a function symmetric on repeats only.
  const FiniteFunction g = FiniteFunction::tabulate(3, 3, 2, [](const Tuple &a) {
    if (!oracle::has_repeat(oracle::word_of(a)))
      return a[0] == 0 ? 1 : 0;
    return 0;
  });
  CHECK_FALSE(is_totally_symmetric(g));
  CHECK(restrict_neq_tests(g).totally_symmetric_on_neq);
  CHECK(restrict_neq_tests(g).supp_determined_on_neq);
}

TEST_CASE("classification labels") {
  const auto sum = classify(sum_mod(2, 4));
  for (ClassLabel l : {ClassLabel::UIM, ClassLabel::TwoST, ClassLabel::SYMM, ClassLabel::CS})
    CHECK(sum.count(l));
  CHECK(sum.count(ClassLabel::SUPP) ==
        static_cast<std::size_t>(is_determined_by(sum_mod(2, 4), Invariant::supp).has_value()));
  CHECK(classify(witness_new(3, 4)) == std::set<ClassLabel>{ClassLabel::UIM, ClassLabel::CS});
  CHECK(to_string(ClassLabel::TwoST) == "2ST");
}

TEST_CASE("reverse") {
  std::mt19937 rng(10);
  for (int trial = 0; trial < 30; ++trial) {
    const FiniteFunction f = oracle::random_function(3, 3, 3, rng);
    CHECK(reverse(reverse(f)) == f);
    CHECK(reverse(f) == permute_arguments(f, Permutation::descending(3)));
  }
  CHECK(reverse(sum_mod(3, 3)) == sum_mod(3, 3));
  for (const FiniteFunction &f : all_functions(2, 3, 2))
    if (is_determined_by(f, Invariant::cs))
      CHECK(is_determined_by(reverse(f), Invariant::cs));
}

TEST_CASE("canonical tables") {
  CHECK(canonical_table(sum_mod(2, 3)) == sum_mod(2, 3).table());
  CHECK(canonical_table(projection(2, 2, 0)) == canonical_table(projection(2, 2, 1)));
  std::mt19937 rng(12);
  std::vector<FiniteFunction> fs;
  for (int i = 0; i < 200; ++i) {
    // Small codomain and some symmetric seeds so that similar pairs occur.
    FiniteFunction f = oracle::random_function(2, 4, 2, rng);
    if (i % 3 == 0 && !fs.empty())
      f = permute_arguments(fs[i / 2], all_permutations(4)[i % 24]);
    fs.push_back(f);
  }
  int similar_pairs = 0;
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = i; j < fs.size(); ++j) {
      const bool same = canonical_table(fs[i]) == canonical_table(fs[j]);
      CHECK(same == is_similar(fs[i], fs[j]).has_value());
      similar_pairs += same;
    }
  CHECK(similar_pairs > 200);
}

TEST_CASE("decks") {
  const Deck d = deck(majority());
  REQUIRE(d.size() == 1);
  CHECK(d.begin()->second == 3);
  CHECK_THROWS(deck(projection(2, 2, 0)));
  std::mt19937 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const FiniteFunction f = oracle::random_function(2, 4, 3, rng);
    const FiniteFunction g = permute_arguments(f, all_permutations(4)[trial]);
    CHECK(deck(f) == deck(g));
    int total = 0;
    for (const auto &[key, count] : deck(f))
      total += count;
    CHECK(total == 6);
  }
}

} // TEST_SUITE
