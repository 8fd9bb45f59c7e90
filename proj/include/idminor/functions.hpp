#ifndef IDMINOR_FUNCTIONS_HPP
#define IDMINOR_FUNCTIONS_HPP

// Finite functions f : A^n -> B as dense value tables.
//
// The table is indexed by tuples in lexicographic order with the first
// argument most significant; values are stored 0-based in [0, m).  The
// minor of g through tau is f(a) = g(a*tau); permuting arguments by sigma
// gives f o sigma^, i.e. a |-> f(a*sigma).

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "idminor/patterns.hpp"
#include "idminor/strings.hpp"

namespace idminor {

using Table = std::vector<int>;

class FiniteFunction {
public:
  FiniteFunction() = default;
  /// Throws std::invalid_argument on a malformed shape or value.
  FiniteFunction(int k, int n, int m, Table table);

  /// Tabulates an evaluator over A^n.
  template <typename F>
  static FiniteFunction tabulate(int k, int n, int m, F &&eval) {
    Table t;
    const auto space = all_tuples(k, n);
    t.reserve(space.size());
    for (const Tuple &a : space)
      t.push_back(eval(a));
    return FiniteFunction(k, n, m, std::move(t));
  }

  int alphabet() const { return k_; }
  int arity() const { return n_; }
  int codomain() const { return m_; }
  const Table &table() const { return table_; }
  std::size_t size() const { return table_.size(); }

  int operator()(const Tuple &a) const { return table_[tuple_index(a)]; }
  int at(std::size_t index) const { return table_[index]; }

  friend bool operator==(const FiniteFunction &,
                         const FiniteFunction &) = default;

private:
  int k_ = 1;
  int n_ = 1;
  int m_ = 1;
  Table table_{0};
};

enum class Invariant { supp, ofo, ms, cs };

std::size_t power(int base, int exponent);

/// Precomputed digits, permutations and fiber partitions for A^n.  Sweeps
/// over many functions of one shape reuse a single instance.
class FunctionSpace {
public:
  FunctionSpace(int k, int n);

  int alphabet() const { return k_; }
  int arity() const { return n_; }
  std::size_t size() const { return size_; }
  const std::vector<Permutation> &permutations() const { return perms_; }
  const std::vector<int> &partition(Invariant phi) const;
  /// Index of a*sigma where a is the tuple at index.
  std::size_t permuted_index(std::size_t index, const Permutation &sigma) const;
  /// Whether index holds a tuple with a repeated entry.
  bool has_repeat(std::size_t index) const { return repeat_[index]; }

private:
  int k_;
  int n_;
  std::size_t size_;
  std::vector<std::size_t> weight_; // k^(n-1-i)
  std::vector<int> digits_;         // size_ x n_
  std::vector<bool> repeat_;
  std::vector<Permutation> perms_;
  std::vector<std::vector<int>> partitions_; // indexed by Invariant
};

/// For each index of a in A^n, the index of a*tau in A^m.
std::vector<std::uint32_t> index_map(int k, int n, const IndexMap &tau);

/// f(a) = g(a*tau) for tau : [0, m) -> [0, n), m the arity of g.
FiniteFunction minor(const FiniteFunction &g, int n, const IndexMap &tau);

/// f o sigma^ : a |-> f(a*sigma).
FiniteFunction permute_arguments(const FiniteFunction &f,
                                 const Permutation &sigma);

FiniteFunction identification_minor(const FiniteFunction &f, Couple I);

/// Some sigma with f == g o sigma^, scanning S_n in lexicographic order.
std::optional<Permutation> is_similar(const FiniteFunction &f,
                                      const FiniteFunction &g);

struct UimResult {
  bool unique = false;
  bool degenerate = false; // arity 2: only one identification minor
  std::optional<FiniteFunction> h; // the minor for the couple {n-1, n}
  // rho_I with f_I == h o rho_I^, one per couple, filled on success.
  std::vector<std::pair<Couple, Permutation>> witnesses;
};

UimResult has_unique_identification_minor(const FiniteFunction &f);

PermGroup invariance_group(const FiniteFunction &f);
PermGroup invariance_group(const FiniteFunction &f, const FunctionSpace &space);
bool is_totally_symmetric(const FiniteFunction &f);
bool is_2set_transitive(const FiniteFunction &f);

std::string to_string(Invariant phi);
Invariant parse_invariant(const std::string &name);

/// Fiber key of a tuple: ofo_canonical, cs_canonical, the sorted tuple,
/// or the sorted support.
Tuple fiber_key(Invariant phi, const Tuple &a);

/// Fiber label for every index of A^n, numbered by first appearance.
std::vector<int> fiber_partition(int k, int n, Invariant phi);

using SpecTable = std::map<Tuple, int>;

/// The value map on fiber keys when f is constant on every fiber.
std::optional<SpecTable> is_determined_by(const FiniteFunction &f,
                                          Invariant phi);

bool constant_on_classes(const Table &table, const std::vector<int> &classes);

struct DeterminedWitness {
  Permutation sigma; // f o sigma^ is determined by phi
  SpecTable spec;
};

std::optional<DeterminedWitness>
is_similar_to_determined_by(const FiniteFunction &f, Invariant phi);
/// Table-only variant for sweeps; returns the first sigma found.
std::optional<Permutation>
similar_to_determined_by(const FiniteFunction &f, Invariant phi,
                         const FunctionSpace &space);

/// All identification minors are literally equal.
bool characterize_ofo_by_minors(const FiniteFunction &f);
/// f_I == h o zeta_{min I}^ for h = f_{n-1,n}, zeta_i the cycle (i ... n-1).
bool characterize_cs_by_minors(const FiniteFunction &f);

/// The cycle (i i+1 ... n-2) on [0, n-1), 0-based, as a permutation.
Permutation zeta(int n_minus_one, int i);

struct NeqRestriction {
  bool supp_determined_on_neq = false;
  bool totally_symmetric_on_neq = false;
  bool two_set_transitive_on_neq = false;
};

/// Tests on the sub-domain of tuples with a repeated entry.
NeqRestriction restrict_neq_tests(const FiniteFunction &f);

enum class ClassLabel { UIM, OFO, CS, TwoST, SYMM, SUPP };

std::string to_string(ClassLabel label);

std::set<ClassLabel> classify(const FiniteFunction &f);
std::set<ClassLabel> classify(const FiniteFunction &f,
                              const FunctionSpace &space);

FiniteFunction reverse(const FiniteFunction &f);

/// Lexicographically least table in the similarity class of f.
Table canonical_table(const FiniteFunction &f);

using Deck = std::map<Table, int>;

Deck deck(const FiniteFunction &f);

} // namespace idminor

#endif // IDMINOR_FUNCTIONS_HPP
