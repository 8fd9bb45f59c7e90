#ifndef IDMINOR_STRINGS_HPP
#define IDMINOR_STRINGS_HPP

// Tuples over a finite alphabet and the invariant maps defined on them.
//
// Symbols are stored 0-based: a tuple over an alphabet of size k holds
// entries in [0, k).  Text input and output use 1-based symbols.
//
// Composition convention used throughout the library: for a tuple a of
// length n and a map tau : [0, m) -> [0, n), the tuple a*tau has
// (a*tau)[i] = a[tau[i]].  Composing twice satisfies
// (a*sigma)*tau == a*(sigma o tau) with (sigma o tau)(i) = sigma(tau(i)).

#include <compare>
#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace idminor {

using Symbol = int;

/// Map [0, m) -> [0, n) given by its image list.
using IndexMap = std::vector<int>;

class Tuple {
public:
  Tuple() = default;
  /// Throws std::invalid_argument if an entry lies outside [0, k).
  Tuple(int k, std::vector<Symbol> entries);

  int alphabet() const { return k_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  Symbol operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Symbol> entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  friend bool operator==(const Tuple &, const Tuple &) = default;
  friend auto operator<=>(const Tuple &, const Tuple &) = default;

private:
  int k_ = 1;
  std::vector<Symbol> entries_;
};

/// Multiplicity vector over the alphabet; counts[x] is the multiplicity of x.
class Multiset {
public:
  Multiset() = default;
  explicit Multiset(std::vector<int> counts);
  static Multiset zero(int k) { return Multiset(std::vector<int>(k, 0)); }

  int alphabet() const { return static_cast<int>(counts_.size()); }
  int count(Symbol x) const { return counts_[x]; }
  std::span<const int> counts() const { return counts_; }
  int cardinality() const;
  std::set<Symbol> support() const;

  /// Multiset join: multiplicities add.
  Multiset joined(const Multiset &other) const;
  Multiset with_added(Symbol x) const;

  friend bool operator==(const Multiset &, const Multiset &) = default;
  friend auto operator<=>(const Multiset &, const Multiset &) = default;

private:
  std::vector<int> counts_;
};

/// A value of the cs map: content plus the word of singletons.
/// Invariant: x occurs in singles iff content.count(x) == 1.
struct CSValue {
  Multiset content;
  Tuple singles;

  /// Throws std::invalid_argument unless the pair lies in the cs value space.
  void validate() const;

  friend bool operator==(const CSValue &, const CSValue &) = default;
  friend auto operator<=>(const CSValue &, const CSValue &) = default;
};

/// 2-element subset {lo, hi} of positions, lo < hi, 0-based.
struct Couple {
  int lo = 0;
  int hi = 1;

  friend bool operator==(const Couple &, const Couple &) = default;
  friend auto operator<=>(const Couple &, const Couple &) = default;
};

/// All 2-subsets of [0, n) in lexicographic order.
std::vector<Couple> couples(int n);

Tuple compose_tuple(const Tuple &a, const IndexMap &tau);

/// The identification map [0, n) -> [0, n-1) for the couple I.
IndexMap delta_map(int n, Couple I);

/// a*delta_I for a of length n-1; the result has length n and repeats
/// a[I.lo] at position I.hi.
Tuple apply_delta(const Tuple &a, Couple I);

Multiset ms(const Tuple &a);
Tuple singles(const Tuple &a);
std::vector<int> indexsingles(const Tuple &a);
CSValue cs(const Tuple &a);
Tuple ofo(const Tuple &a);
std::set<Symbol> supp(const Tuple &a);

/// cs of a*delta_{i,j} for any j > i, computed without building the tuple:
/// content gains one extra copy of a[i], and a[i] leaves the singles word.
CSValue cs_shifted(int i, const Tuple &a);

/// x...x ofo(a), where x is the first symbol of a, padded to length |a|.
Tuple ofo_canonical(const Tuple &a);
/// singles(a) followed by the repeated symbols, with multiplicity, sorted.
Tuple cs_canonical(const Tuple &a);

enum class Relation { sim, sim2 };

std::set<Tuple> sim_neighbors(const Tuple &a);
std::set<Tuple> sim2_neighbors(const Tuple &a);

/// Breadth-first reachability under the reflexive-transitive closure.
bool closure_equal(const Tuple &a, const Tuple &b, Relation relation);

/// Class label per lexicographic index of A^n under the closure of the
/// relation; labels are numbered by first appearance.
std::vector<int> closure_classes(int k, int n, Relation relation);

/// All tuples of A^n in lexicographic order (first entry most significant).
std::vector<Tuple> all_tuples(int k, int n);
std::size_t tuple_index(const Tuple &a);
Tuple tuple_at(int k, int n, std::size_t index);

/// Parses "1 2 2 3" (1-based symbols) or a letter word "abba" (a -> 1).
Tuple parse_tuple(std::string_view text, int k);
std::string format_tuple(const Tuple &a);
std::string format_multiset(const Multiset &m);
std::string format_cs(const CSValue &v);

} // namespace idminor

#endif // IDMINOR_STRINGS_HPP
