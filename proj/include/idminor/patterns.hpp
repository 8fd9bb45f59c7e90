#ifndef IDMINOR_PATTERNS_HPP
#define IDMINOR_PATTERNS_HPP

// Permutations, pattern extraction and the Pat/Comp Galois connection,
// together with explicit-element permutation groups of small degree.
//
// A permutation of degree n is stored 0-based as its image word.  The
// product is functional composition, (sigma * tau)(i) = sigma(tau(i)),
// so a tuple acted on by sigma * tau equals the tuple acted on by sigma
// and then by tau.  Differences x^-1 * y are taken under this product.

#include <compare>
#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace idminor {

class Permutation {
public:
  Permutation() = default;
  /// 0-based images; throws std::invalid_argument unless a bijection.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  static Permutation descending(int n);
  /// The natural cycle 2 3 ... n 1.
  static Permutation natural_cycle(int n);
  /// From a 1-based one-line word such as {5, 4, 2, 3, 8, 6, 1, 7}.
  static Permutation from_word(std::span<const int> word);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  std::span<const int> images() const { return images_; }
  std::vector<int> word() const;

  Permutation inverse() const;
  bool is_identity() const;

  friend Permutation operator*(const Permutation &a, const Permutation &b);
  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
  std::vector<int> images_;
};

using PermSet = std::set<Permutation>;

/// Explicit permutation group: every element is stored.  Construction
/// checks identity, closure and inverses.
class PermGroup {
public:
  PermGroup(int degree, PermSet elements);
  static PermGroup trivial(int degree);
  static PermGroup symmetric(int degree);

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const PermSet &elements() const { return elements_; }
  bool contains(const Permutation &p) const { return elements_.count(p) > 0; }

  PermGroup intersect(const PermGroup &other) const;
  bool is_subgroup_of(const PermGroup &other) const;

  friend bool operator==(const PermGroup &, const PermGroup &) = default;

private:
  int degree_ = 0;
  PermSet elements_;
};

/// All permutations of degree n in lexicographic order of their words.
std::vector<Permutation> all_permutations(int n);

/// All k-subsets of [0, n), each sorted, in lexicographic order.
std::vector<std::vector<int>> subsets_of_size(int n, int k);

/// Order-isomorphic normalization of a word of distinct integers.
Permutation red(std::span<const int> u);

/// sigma_S = h^-1_{sigma(S)} o sigma|_S o h_S for a sorted 0-based set S.
Permutation pattern_at(const Permutation &sigma, std::span<const int> S);
/// red of the subword of sigma at the positions S.
Permutation pattern_by_reduction(const Permutation &sigma,
                                 std::span<const int> S);

PermSet patterns(const Permutation &sigma, int l);
PermSet patterns_of_set(const PermSet &T, int l);
/// { pi in S_n : patterns(pi, l) is contained in S }, with l the common
/// degree of the members of S.
PermSet comp(int n, const PermSet &S, int l);
PermGroup comp(int n, const PermGroup &G);

PermGroup generate(const PermSet &S);
PermSet differences(const PermSet &S);

struct EqualizingReport {
  int l = 0;
  std::size_t pattern_count = 0;
  std::size_t generated_order = 0;
  bool equalizing = false;
  // Three equivalent forms of the equalizing condition; all must agree.
  bool groups_equal = false;     // <Delta P> == <P>
  bool meets_patterns = false;   // <Delta P> meets P
  bool contains_patterns = false; // P is contained in <Delta P>
};

EqualizingReport is_l_equalizing(const Permutation &sigma, int l);

struct EqualizingClassification {
  std::vector<EqualizingReport> levels; // index l-1 holds level l
  bool equalizing = true;
};

EqualizingClassification classify_equalizing(const Permutation &sigma);

Permutation direct_sum(const Permutation &pi, const Permutation &tau);
Permutation skew_sum(const Permutation &pi, const Permutation &tau);

enum class GroupName {
  symmetric,
  trivial,
  desc_pair,
  cyclic,
  dihedral,
  stabilizer_ab,
  stabilizer_cc_desc,
};

GroupName parse_group_name(std::string_view name);

/// a and b are used by stabilizer_ab; stabilizer_cc_desc uses a as c.
PermGroup named_group(GroupName name, int n, int a = 0, int b = 0);

bool is_2set_transitive_group(const PermGroup &G);
bool is_transitive_group(const PermGroup &G);
/// Transitive with no block system other than the trivial ones.
bool is_primitive_group(const PermGroup &G);

/// Every subgroup of S_n, found as joins of cyclic subgroups (n <= 5).
std::vector<PermGroup> all_subgroups(int n);

std::string format_permutation(const Permutation &p);
Permutation parse_permutation(std::string_view text);

} // namespace idminor

#endif // IDMINOR_PATTERNS_HPP
