#ifndef IDMINOR_CONSTRUCTIONS_HPP
#define IDMINOR_CONSTRUCTIONS_HPP

// Functions determined by content and singletons, built from a value map
// on the cs value space Z^(n)(A), and the level-wise symmetry machinery
// that relates such maps to invariance groups and similarity.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "idminor/functions.hpp"
#include "idminor/patterns.hpp"
#include "idminor/strings.hpp"

namespace idminor {

/// Thrown when a spec lacks a value for some cs value.
class IncompleteSpec : public std::runtime_error {
public:
  explicit IncompleteSpec(const CSValue &missing);
  const CSValue &missing() const { return missing_; }

private:
  CSValue missing_;
};

/// Value map f* on Z^(n)(A) with codomain [0, m).
class CSSpec {
public:
  CSSpec(int k, int n, int m, std::map<CSValue, int> values);

  int alphabet() const { return k_; }
  int arity() const { return n_; }
  int codomain() const { return m_; }
  const std::map<CSValue, int> &values() const { return values_; }

  /// Throws IncompleteSpec when v is not covered.
  int operator()(const CSValue &v) const;

  /// Throws unless the keys are exactly Z^(n)(A) and values lie in [0, m).
  void validate() const;

  friend bool operator==(const CSSpec &, const CSSpec &) = default;

private:
  int k_;
  int n_;
  int m_;
  std::map<CSValue, int> values_;
};

/// Admissible singles-word lengths: {0..k-1} if k < n, else {0..n} \ {n-1}.
std::vector<int> z_levels(int k, int n);

/// Every (M, a) with |M| = n, |a| = l in the cs value space, ordered by
/// content and then by singles word.
std::vector<CSValue> enumerate_level(int k, int n, int l);
/// The union of all levels of Z(k, n).
std::vector<CSValue> enumerate_values(int k, int n);

FiniteFunction build_cs_function(const CSSpec &spec);
std::optional<CSSpec> extract_cs_spec(const FiniteFunction &f);

/// The single cs value (<1^(n-k+1), 2, ..., k>, 23...k) maps to 1, all
/// others to 0.
FiniteFunction witness_new(int k, int n, int m = 2);
CSSpec witness_new_spec(int k, int n, int m = 2);

/// { sigma in S_l : f*_l(M, a) == f*_l(M, a*sigma) on level l }.
PermGroup level_invariants(const CSSpec &spec, int l);

/// Intersection of comp(n, level_invariants(spec, l)) over the levels.
PermGroup inv_from_levels(const CSSpec &spec);

/// The level-wise criterion for build(g) == build(f) o sigma^.
bool check_sigma_transport(const CSSpec &f_spec, const CSSpec &g_spec,
                           const Permutation &sigma);

/// Thrown by witness_similar_pair when sigma is l-equalizing.
class NotDifferentiating : public std::runtime_error {
public:
  explicit NotDifferentiating(EqualizingReport report);
  const EqualizingReport &report() const { return report_; }

private:
  EqualizingReport report_;
};

struct SimilarPair {
  CSSpec f_spec;
  CSSpec g_spec;
  FiniteFunction f;
  FiniteFunction g; // g == f o sigma^ and f != g
  Permutation rho;  // least member of patterns(sigma, l)
  EqualizingReport report;
};

SimilarPair witness_similar_pair(const Permutation &sigma, int l, int k, int n,
                                 int m = 2);

/// f'(M, a) = f*(M, reversed a).
CSSpec reverse_spec(const CSSpec &spec);

/// Spec whose level-l part separates the G_l-orbits of the words over
/// {1..l}; levels absent from the family map to the reserved value 0.
/// The codomain is sized to fit the orbit labels.
CSSpec orbit_indicator_spec(int k, int n, const std::map<int, PermGroup> &groups);

/// The possible invariance groups listed for n >= 2k - 3, instantiated at
/// degree n, with a label each.
std::vector<std::pair<std::string, PermGroup>> invariance_shapes(int k, int n);

std::string format_cs_key(const CSValue &v);

} // namespace idminor

#endif // IDMINOR_CONSTRUCTIONS_HPP
