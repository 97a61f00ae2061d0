#ifndef CSST_RM_H
#define CSST_RM_H

#include <cstdint>
#include <string>
#include <vector>

#include "csst/code.h"
#include "csst/gf2.h"

namespace csst {

/// Product of distinct variables; bit i-1 of `vars` stands for x_i.
struct Monomial {
  uint32_t vars = 0;

  size_t degree() const;
  /// Variable indices in increasing order (1-based).
  std::vector<int> variables() const;
  /// "1", "x1", "x1x3", ...
  std::string to_string() const;

  bool operator==(const Monomial &) const = default;
  /// Degree first, then lexicographic on the sorted variable lists.
  bool operator<(const Monomial &other) const;
};

/// Evaluation vector on 2^m points; position p has x_i = bit i-1 of p.
BitVector ev(const Monomial &f, size_t m);
BitVector ev(const std::vector<Monomial> &f, size_t m);

/// All monomials of the given degree, lexicographic.
std::vector<Monomial> monomials_of_degree(size_t d, size_t m);
/// All monomials of degree <= r, sorted by Monomial::operator<.
std::vector<Monomial> monomials_up_to(size_t r, size_t m);

BitMatrix rm_generator(size_t r, size_t m);
Subspace rm_code(size_t r, size_t m);

/// Closed under division and under replacing a variable by a smaller one
/// (the Bardet et al. order on equal degrees).
bool is_decreasing(const std::vector<Monomial> &set, size_t m);
/// Span of the evaluations; throws if the set is not decreasing.
Subspace decreasing_monomial_code(const std::vector<Monomial> &set, size_t m);
/// Monomial basis of the dual of a decreasing code: complements of the
/// monomials outside the set.
std::vector<Monomial> dual_monomial_set(const std::vector<Monomial> &set,
                                        size_t m);

/// Degree <= m/2 - 1 monomials and the lexicographically first half of the
/// degree m/2 ones; a self-dual code for even m.
std::vector<Monomial> rm_half_monomials(size_t m);

/// CSS(X, RM(r-1,m); Z, RM(m-r-1,m)). Logical X are the degree-r monomials
/// in lexicographic order with paired logical Z.
CssCode qrm_code(size_t r, size_t m);

/// Names accepted by catalog().
std::vector<std::string> catalog_names();
/// One of the example codes; throws std::invalid_argument for unknown names.
CssCode catalog(const std::string &name);

}  // namespace csst

#endif
