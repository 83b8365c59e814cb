#ifndef PSG_CANCELLATIVITY_HPP_
#define PSG_CANCELLATIVITY_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "psg/power.hpp"

namespace psg {

  //! Left/right cancellativity of a member M inside the family semigroup F.
  struct member_cancellativity {
    bool left  = false;
    bool right = false;

    bool both() const noexcept {
      return left && right;
    }
  };

  //! Checks whether X -> M X and X -> X M are injective on F.  Throws
  //! precondition_violated unless F is a subsemigroup containing M.
  member_cancellativity cancellativity_in_family(subset_family const& F,
                                                 subset               M);

  //! The cancellative members of F, found by scanning all products.  This is
  //! the reference classifier; it makes no structural assumption on F beyond
  //! closure.
  std::vector<subset> cancellative_elements_bruteforce(subset_family const& F);

  //! For commutative S and downward complete F, the cancellative members of
  //! F are exactly the singletons {u} with u cancellative in S.  This
  //! classifier returns that set without looking at products of
  //! non-singletons.  Throws precondition_violated if S is not commutative or
  //! F is not downward complete.
  std::vector<subset> classify_cancellatives_prop1(subset_family const& F);

  enum class witness_case { case1, case2, brute_force };

  std::string_view to_string(witness_case c) noexcept;

  //! multiplier * lhs == multiplier * rhs with lhs != rhs, certifying that
  //! the multiplier is not cancellative.  For the two structured cases (a, b)
  //! records the chosen pair of elements of the multiplier.
  struct cancellation_witness {
    subset                     multiplier;
    subset                     lhs;
    subset                     rhs;
    witness_case               kind;
    std::optional<std::size_t> a;
    std::optional<std::size_t> b;
  };

  //! Builds the non-injectivity certificate for X -> A X.
  //!
  //! Case 1: the first ordered pair (a, b), a != b in ascending order, with
  //! a a = a b gives lhs = A and rhs = A \ {a}.
  //! Case 2: otherwise with a < b the two smallest elements of A, lhs = A A
  //! and rhs = A A \ {a b}.
  //!
  //! Throws precondition_violated unless S is commutative, F is downward
  //! complete, A is in F and |A| >= 2.  Throws theorem_violation if the
  //! constructed pair fails to certify non-cancellativity.
  cancellation_witness witness_noncancellative(subset_family const& F,
                                               subset               A);

  //! Checks lhs != rhs, multiplier lhs == multiplier rhs and
  //! lhs multiplier == rhs multiplier over S.  For Case 2 also checks
  //! b b in rhs.
  bool is_valid_witness(finite_semigroup const&     S,
                        cancellation_witness const& w);

  //! A pair X != Y in F with M X = M Y or X M = Y M, if one exists.
  std::optional<cancellation_witness>
  bruteforce_witness(subset_family const& F, subset M);

}  // namespace psg

#endif  // PSG_CANCELLATIVITY_HPP_
