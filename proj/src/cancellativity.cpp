#include "psg/cancellativity.hpp"

#include <unordered_set>

#include "psg/error.hpp"

namespace psg {

  namespace {
    void require_subsemigroup(subset_family const& F) {
      if (!F.is_subsemigroup()) {
        throw precondition_violated(
            "family is not closed under setwise product");
      }
    }

    // True iff the map X -> f(X) on the members of F is injective.
    template <typename Fn>
    bool injective_on(subset_family const& F, Fn&& f) {
      std::unordered_set<mask_type> images;
      images.reserve(F.size());
      for (auto X : F.members()) {
        if (!images.insert(f(X.bits())).second) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  member_cancellativity cancellativity_in_family(subset_family const& F,
                                                 subset               M) {
    require_subsemigroup(F);
    if (!F.contains(M)) {
      throw precondition_violated("multiplier is not a member of the family");
    }
    auto const& S = F.ambient();
    return {injective_on(F,
                         [&](mask_type X) {
                           return product_mask(S, M.bits(), X);
                         }),
            injective_on(F, [&](mask_type X) {
              return product_mask(S, X, M.bits());
            })};
  }

  std::vector<subset> cancellative_elements_bruteforce(subset_family const& F) {
    require_subsemigroup(F);
    std::vector<subset> out;
    for (auto M : F.members()) {
      if (cancellativity_in_family(F, M).both()) {
        out.push_back(M);
      }
    }
    return out;
  }

  std::vector<subset> classify_cancellatives_prop1(subset_family const& F) {
    auto const& S = F.ambient();
    if (!S.is_commutative()) {
      throw precondition_violated("NotCommutative: ambient semigroup is not "
                                  "commutative");
    }
    if (!F.is_downward_complete()) {
      throw precondition_violated("NotDownwardComplete: family is not "
                                  "downward complete");
    }
    std::vector<subset> out;
    for (std::size_t u = 0; u < S.order(); ++u) {
      if (is_cancellative(S, u)) {
        out.push_back(subset::singleton(u));
      }
    }
    // Singletons are ordered by mask, which is ordered by element.
    return out;
  }

  std::string_view to_string(witness_case c) noexcept {
    switch (c) {
      case witness_case::case1:
        return "Case1";
      case witness_case::case2:
        return "Case2";
      case witness_case::brute_force:
        return "BruteForce";
    }
    return "";
  }

  cancellation_witness witness_noncancellative(subset_family const& F,
                                               subset               A) {
    auto const& S = F.ambient();
    if (!S.is_commutative()) {
      throw precondition_violated("NotCommutative: ambient semigroup is not "
                                  "commutative");
    }
    if (!F.is_downward_complete()) {
      throw precondition_violated("NotDownwardComplete: family is not "
                                  "downward complete");
    }
    if (!F.contains(A)) {
      throw precondition_violated("multiplier is not a member of the family");
    }
    if (A.size() < 2) {
      throw precondition_violated("multiplier must have at least two elements");
    }

    auto const           elems = A.elements();
    cancellation_witness w{A, A, A, witness_case::case1, {}, {}};
    bool                 found = false;
    for (auto a : elems) {
      for (auto b : elems) {
        if (a != b && S.product(a, a) == S.product(a, b)) {
          w.rhs  = subset(A.bits() & ~(mask_type(1) << a));
          w.a    = a;
          w.b    = b;
          found  = true;
          break;
        }
      }
      if (found) {
        break;
      }
    }
    if (!found) {
      std::size_t const a  = elems[0];
      std::size_t const b  = elems[1];
      mask_type const   A2 = product_mask(S, A.bits(), A.bits());
      w.kind               = witness_case::case2;
      w.lhs                = subset(A2);
      // b b != a b here, else (b, a) would have been a Case 1 pair, so the
      // remainder still contains b b and is non-empty.
      mask_type const rest = A2 & ~(mask_type(1) << S.product(a, b));
      if (rest == 0) {
        throw theorem_violation("Case 2 produced an empty remainder");
      }
      w.rhs = subset(rest);
      w.a   = a;
      w.b   = b;
    }
    if (!F.contains(w.lhs) || !F.contains(w.rhs)) {
      throw theorem_violation("witness sets escaped the downward complete "
                              "family");
    }
    if (!is_valid_witness(S, w)) {
      throw theorem_violation("constructed pair does not certify "
                              "non-cancellativity");
    }
    return w;
  }

  bool is_valid_witness(finite_semigroup const&     S,
                        cancellation_witness const& w) {
    mask_type const full = full_mask(S.order());
    for (auto X : {w.multiplier, w.lhs, w.rhs}) {
      if ((X.bits() & ~full) != 0) {
        return false;
      }
    }
    if (w.lhs == w.rhs) {
      return false;
    }
    auto const M = w.multiplier.bits();
    if (product_mask(S, M, w.lhs.bits()) != product_mask(S, M, w.rhs.bits())
        && product_mask(S, w.lhs.bits(), M)
               != product_mask(S, w.rhs.bits(), M)) {
      return false;
    }
    if (w.kind != witness_case::brute_force) {
      // The structured cases are built from A X, and the ambient is
      // commutative, so both sides must agree.
      if (product_mask(S, M, w.lhs.bits()) != product_mask(S, M, w.rhs.bits())
          || product_mask(S, w.lhs.bits(), M)
                 != product_mask(S, w.rhs.bits(), M)) {
        return false;
      }
    }
    if (w.kind == witness_case::case2) {
      if (!w.b || !w.rhs.contains(S.product(*w.b, *w.b))) {
        return false;
      }
    }
    return true;
  }

  std::optional<cancellation_witness>
  bruteforce_witness(subset_family const& F, subset M) {
    require_subsemigroup(F);
    auto const& S       = F.ambient();
    auto const  members = F.members();
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        auto const X = members[i].bits();
        auto const Y = members[j].bits();
        if (product_mask(S, M.bits(), X) == product_mask(S, M.bits(), Y)
            || product_mask(S, X, M.bits()) == product_mask(S, Y, M.bits())) {
          return cancellation_witness{
              M, members[i], members[j], witness_case::brute_force, {}, {}};
        }
      }
    }
    return std::nullopt;
  }

}  // namespace psg
