#ifndef PSG_ISOMORPHISM_HPP_
#define PSG_ISOMORPHISM_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "psg/power.hpp"
#include "psg/semigroup.hpp"

namespace psg {

  ////////////////////////////////////////////////////////////////////////
  // Invariants
  ////////////////////////////////////////////////////////////////////////

  //! Isomorphism-invariant data attached to one element a.
  struct element_invariant {
    bool          idempotent;
    //! a^index = a^(index + period), index and period minimal.
    std::uint8_t  index;
    std::uint8_t  period;
    //! |aS| and |Sa|.
    std::uint8_t  left_image;
    std::uint8_t  right_image;
    //! #{x : ax = xa}
    std::uint8_t  commuting;
    //! #{(x, y) : xy = a}
    std::uint16_t factorisations;
    //! #{x : xx = a}
    std::uint8_t  square_roots;

    auto operator<=>(element_invariant const&) const = default;
  };

  std::vector<element_invariant> element_invariants(finite_semigroup const& S);

  //! Multiset of element invariants plus global invariants.  Equal
  //! fingerprints are necessary for isomorphism.
  class iso_fingerprint {
   public:
    explicit iso_fingerprint(finite_semigroup const& S);

    std::size_t order() const noexcept {
      return _order;
    }

    std::size_t hash() const noexcept {
      return _hash;
    }

    //! Name of the first differing invariant, or nothing if equal.
    std::optional<std::string> mismatch(iso_fingerprint const& that) const;

    bool operator==(iso_fingerprint const& that) const noexcept {
      return _hash == that._hash && _order == that._order
             && _commutative == that._commutative
             && _idempotents == that._idempotents
             && _has_identity == that._has_identity
             && _elements == that._elements;
    }

   private:
    std::size_t                    _order;
    bool                           _commutative;
    std::size_t                    _idempotents;
    bool                           _has_identity;
    std::vector<element_invariant> _elements;  // sorted
    std::size_t                    _hash;
  };

  ////////////////////////////////////////////////////////////////////////
  // Morphisms
  ////////////////////////////////////////////////////////////////////////

  //! An element map between two finite semigroups with its verified status.
  class morphism {
   public:
    //! Verifies the map exhaustively.  Throws index_out_of_range if `map`
    //! does not send [0, |source|) into [0, |target|).
    morphism(finite_semigroup source,
             finite_semigroup target,
             std::vector<std::size_t> map);

    finite_semigroup const& source() const noexcept {
      return _source;
    }

    finite_semigroup const& target() const noexcept {
      return _target;
    }

    std::vector<std::size_t> const& map() const noexcept {
      return _map;
    }

    std::size_t operator()(std::size_t x) const noexcept {
      return _map[x];
    }

    bool is_homomorphism() const noexcept {
      return _homomorphism;
    }

    bool is_injective() const noexcept {
      return _injective;
    }

    bool is_surjective() const noexcept {
      return _surjective;
    }

    bool is_isomorphism() const noexcept {
      return _homomorphism && _injective && _surjective;
    }

    bool operator==(morphism const&) const = default;

   private:
    finite_semigroup         _source;
    finite_semigroup         _target;
    std::vector<std::size_t> _map;
    bool                     _homomorphism;
    bool                     _injective;
    bool                     _surjective;
  };

  struct iso_search_options {
    //! Restrict candidates to elements with equal invariants and reject on a
    //! fingerprint mismatch.  Disable for an unpruned cross-check.
    bool use_invariants = true;
  };

  struct iso_verdict {
    std::optional<morphism>    isomorphism;
    std::optional<std::string> fingerprint_mismatch;

    bool isomorphic() const noexcept {
      return isomorphism.has_value();
    }
  };

  //! Decides whether S and T are isomorphic.  Candidate images are tried in
  //! order of ascending invariant-class size, and every assignment forces the
  //! images of all products with already-assigned elements.
  iso_verdict decide_isomorphism(finite_semigroup const& S,
                                 finite_semigroup const& T,
                                 iso_search_options      options = {});

  //! As above with precomputed fingerprints.
  iso_verdict decide_isomorphism(finite_semigroup const& S,
                                 finite_semigroup const& T,
                                 iso_fingerprint const&  fS,
                                 iso_fingerprint const&  fT);

  std::optional<morphism> find_isomorphism(finite_semigroup const& S,
                                           finite_semigroup const& T,
                                           iso_search_options options = {});

  //! Calls `visit` on every isomorphism S -> T in lexicographic order of the
  //! search; stops early if `visit` returns false.  Returns the number of
  //! isomorphisms visited.
  std::size_t
  for_each_isomorphism(finite_semigroup const&                     S,
                       finite_semigroup const&                     T,
                       std::function<bool(morphism const&)> const& visit);

  std::vector<morphism> all_isomorphisms(finite_semigroup const& S,
                                         finite_semigroup const& T);

  //! Calls `visit` on every homomorphism S -> T by exhaustive scan of all
  //! |T|^|S| maps.  Throws order_cap_exceeded above 2^24 maps.
  std::size_t
  for_each_homomorphism(finite_semigroup const&                     S,
                        finite_semigroup const&                     T,
                        std::function<bool(morphism const&)> const& visit);

  ////////////////////////////////////////////////////////////////////////
  // Power semigroups
  ////////////////////////////////////////////////////////////////////////

  //! A map between two subset families, member index to member index,
  //! together with the corresponding morphism of family semigroups.
  class family_morphism {
   public:
    //! Throws precondition_violated unless both families are subsemigroups
    //! small enough to tabulate.
    family_morphism(subset_family            source,
                    subset_family            target,
                    std::vector<std::size_t> map);

    subset_family const& source() const noexcept {
      return _source;
    }

    subset_family const& target() const noexcept {
      return _target;
    }

    morphism const& on_members() const noexcept {
      return _members;
    }

    //! Image of a member of the source family.
    subset operator()(subset X) const;

    bool is_isomorphism() const noexcept {
      return _members.is_isomorphism();
    }

   private:
    subset_family _source;
    subset_family _target;
    morphism      _members;
  };

  //! Wraps a morphism P(H) -> P(K) between materialised power semigroups
  //! (element i is the subset with mask i + 1) as a family morphism.
  family_morphism as_power_morphism(finite_semigroup const& H,
                                    finite_semigroup const& K,
                                    morphism const&         F);

  //! X -> f[X], an isomorphism P(H) -> P(K).  Throws precondition_violated
  //! unless f is an isomorphism, and theorem_violation if the image map
  //! fails to be an isomorphism or changes a cardinality.
  family_morphism lift_isomorphism(morphism const& f);

  //! For an isomorphism between downward complete families over cancellative
  //! H and K, one of them commutative, returns x -> y where F({x}) = {y}.
  //! Throws precondition_violated if a hypothesis fails and theorem_violation
  //! if some singleton is sent to a non-singleton or the restriction is not
  //! an isomorphism.
  morphism restrict_isomorphism(family_morphism const& F);

  //! For an isomorphism between downward complete families with commutative
  //! source ambient H, reports whether the target ambient K is commutative.
  //! Throws precondition_violated if F is not an isomorphism, the families
  //! are not downward complete, or H is not commutative.
  bool verify_commutativity_transfer(family_morphism const& F);

  //! Whether f preserves left, right and two-sided cancellativity of every
  //! element.  Throws precondition_violated unless f is an isomorphism.
  bool cancellative_preservation_check(morphism const& f);

}  // namespace psg

#endif  // PSG_ISOMORPHISM_HPP_
