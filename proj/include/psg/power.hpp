#ifndef PSG_POWER_HPP_
#define PSG_POWER_HPP_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "psg/semigroup.hpp"

namespace psg {

  using mask_type = std::uint64_t;

  //! A non-empty subset of the carrier of a finite semigroup, as a bit mask:
  //! bit x is set iff x belongs to the subset.
  class subset {
   public:
    //! Throws precondition_violated if `bits` is zero.
    explicit subset(mask_type bits);

    static subset singleton(std::size_t x);
    static subset of(std::initializer_list<std::size_t> elements);
    static subset of(std::span<std::size_t const> elements);

    mask_type bits() const noexcept {
      return _bits;
    }

    std::size_t size() const noexcept {
      return static_cast<std::size_t>(std::popcount(_bits));
    }

    bool contains(std::size_t x) const noexcept {
      return x < 64 && ((_bits >> x) & 1) != 0;
    }

    bool is_singleton() const noexcept {
      return std::has_single_bit(_bits);
    }

    //! Smallest element.
    std::size_t front() const noexcept {
      return static_cast<std::size_t>(std::countr_zero(_bits));
    }

    std::vector<std::size_t> elements() const;

    auto operator<=>(subset const&) const = default;

   private:
    mask_type _bits;
  };

  //! Mask of the whole carrier of an order-n semigroup.
  constexpr mask_type full_mask(std::size_t n) noexcept {
    return n >= 64 ? ~mask_type(0) : (mask_type(1) << n) - 1;
  }

  //! Setwise product without ambient checks; callers guarantee the masks
  //! lie inside the carrier.
  mask_type product_mask(finite_semigroup const& S, mask_type X, mask_type Y);

  //! {x y : x in X, y in Y}.  Throws ambient_mismatch if X or Y has a bit
  //! outside the carrier of S.
  subset setwise_product(finite_semigroup const& S, subset X, subset Y);

  //! Default materialisation cap for build_power_semigroup.
  inline constexpr std::size_t default_power_cap = 5;

  //! The large power semigroup P(S), materialised.  Element i of the result
  //! is the subset with mask i + 1, so subsets are listed in ascending mask
  //! order and the singleton {x} sits at index 2^x - 1.  Throws
  //! order_cap_exceeded if |S| > cap or 2^|S| - 1 > max_order.
  finite_semigroup build_power_semigroup(finite_semigroup const& S,
                                         std::size_t cap = default_power_cap);

  constexpr std::size_t power_index(mask_type m) noexcept {
    return static_cast<std::size_t>(m - 1);
  }

  constexpr mask_type power_mask(std::size_t index) noexcept {
    return static_cast<mask_type>(index) + 1;
  }

  //! A family of non-empty subsets of a fixed ambient semigroup, stored as a
  //! sorted vector of masks.  Subsemigroup and downward-completeness flags
  //! are computed on construction.
  class subset_family {
   public:
    //! Deduplicates and sorts `members`.  Throws ambient_mismatch if a member
    //! leaves the carrier, precondition_violated if `members` is empty.
    subset_family(finite_semigroup ambient, std::vector<subset> members);

    finite_semigroup const& ambient() const noexcept {
      return _ambient;
    }

    std::span<subset const> members() const noexcept {
      return _members;
    }

    std::size_t size() const noexcept {
      return _members.size();
    }

    subset const& operator[](std::size_t i) const noexcept {
      return _members[i];
    }

    bool contains(subset X) const noexcept;
    std::optional<std::size_t> index_of(subset X) const noexcept;

    //! Closed under setwise product.
    bool is_subsemigroup() const noexcept {
      return _subsemigroup;
    }

    bool is_downward_complete() const noexcept {
      return _downward_complete;
    }

    bool operator==(subset_family const& that) const {
      return _ambient == that._ambient && _members == that._members;
    }

   private:
    finite_semigroup    _ambient;
    std::vector<subset> _members;
    bool                _subsemigroup;
    bool                _downward_complete;
  };

  //! Outcome of the downward-completeness test, with a certificate.
  struct downward_completeness {
    enum class failure {
      none,
      //! first * second is not a member
      not_closed,
      //! carrier element `element` lies in no member
      not_covering,
      //! `second` is a non-empty subset of member `first` but not a member
      not_subset_closed
    };

    failure                    reason = failure::none;
    std::optional<subset>      first;
    std::optional<subset>      second;
    std::optional<std::size_t> element;

    explicit operator bool() const noexcept {
      return reason == failure::none;
    }
  };

  downward_completeness check_downward_complete(subset_family const& F);

  inline bool is_downward_complete(subset_family const& F) {
    return static_cast<bool>(check_downward_complete(F));
  }

  //! All 2^n - 1 non-empty subsets of S.
  subset_family full_family(finite_semigroup const& S);

  //! The singletons {x}, the least downward complete family.
  subset_family singleton_family(finite_semigroup const& S);

  //! Default limit on the number of members a closure may produce.
  inline constexpr std::size_t default_family_limit = std::size_t(1) << 20;

  //! Least downward complete subsemigroup of P(S) containing `generators`.
  //! Throws order_cap_exceeded if the family outgrows `limit` members.
  subset_family
  downward_complete_closure(finite_semigroup const& S,
                            std::span<subset const> generators,
                            std::size_t             limit = default_family_limit);

  //! Every non-empty subset of every congruence class.
  subset_family congruence_family(finite_semigroup const& S,
                                  congruence const&       c);

  //! The multiplication table of a subsemigroup family, members indexed in
  //! ascending mask order.  For full_family(S) this equals
  //! build_power_semigroup(S).  Throws precondition_violated when F is not
  //! closed or has more than max_order members.
  finite_semigroup family_semigroup(subset_family const& F);

}  // namespace psg

#endif  // PSG_POWER_HPP_
