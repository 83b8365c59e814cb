#ifndef PSG_NUMERICAL_MONOID_HPP_
#define PSG_NUMERICAL_MONOID_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace psg {

  //! A submonoid of (N, +) with finite complement, given by generators.
  //!
  //! Membership is tabulated by dynamic programming up to a horizon of
  //! (min generator) * (max generator), which is past the Frobenius number.
  //! The largest gap is only accepted once it is followed by a run of
  //! min-generator consecutive members inside the table; otherwise the table
  //! is extended.
  class numerical_monoid {
   public:
    //! Throws precondition_violated if `generators` is empty, contains 0, or
    //! has gcd != 1.
    explicit numerical_monoid(std::vector<std::uint64_t> generators);

    //! Sorted, deduplicated.
    std::vector<std::uint64_t> const& generators() const noexcept {
      return _generators;
    }

    //! Sorted non-members.
    std::vector<std::uint64_t> const& gaps() const noexcept {
      return _gaps;
    }

    //! Largest gap; nothing for N itself.
    std::optional<std::uint64_t> frobenius() const noexcept {
      if (_gaps.empty()) {
        return std::nullopt;
      }
      return _gaps.back();
    }

    bool contains(std::uint64_t x) const noexcept;

    bool operator==(numerical_monoid const& that) const noexcept {
      return _gaps == that._gaps;
    }

   private:
    std::vector<std::uint64_t> _generators;
    std::vector<std::uint64_t> _gaps;
  };

  bool nm_membership(numerical_monoid const& M, std::uint64_t x);

  //! Numerical monoids are isomorphic exactly when equal, i.e. when their gap
  //! sets coincide.
  bool nm_equal(numerical_monoid const& M1, numerical_monoid const& M2);

  //! X + Y, sorted.  Throws non_member_input if an input is not in M.
  std::vector<std::uint64_t> nm_sumset(numerical_monoid const&      M,
                                       std::span<std::uint64_t const> X,
                                       std::span<std::uint64_t const> Y);

  //! Non-cancellativity certificate for A in P_fin(M): with a < b the two
  //! smallest elements of A, A + lhs == A + rhs where lhs = A + A and
  //! rhs = (A + A) \ {a + b}.
  struct nm_witness {
    std::vector<std::uint64_t> multiplier;
    std::vector<std::uint64_t> lhs;
    std::vector<std::uint64_t> rhs;
    std::uint64_t              a;
    std::uint64_t              b;
  };

  //! Throws precondition_violated if |A| < 2, non_member_input if A leaves M,
  //! and theorem_violation if the certificate fails.
  nm_witness nm_witness_noncancellative(numerical_monoid const&        M,
                                        std::span<std::uint64_t const> A);

  //! lhs != rhs, A + lhs == A + rhs, every set inside M, b + b in rhs.
  bool is_valid_nm_witness(numerical_monoid const& M, nm_witness const& w);

}  // namespace psg

#endif  // PSG_NUMERICAL_MONOID_HPP_
