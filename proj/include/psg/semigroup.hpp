#ifndef PSG_SEMIGROUP_HPP_
#define PSG_SEMIGROUP_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace psg {

  //! Largest carrier supported, so that every subset fits in one 64-bit mask.
  inline constexpr std::size_t max_order = 64;

  //! A validated finite semigroup given by its Cayley table.
  //!
  //! Elements are the indices 0, ..., n - 1 and product(x, y) is the entry in
  //! row x, column y.  Instances are only obtainable through
  //! validate_semigroup (or the named constructors below, which call it), so
  //! every finite_semigroup is associative.  Immutable after construction.
  class finite_semigroup {
   public:
    std::size_t order() const noexcept {
      return _order;
    }

    std::size_t product(std::size_t x, std::size_t y) const noexcept {
      return _table[x * _order + y];
    }

    std::span<std::uint8_t const> row(std::size_t x) const noexcept {
      return {_table.data() + x * _order, _order};
    }

    //! Row-major table, n * n entries.
    std::vector<std::uint8_t> const& table() const noexcept {
      return _table;
    }

    bool is_commutative() const noexcept {
      return _commutative;
    }

    std::optional<std::size_t> identity() const noexcept {
      return _identity;
    }

    bool is_monoid() const noexcept {
      return _identity.has_value();
    }

    bool operator==(finite_semigroup const& that) const noexcept {
      return _order == that._order && _table == that._table;
    }

   private:
    friend finite_semigroup validate_semigroup(std::size_t,
                                               std::span<std::uint8_t const>);

    finite_semigroup(std::size_t n, std::vector<std::uint8_t> table);

    std::size_t                _order;
    std::vector<std::uint8_t>  _table;
    bool                       _commutative;
    std::optional<std::size_t> _identity;
  };

  //! Validate a row-major n * n table.  Throws index_out_of_range for an
  //! empty or oversized carrier or an entry outside [0, n), and
  //! non_associative naming the first triple (in lexicographic order) where
  //! (xy)z != x(yz).
  finite_semigroup validate_semigroup(std::size_t                   n,
                                      std::span<std::uint8_t const> table);

  finite_semigroup
  validate_semigroup(std::vector<std::vector<std::size_t>> const& rows);

  //! First triple (x, y, z) in lexicographic order violating associativity,
  //! or nothing.  Entries must already be in range.
  std::optional<std::array<std::size_t, 3>>
  first_non_associative_triple(std::size_t                   n,
                               std::span<std::uint8_t const> table);

  bool is_left_cancellative(finite_semigroup const& S, std::size_t a);
  bool is_right_cancellative(finite_semigroup const& S, std::size_t a);
  bool is_cancellative(finite_semigroup const& S, std::size_t a);
  //! Every element cancellative.
  bool is_cancellative(finite_semigroup const& S);
  bool is_group(finite_semigroup const& S);
  bool is_idempotent(finite_semigroup const& S, std::size_t a);

  //! A congruence, stored as block labels normalised so that the first
  //! occurrence of each block gets the next unused label.
  class congruence {
   public:
    std::vector<std::size_t> const& labels() const noexcept {
      return _labels;
    }

    std::size_t block(std::size_t x) const noexcept {
      return _labels[x];
    }

    std::size_t number_of_blocks() const noexcept {
      return _blocks;
    }

    //! Carrier elements of each block, as bit masks.
    std::vector<std::uint64_t> block_masks() const;

    bool operator==(congruence const&) const = default;

   private:
    friend congruence congruence_from_partition(finite_semigroup const&,
                                                std::span<std::size_t const>);
    congruence(std::vector<std::size_t> labels, std::size_t blocks)
        : _labels(std::move(labels)), _blocks(blocks) {}

    std::vector<std::size_t> _labels;
    std::size_t              _blocks;
  };

  //! Validates that the partition given by arbitrary labels is compatible
  //! with multiplication.  Throws not_compatible with the first witnessing
  //! quadruple, or index_out_of_range if the label count is wrong.
  congruence congruence_from_partition(finite_semigroup const&      S,
                                       std::span<std::size_t const> labels);

  //! Every congruence of S, found by scanning all set partitions of the
  //! carrier (restricted growth strings) in lexicographic order.
  std::vector<congruence> all_congruences(finite_semigroup const& S);

  ////////////////////////////////////////////////////////////////////////
  // Cayley-table text format
  ////////////////////////////////////////////////////////////////////////

  //! Reads `n` followed by n rows of n indices; `#` starts a comment.
  finite_semigroup parse_cayley_table(std::istream& in);
  finite_semigroup parse_cayley_table(std::string const& text);
  finite_semigroup read_cayley_table(std::string const& path);
  std::string      format_cayley_table(finite_semigroup const& S);

  ////////////////////////////////////////////////////////////////////////
  // Named semigroups
  ////////////////////////////////////////////////////////////////////////

  //! Z_n written additively: x y = x + y mod n.
  finite_semigroup cyclic_group(std::size_t n);
  //! Klein four-group, x y = x xor y.
  finite_semigroup klein_four_group();
  //! Null semigroup: every product is 0.
  finite_semigroup null_semigroup(std::size_t n);
  //! x y = x.
  finite_semigroup left_zero_semigroup(std::size_t n);
  //! x y = y.
  finite_semigroup right_zero_semigroup(std::size_t n);
  //! Chain semilattice, x y = min(x, y).  For n = 2 this is ({0, 1}, AND).
  finite_semigroup min_semilattice(std::size_t n);
  //! Relabel S through the bijection `perm`: perm[x] perm[y] = perm[x y].
  finite_semigroup relabel(finite_semigroup const&      S,
                           std::span<std::size_t const> perm);

}  // namespace psg

#endif  // PSG_SEMIGROUP_HPP_
