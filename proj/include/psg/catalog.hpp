#ifndef PSG_CATALOG_HPP_
#define PSG_CATALOG_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "psg/isomorphism.hpp"
#include "psg/semigroup.hpp"

namespace psg {

  //! One semigroup of a catalog, identified by (order, index) where index is
  //! its position in the sorted enumeration.
  class catalog_entry {
   public:
    catalog_entry(finite_semigroup S, std::size_t index);

    finite_semigroup const& semigroup() const noexcept {
      return _semigroup;
    }

    std::size_t order() const noexcept {
      return _semigroup.order();
    }

    std::size_t index() const noexcept {
      return _index;
    }

    //! "order:index"
    std::string canonical_id() const;

    iso_fingerprint const& fingerprint() const noexcept {
      return _fingerprint;
    }

    //! Materialised P(S) and its fingerprint, computed on first use.  Safe to
    //! call concurrently.
    finite_semigroup const& power_semigroup() const;
    iso_fingerprint const&  power_fingerprint() const;

   private:
    struct lazy_power;

    finite_semigroup            _semigroup;
    std::size_t                 _index;
    iso_fingerprint             _fingerprint;
    std::shared_ptr<lazy_power> _power;
  };

  //! Largest order the catalog supports; the last one needs long_running.
  inline constexpr std::size_t max_catalog_order = 5;

  struct enumeration_options {
    bool     up_to_isomorphism = true;
    //! Required for order 5.
    bool     long_running      = false;
    unsigned jobs              = 1;
  };

  //! Calls `visit` on every associative n x n table, in lexicographic order
  //! of the row-major encoding.  Cells are filled row-major and a branch is
  //! cut as soon as a triple whose four products are all filled in fails
  //! associativity.  Returns the number of tables visited.
  std::size_t for_each_associative_table(
      std::size_t                                                n,
      std::function<void(std::span<std::uint8_t const>)> const& visit);

  //! All associative tables of order n, lexicographically sorted.  The
  //! search is split on the first cells and run on `jobs` threads.
  std::vector<std::vector<std::uint8_t>> associative_tables(std::size_t n,
                                                            unsigned jobs = 1);

  //! The lexicographically least relabelling of `table` over all n!
  //! permutations of the carrier.
  std::vector<std::uint8_t> canonical_table(std::size_t                   n,
                                            std::span<std::uint8_t const> table);

  //! Semigroups of order n, sorted by table.  Up to isomorphism the entries
  //! are the lexicographically least table of each class: for n <= 4 by
  //! keeping tables equal to their canonical_table, for n = 5 by fingerprint
  //! bucketing and isomorphism tests against earlier representatives.
  //! Throws order_unsupported outside [1, 5] or for 5 without long_running.
  std::vector<catalog_entry> enumerate_semigroups(std::size_t                n,
                                                  enumeration_options const& opts
                                                  = {});

  struct enumeration_audit {
    std::size_t   order            = 0;
    std::size_t   labeled_tables   = 0;
    std::size_t   classes          = 0;
    std::size_t   rejected         = 0;
    std::size_t   sampled          = 0;
    //! Sampled rejected tables isomorphic to some kept entry.
    std::size_t   sampled_matched  = 0;
    std::size_t   pairs_checked    = 0;
    //! Pairs of kept entries found isomorphic (must be zero).
    std::size_t   pairs_isomorphic = 0;
    std::uint64_t seed             = 0;

    bool consistent() const noexcept {
      return sampled_matched == sampled && pairs_isomorphic == 0;
    }
  };

  //! Checks that kept entries are pairwise non-isomorphic and that a seeded
  //! sample (fraction of the rejected labelled tables, at least one) is
  //! isomorphic to a kept entry.
  enumeration_audit audit_enumeration(std::span<catalog_entry const> catalog,
                                      std::uint64_t                  seed,
                                      double sample_fraction = 0.01);

  ////////////////////////////////////////////////////////////////////////
  // Global isomorphism probe
  ////////////////////////////////////////////////////////////////////////

  struct probe_options {
    std::size_t   order        = 2;
    unsigned      jobs         = 1;
    bool          long_running = false;
    //! Re-decide every pair without invariant pruning when order <= 3.
    bool          double_check = true;
    bool          record_time  = true;
    std::uint64_t seed         = 0;
  };

  struct probe_counterexample {
    std::size_t              left;
    std::size_t              right;
    finite_semigroup         left_semigroup;
    finite_semigroup         right_semigroup;
    //! P(left) -> P(right), power semigroup indices (mask - 1).
    std::vector<std::size_t> map;
    bool                     reverified;
  };

  struct probe_report {
    std::size_t                       order                  = 0;
    std::size_t                       classes                = 0;
    std::size_t                       pairs_checked          = 0;
    std::size_t                       pruned_by_fingerprint  = 0;
    std::size_t                       searched               = 0;
    std::size_t                       double_checked         = 0;
    std::size_t                       double_check_conflicts = 0;
    std::vector<probe_counterexample> counterexamples;
    std::int64_t                      elapsed_ms             = 0;
    std::uint64_t                     seed                   = 0;
    unsigned                          jobs                   = 1;
  };

  //! For every unordered pair of distinct entries, decides whether their
  //! power semigroups are isomorphic.  Pairs are processed by a work queue on
  //! `jobs` threads and merged in pair order.
  probe_report global_iso_probe(std::span<catalog_entry const> catalog,
                                probe_options const&           opts);

  //! Enumerates the catalog of the requested order and probes it.
  probe_report global_iso_probe(probe_options const& opts);

  ////////////////////////////////////////////////////////////////////////
  // Exhaustive cancellativity checks
  ////////////////////////////////////////////////////////////////////////

  struct prop1_violation {
    std::string            entry;
    std::string            family;
    std::vector<mask_type> members;
    std::string            detail;
  };

  struct prop1_report {
    std::size_t                  order                = 0;
    std::uint64_t                seed                 = 0;
    std::size_t                  samples_per_entry    = 0;
    std::size_t                  commutative_entries  = 0;
    std::size_t                  families_checked     = 0;
    std::size_t                  congruences_checked  = 0;
    std::size_t                  closures_checked     = 0;
    std::size_t                  witnesses_checked    = 0;
    std::size_t                  case1_witnesses      = 0;
    std::size_t                  case2_witnesses      = 0;
    std::vector<prop1_violation> violations;
  };

  struct prop1_options {
    std::size_t   order             = 2;
    std::uint64_t seed              = 0;
    //! Random downward complete closures per commutative entry.
    std::size_t   samples_per_entry = 8;
    bool          long_running      = false;
  };

  //! For every commutative semigroup of order <= opts.order: on P(S), on the
  //! family of every congruence and on seeded random closures, compares the
  //! two classifiers, builds a witness for every member of size >= 2, and
  //! checks u cancellative in S iff {u} cancellative in the family.
  prop1_report prop1_exhaustive_check(prop1_options const& opts);

  //! Same checks for one family, appending violations.
  void check_family_prop1(subset_family const&  F,
                          std::string const&    entry,
                          std::string const&    family,
                          prop1_report&         report);

}  // namespace psg

#endif  // PSG_CATALOG_HPP_
