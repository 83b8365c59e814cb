#include "psg/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <thread>
#include <unordered_map>

#include "psg/cancellativity.hpp"
#include "psg/error.hpp"
#include "psg/power.hpp"

namespace psg {

  namespace {
    // Runs fn(i) for i in [0, count) on up to `jobs` threads pulling indices
    // from a shared counter.  The first exception thrown is rethrown.
    template <typename Fn>
    void parallel_for(std::size_t count, unsigned jobs, Fn&& fn) {
      if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
          fn(i);
        }
        return;
      }
      std::atomic<std::size_t> next{0};
      std::exception_ptr       failure;
      std::mutex               failure_mutex;
      auto                     worker = [&] {
        while (true) {
          std::size_t const i = next.fetch_add(1);
          if (i >= count) {
            return;
          }
          try {
            fn(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) {
              failure = std::current_exception();
            }
            next = count;
          }
        }
      };
      std::vector<std::thread> threads;
      unsigned const           n_threads
          = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
      threads.reserve(n_threads);
      for (unsigned t = 0; t < n_threads; ++t) {
        threads.emplace_back(worker);
      }
      for (auto& t : threads) {
        t.join();
      }
      if (failure) {
        std::rethrow_exception(failure);
      }
    }

    constexpr std::uint8_t empty_cell = 0xff;

    class table_search {
     public:
      explicit table_search(std::size_t n) : _n(n), _t(n * n, empty_cell) {}

      // Fixes the first cells; returns false if the prefix already fails.
      bool seed_prefix(std::span<std::uint8_t const> prefix) {
        for (std::size_t c = 0; c < prefix.size(); ++c) {
          _t[c] = prefix[c];
          if (!consistent_after(c / _n, c % _n)) {
            return false;
          }
        }
        return true;
      }

      template <typename Visit>
      std::size_t run(std::size_t first_cell, Visit& visit) {
        std::size_t count = 0;
        dfs(first_cell, visit, count);
        return count;
      }

     private:
      template <typename Visit>
      void dfs(std::size_t cell, Visit& visit, std::size_t& count) {
        if (cell == _t.size()) {
          ++count;
          visit(std::span<std::uint8_t const>(_t));
          return;
        }
        std::size_t const i = cell / _n;
        std::size_t const j = cell % _n;
        for (std::size_t v = 0; v < _n; ++v) {
          _t[cell] = static_cast<std::uint8_t>(v);
          if (consistent_after(i, j)) {
            dfs(cell + 1, visit, count);
          }
        }
        _t[cell] = empty_cell;
      }

      std::uint8_t at(std::size_t x, std::size_t y) const {
        return _t[x * _n + y];
      }

      bool triple_ok(std::size_t x, std::size_t y, std::size_t z) const {
        std::uint8_t const xy = at(x, y);
        std::uint8_t const yz = at(y, z);
        if (xy == empty_cell || yz == empty_cell) {
          return true;
        }
        std::uint8_t const lhs = at(xy, z);
        std::uint8_t const rhs = at(x, yz);
        return lhs == empty_cell || rhs == empty_cell || lhs == rhs;
      }

      // Every triple that uses cell (i, j) in one of its four lookups.
      bool consistent_after(std::size_t i, std::size_t j) const {
        for (std::size_t k = 0; k < _n; ++k) {
          if (!triple_ok(i, j, k) || !triple_ok(k, i, j)) {
            return false;
          }
        }
        for (std::size_t x = 0; x < _n; ++x) {
          for (std::size_t y = 0; y < _n; ++y) {
            if (at(x, y) == i && !triple_ok(x, y, j)) {
              return false;
            }
            if (at(x, y) == j && !triple_ok(i, x, y)) {
              return false;
            }
          }
        }
        return true;
      }

      std::size_t               _n;
      std::vector<std::uint8_t> _t;
    };

    void check_catalog_order(std::size_t n, bool long_running) {
      if (n < 1 || n > max_catalog_order) {
        throw order_unsupported("catalog order must lie in [1, "
                                + std::to_string(max_catalog_order)
                                + "], found " + std::to_string(n));
      }
      if (n == max_catalog_order && !long_running) {
        throw order_unsupported("order " + std::to_string(n)
                                + " requires the long-running flag");
      }
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // catalog_entry
  ////////////////////////////////////////////////////////////////////////

  struct catalog_entry::lazy_power {
    std::once_flag                  once;
    std::optional<finite_semigroup> power;
    std::optional<iso_fingerprint>  fingerprint;
  };

  catalog_entry::catalog_entry(finite_semigroup S, std::size_t index)
      : _semigroup(std::move(S)),
        _index(index),
        _fingerprint(_semigroup),
        _power(std::make_shared<lazy_power>()) {}

  std::string catalog_entry::canonical_id() const {
    return std::to_string(order()) + ":" + std::to_string(_index);
  }

  finite_semigroup const& catalog_entry::power_semigroup() const {
    std::call_once(_power->once, [this] {
      _power->power.emplace(
          build_power_semigroup(_semigroup, max_catalog_order));
      _power->fingerprint.emplace(*_power->power);
    });
    return *_power->power;
  }

  iso_fingerprint const& catalog_entry::power_fingerprint() const {
    power_semigroup();
    return *_power->fingerprint;
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  std::size_t for_each_associative_table(
      std::size_t                                                n,
      std::function<void(std::span<std::uint8_t const>)> const& visit) {
    if (n < 1 || n > 8) {
      throw order_unsupported("table enumeration supports orders 1 to 8");
    }
    table_search search(n);
    return search.run(0, visit);
  }

  std::vector<std::vector<std::uint8_t>> associative_tables(std::size_t n,
                                                            unsigned    jobs) {
    if (n < 1 || n > 8) {
      throw order_unsupported("table enumeration supports orders 1 to 8");
    }
    std::size_t const prefix_len = std::min<std::size_t>(2, n * n);
    std::size_t       tasks      = 1;
    for (std::size_t i = 0; i < prefix_len; ++i) {
      tasks *= n;
    }
    std::vector<std::vector<std::vector<std::uint8_t>>> results(tasks);
    parallel_for(tasks, jobs, [&](std::size_t task) {
      // Task index, most significant digit first, is the prefix.
      std::vector<std::uint8_t> prefix(prefix_len);
      std::size_t               rest = task;
      for (std::size_t i = prefix_len; i > 0; --i) {
        prefix[i - 1] = static_cast<std::uint8_t>(rest % n);
        rest /= n;
      }
      table_search search(n);
      if (!search.seed_prefix(prefix)) {
        return;
      }
      auto collect = [&](std::span<std::uint8_t const> t) {
        results[task].emplace_back(t.begin(), t.end());
      };
      search.run(prefix_len, collect);
    });
    std::vector<std::vector<std::uint8_t>> out;
    for (auto& r : results) {
      std::move(r.begin(), r.end(), std::back_inserter(out));
    }
    return out;
  }

  std::vector<std::uint8_t> canonical_table(std::size_t                   n,
                                            std::span<std::uint8_t const> t) {
    std::vector<std::uint8_t> best(t.begin(), t.end());
    std::vector<std::uint8_t> cand(n * n);
    std::vector<std::size_t>  perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    while (std::next_permutation(perm.begin(), perm.end())) {
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          cand[perm[x] * n + perm[y]]
              = static_cast<std::uint8_t>(perm[t[x * n + y]]);
        }
      }
      if (cand < best) {
        best = cand;
      }
    }
    return best;
  }

  std::vector<catalog_entry> enumerate_semigroups(std::size_t                n,
                                                  enumeration_options const& opts) {
    check_catalog_order(n, opts.long_running);
    auto const                 tables = associative_tables(n, opts.jobs);
    std::vector<catalog_entry> out;

    if (!opts.up_to_isomorphism) {
      for (auto const& t : tables) {
        out.emplace_back(validate_semigroup(n, t), out.size());
      }
      return out;
    }

    if (n <= 4) {
      std::vector<char> keep(tables.size(), 0);
      parallel_for(tables.size(), opts.jobs, [&](std::size_t i) {
        keep[i] = canonical_table(n, tables[i]) == tables[i];
      });
      for (std::size_t i = 0; i < tables.size(); ++i) {
        if (keep[i]) {
          out.emplace_back(validate_semigroup(n, tables[i]), out.size());
        }
      }
      return out;
    }

    // Tables arrive in lexicographic order, so the first member of each
    // class met here is also its least table.
    std::unordered_map<std::size_t, std::vector<std::size_t>> buckets;
    std::vector<finite_semigroup>                             reps;
    std::vector<iso_fingerprint>                              rep_prints;
    for (auto const& t : tables) {
      finite_semigroup S = validate_semigroup(n, t);
      iso_fingerprint  fp(S);
      auto&            bucket = buckets[fp.hash()];
      bool             known  = false;
      for (std::size_t r : bucket) {
        if (decide_isomorphism(S, reps[r], fp, rep_prints[r]).isomorphic()) {
          known = true;
          break;
        }
      }
      if (!known) {
        bucket.push_back(reps.size());
        reps.push_back(std::move(S));
        rep_prints.push_back(std::move(fp));
      }
    }
    std::sort(reps.begin(), reps.end(), [](auto const& a, auto const& b) {
      return a.table() < b.table();
    });
    for (auto& S : reps) {
      out.emplace_back(std::move(S), out.size());
    }
    return out;
  }

  enumeration_audit audit_enumeration(std::span<catalog_entry const> catalog,
                                      std::uint64_t                  seed,
                                      double sample_fraction) {
    enumeration_audit audit;
    audit.seed = seed;
    if (catalog.empty()) {
      return audit;
    }
    std::size_t const n = catalog.front().order();
    audit.order         = n;
    audit.classes       = catalog.size();

    std::unordered_multimap<std::size_t, std::size_t> by_print;
    for (std::size_t i = 0; i < catalog.size(); ++i) {
      by_print.emplace(catalog[i].fingerprint().hash(), i);
    }

    for (std::size_t i = 0; i < catalog.size(); ++i) {
      for (std::size_t j = i + 1; j < catalog.size(); ++j) {
        ++audit.pairs_checked;
        if (decide_isomorphism(catalog[i].semigroup(),
                               catalog[j].semigroup(),
                               catalog[i].fingerprint(),
                               catalog[j].fingerprint())
                .isomorphic()) {
          ++audit.pairs_isomorphic;
        }
      }
    }

    std::vector<std::vector<std::uint8_t>> rejected;
    for_each_associative_table(n, [&](std::span<std::uint8_t const> t) {
      ++audit.labeled_tables;
      bool kept = false;
      for (auto const& e : catalog) {
        if (std::equal(t.begin(), t.end(), e.semigroup().table().begin(),
                       e.semigroup().table().end())) {
          kept = true;
          break;
        }
      }
      if (!kept) {
        rejected.emplace_back(t.begin(), t.end());
      }
    });
    audit.rejected = rejected.size();
    if (rejected.empty()) {
      return audit;
    }

    std::size_t const want = std::max<std::size_t>(
        1, static_cast<std::size_t>(sample_fraction * rejected.size()));
    std::mt19937_64          rng(seed);
    std::vector<std::size_t> picks(rejected.size());
    std::iota(picks.begin(), picks.end(), 0);
    std::shuffle(picks.begin(), picks.end(), rng);
    picks.resize(std::min(want, picks.size()));
    std::sort(picks.begin(), picks.end());

    for (std::size_t p : picks) {
      ++audit.sampled;
      finite_semigroup S = validate_semigroup(n, rejected[p]);
      iso_fingerprint  fp(S);
      auto [lo, hi]      = by_print.equal_range(fp.hash());
      for (auto it = lo; it != hi; ++it) {
        auto const& e = catalog[it->second];
        if (decide_isomorphism(S, e.semigroup(), fp, e.fingerprint())
                .isomorphic()) {
          ++audit.sampled_matched;
          break;
        }
      }
    }
    return audit;
  }

  ////////////////////////////////////////////////////////////////////////
  // Probe
  ////////////////////////////////////////////////////////////////////////

  namespace {
    struct pair_result {
      bool                                    pruned = false;
      std::optional<std::vector<std::size_t>> iso;
      bool                                    double_checked = false;
      bool                                    conflict       = false;
    };
  }  // namespace

  probe_report global_iso_probe(std::span<catalog_entry const> catalog,
                                probe_options const&           opts) {
    auto const start = std::chrono::steady_clock::now();

    probe_report report;
    report.order   = opts.order;
    report.classes = catalog.size();
    report.seed    = opts.seed;
    report.jobs    = std::max(1u, opts.jobs);

    // Materialise every power semigroup and fingerprint before the workers
    // start so that they only read shared state.
    for (auto const& e : catalog) {
      e.power_fingerprint();
    }

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < catalog.size(); ++i) {
      for (std::size_t j = i + 1; j < catalog.size(); ++j) {
        pairs.emplace_back(i, j);
      }
    }
    bool const double_check = opts.double_check && opts.order <= 3;

    std::vector<pair_result> results(pairs.size());
    parallel_for(pairs.size(), report.jobs, [&](std::size_t k) {
      auto const& left  = catalog[pairs[k].first];
      auto const& right = catalog[pairs[k].second];
      auto&       r     = results[k];
      auto        verdict
          = decide_isomorphism(left.power_semigroup(),
                               right.power_semigroup(),
                               left.power_fingerprint(),
                               right.power_fingerprint());
      r.pruned = verdict.fingerprint_mismatch.has_value();
      if (verdict.isomorphism) {
        r.iso = verdict.isomorphism->map();
      }
      if (double_check) {
        r.double_checked = true;
        auto unpruned    = decide_isomorphism(left.power_semigroup(),
                                           right.power_semigroup(),
                                           {.use_invariants = false});
        r.conflict       = unpruned.isomorphic() != verdict.isomorphic();
        if (unpruned.isomorphism && !r.iso) {
          r.iso = unpruned.isomorphism->map();
        }
      }
    });

    for (std::size_t k = 0; k < pairs.size(); ++k) {
      auto const& r = results[k];
      ++report.pairs_checked;
      report.pruned_by_fingerprint += r.pruned;
      report.searched += !r.pruned;
      report.double_checked += r.double_checked;
      report.double_check_conflicts += r.conflict;
      if (r.iso) {
        auto const& left  = catalog[pairs[k].first];
        auto const& right = catalog[pairs[k].second];
        morphism    check(left.power_semigroup(), right.power_semigroup(), *r.iso);
        report.counterexamples.push_back({pairs[k].first,
                                          pairs[k].second,
                                          left.semigroup(),
                                          right.semigroup(),
                                          *r.iso,
                                          check.is_isomorphism()});
      }
    }
    if (opts.record_time) {
      report.elapsed_ms
          = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
    }
    return report;
  }

  probe_report global_iso_probe(probe_options const& opts) {
    check_catalog_order(opts.order, opts.long_running);
    auto const start   = std::chrono::steady_clock::now();
    auto const catalog = enumerate_semigroups(
        opts.order, {.up_to_isomorphism = true,
                     .long_running      = opts.long_running,
                     .jobs              = opts.jobs});
    auto report = global_iso_probe(catalog, opts);
    if (opts.record_time) {
      report.elapsed_ms
          = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Singleton classifier checks
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::vector<mask_type> masks_of(subset_family const& F) {
      std::vector<mask_type> out;
      for (auto X : F.members()) {
        out.push_back(X.bits());
      }
      return out;
    }

    std::vector<mask_type> masks_of(std::vector<subset> const& v) {
      std::vector<mask_type> out;
      for (auto X : v) {
        out.push_back(X.bits());
      }
      return out;
    }
  }  // namespace

  void check_family_prop1(subset_family const& F,
                          std::string const&   entry,
                          std::string const&   family,
                          prop1_report&        report) {
    auto const& S = F.ambient();
    ++report.families_checked;
    auto violate = [&](std::string detail) {
      report.violations.push_back(
          {entry, family, masks_of(F), std::move(detail)});
    };

    auto const brute = cancellative_elements_bruteforce(F);
    auto const prop1 = classify_cancellatives_prop1(F);
    if (brute != prop1) {
      std::string detail = "classifiers disagree: brute force {";
      for (auto m : masks_of(brute)) {
        detail += " " + std::to_string(m);
      }
      detail += " } vs characterisation {";
      for (auto m : masks_of(prop1)) {
        detail += " " + std::to_string(m);
      }
      violate(detail + " }");
    }

    for (std::size_t u = 0; u < S.order(); ++u) {
      auto const in_family = cancellativity_in_family(F, subset::singleton(u));
      if (in_family.left != is_left_cancellative(S, u)
          || in_family.right != is_right_cancellative(S, u)) {
        violate("singleton {" + std::to_string(u)
                + "} cancellativity differs from that of the element");
      }
    }

    for (auto A : F.members()) {
      if (A.size() < 2) {
        continue;
      }
      ++report.witnesses_checked;
      try {
        auto const w = witness_noncancellative(F, A);
        if (!is_valid_witness(S, w) || !F.contains(w.lhs)
            || !F.contains(w.rhs)) {
          violate("invalid witness for multiplier "
                  + std::to_string(A.bits()));
        }
        (w.kind == witness_case::case1 ? report.case1_witnesses
                                       : report.case2_witnesses)++;
      } catch (theorem_violation const& e) {
        violate("witness construction failed for multiplier "
                + std::to_string(A.bits()) + ": " + e.what());
      }
    }
  }

  prop1_report prop1_exhaustive_check(prop1_options const& opts) {
    check_catalog_order(opts.order, opts.long_running);
    prop1_report report;
    report.order             = opts.order;
    report.seed              = opts.seed;
    report.samples_per_entry = opts.samples_per_entry;
    std::mt19937_64 rng(opts.seed);

    for (std::size_t n = 1; n <= opts.order; ++n) {
      auto const catalog = enumerate_semigroups(
          n, {.up_to_isomorphism = true, .long_running = true});
      for (auto const& e : catalog) {
        auto const& S = e.semigroup();
        if (!S.is_commutative()) {
          continue;
        }
        ++report.commutative_entries;
        std::string const id = e.canonical_id();

        check_family_prop1(full_family(S), id, "power", report);

        for (auto const& c : all_congruences(S)) {
          ++report.congruences_checked;
          std::string name = "congruence[";
          for (std::size_t x = 0; x < c.labels().size(); ++x) {
            name += (x ? "," : "") + std::to_string(c.labels()[x]);
          }
          check_family_prop1(congruence_family(S, c), id, name + "]", report);
        }

        std::uniform_int_distribution<std::size_t> count_dist(1, 3);
        std::uniform_int_distribution<mask_type>    mask_dist(
            1, full_mask(S.order()));
        for (std::size_t s = 0; s < opts.samples_per_entry; ++s) {
          std::vector<subset> gens;
          std::size_t const   k = count_dist(rng);
          for (std::size_t g = 0; g < k; ++g) {
            gens.emplace_back(mask_dist(rng));
          }
          ++report.closures_checked;
          std::string name = "closure[";
          for (std::size_t g = 0; g < gens.size(); ++g) {
            name += (g ? "," : "") + std::to_string(gens[g].bits());
          }
          check_family_prop1(
              downward_complete_closure(S, gens), id, name + "]", report);
        }
      }
    }
    return report;
  }

}  // namespace psg
