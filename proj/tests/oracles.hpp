#ifndef PSG_TESTS_ORACLES_HPP_
#define PSG_TESTS_ORACLES_HPP_

// Brute-force reference computations.  None of these call into the library's
// algorithms; they only read Cayley tables through finite_semigroup::product.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "psg/semigroup.hpp"

namespace oracle {

  using table   = std::vector<std::size_t>;  // row-major n x n
  using element_set = std::set<std::size_t>;

  inline bool associative(std::size_t n, table const& t) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          if (t[t[x * n + y] * n + z] != t[x * n + t[y * n + z]]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // Every table in [0, n)^(n*n), associative or not, in odometer order.
  template <typename Visit>
  void for_each_table(std::size_t n, Visit&& visit) {
    table t(n * n, 0);
    while (true) {
      visit(t);
      std::size_t i = t.size();
      while (i > 0 && t[i - 1] == n - 1) {
        t[--i] = 0;
      }
      if (i == 0) {
        return;
      }
      ++t[i - 1];
    }
  }

  inline std::vector<table> all_associative_tables(std::size_t n) {
    std::vector<table> out;
    for_each_table(n, [&](table const& t) {
      if (associative(n, t)) {
        out.push_back(t);
      }
    });
    return out;
  }

  // Table of the semigroup whose element perm[x] plays the role of x.
  inline table relabelled(std::size_t                     n,
                          table const&                    t,
                          std::vector<std::size_t> const& perm) {
    table out(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        out[perm[x] * n + perm[y]] = perm[t[x * n + y]];
      }
    }
    return out;
  }

  inline table canonical(std::size_t n, table const& t) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    table best = t;
    do {
      best = std::min(best, relabelled(n, t, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  }

  inline std::size_t class_count(std::size_t n) {
    std::set<table> classes;
    for (auto const& t : all_associative_tables(n)) {
      classes.insert(canonical(n, t));
    }
    return classes.size();
  }

  inline table table_of(psg::finite_semigroup const& S) {
    return table(S.table().begin(), S.table().end());
  }

  inline bool isomorphic(psg::finite_semigroup const& S,
                         psg::finite_semigroup const& T) {
    if (S.order() != T.order()) {
      return false;
    }
    std::size_t const        n = S.order();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      bool ok = true;
      for (std::size_t x = 0; ok && x < n; ++x) {
        for (std::size_t y = 0; ok && y < n; ++y) {
          ok = perm[S.product(x, y)] == T.product(perm[x], perm[y]);
        }
      }
      if (ok) {
        return true;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  }

  inline std::size_t count_isomorphisms(psg::finite_semigroup const& S,
                                        psg::finite_semigroup const& T) {
    if (S.order() != T.order()) {
      return 0;
    }
    std::size_t const        n = S.order();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::size_t count = 0;
    do {
      bool ok = true;
      for (std::size_t x = 0; ok && x < n; ++x) {
        for (std::size_t y = 0; ok && y < n; ++y) {
          ok = perm[S.product(x, y)] == T.product(perm[x], perm[y]);
        }
      }
      count += ok;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
  }

  ////////////////////////////////////////////////////////////////////////
  // Subsets as std::set
  ////////////////////////////////////////////////////////////////////////

  inline element_set to_set(std::uint64_t mask) {
    element_set out;
    for (std::size_t x = 0; x < 64; ++x) {
      if ((mask >> x) & 1) {
        out.insert(x);
      }
    }
    return out;
  }

  inline std::uint64_t to_mask(element_set const& X) {
    std::uint64_t m = 0;
    for (auto x : X) {
      m |= std::uint64_t(1) << x;
    }
    return m;
  }

  inline element_set product(psg::finite_semigroup const& S,
                             element_set const&           X,
                             element_set const&           Y) {
    element_set out;
    for (auto x : X) {
      for (auto y : Y) {
        out.insert(S.product(x, y));
      }
    }
    return out;
  }

  inline std::vector<element_set> non_empty_subsets(element_set const& X) {
    std::vector<std::size_t> v(X.begin(), X.end());
    std::vector<element_set> out;
    for (std::uint64_t m = 1; m < (std::uint64_t(1) << v.size()); ++m) {
      element_set s;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if ((m >> i) & 1) {
          s.insert(v[i]);
        }
      }
      out.push_back(s);
    }
    return out;
  }

  // Least family containing the singletons and `generators` that is closed
  // under products and non-empty subsets, by naive fixpoint iteration.
  inline std::set<element_set>
  closure(psg::finite_semigroup const&    S,
          std::vector<element_set> const& generators) {
    std::set<element_set> F;
    for (std::size_t x = 0; x < S.order(); ++x) {
      F.insert({x});
    }
    for (auto const& g : generators) {
      F.insert(g);
    }
    bool changed = true;
    while (changed) {
      changed = false;
      std::set<element_set> next = F;
      for (auto const& X : F) {
        for (auto const& Y : F) {
          next.insert(product(S, X, Y));
        }
        for (auto const& Z : non_empty_subsets(X)) {
          next.insert(Z);
        }
      }
      if (next.size() != F.size()) {
        F       = std::move(next);
        changed = true;
      }
    }
    return F;
  }

  // Whether X -> M X and X -> X M are injective on the members of F.
  inline bool cancellative_in(psg::finite_semigroup const&    S,
                              std::vector<element_set> const& F,
                              element_set const&              M) {
    std::set<element_set> left, right;
    for (auto const& X : F) {
      left.insert(product(S, M, X));
      right.insert(product(S, X, M));
    }
    return left.size() == F.size() && right.size() == F.size();
  }

  inline std::vector<element_set> all_non_empty_subsets(std::size_t n) {
    std::vector<element_set> out;
    for (std::uint64_t m = 1; m < (std::uint64_t(1) << n); ++m) {
      out.push_back(to_set(m));
    }
    return out;
  }

  // Label vectors with first-occurrence numbering that are compatible with
  // the product, found by scanning all n^n labelings.
  inline std::set<std::vector<std::size_t>>
  congruences(psg::finite_semigroup const& S) {
    std::size_t const                  n = S.order();
    std::set<std::vector<std::size_t>> out;
    std::vector<std::size_t>           labels(n, 0);
    while (true) {
      bool ok = true;
      for (std::size_t a = 0; ok && a < n; ++a) {
        for (std::size_t b = 0; ok && b < n; ++b) {
          for (std::size_t c = 0; ok && c < n; ++c) {
            for (std::size_t d = 0; ok && d < n; ++d) {
              if (labels[a] == labels[b] && labels[c] == labels[d]) {
                ok = labels[S.product(a, c)] == labels[S.product(b, d)];
              }
            }
          }
        }
      }
      if (ok) {
        std::map<std::size_t, std::size_t> rename;
        std::vector<std::size_t>           normal;
        for (auto l : labels) {
          normal.push_back(rename.emplace(l, rename.size()).first->second);
        }
        out.insert(normal);
      }
      std::size_t i = n;
      while (i > 0 && labels[i - 1] == n - 1) {
        labels[--i] = 0;
      }
      if (i == 0) {
        return out;
      }
      ++labels[i - 1];
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Numerical monoids
  ////////////////////////////////////////////////////////////////////////

  // Non-members of the monoid generated by `gens`, found by reachability up
  // to max(gens)^2, which exceeds every Frobenius number for gcd-1 sets.
  inline std::vector<std::uint64_t>
  gaps(std::vector<std::uint64_t> const& gens) {
    std::uint64_t const top   = *std::max_element(gens.begin(), gens.end());
    std::uint64_t const bound = top * top + top;
    std::vector<bool>   member(bound + 1, false);
    member[0] = true;
    for (std::uint64_t x = 1; x <= bound; ++x) {
      for (auto g : gens) {
        if (g <= x && member[x - g]) {
          member[x] = true;
          break;
        }
      }
    }
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = 0; x <= bound; ++x) {
      if (!member[x]) {
        out.push_back(x);
      }
    }
    return out;
  }

  inline std::set<std::uint64_t> sumset(std::vector<std::uint64_t> const& X,
                                        std::vector<std::uint64_t> const& Y) {
    std::set<std::uint64_t> out;
    for (auto x : X) {
      for (auto y : Y) {
        out.insert(x + y);
      }
    }
    return out;
  }

}  // namespace oracle

#endif  // PSG_TESTS_ORACLES_HPP_
