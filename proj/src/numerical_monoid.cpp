#include "psg/numerical_monoid.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "psg/error.hpp"

namespace psg {

  numerical_monoid::numerical_monoid(std::vector<std::uint64_t> generators)
      : _generators(std::move(generators)), _gaps() {
    std::sort(_generators.begin(), _generators.end());
    _generators.erase(std::unique(_generators.begin(), _generators.end()),
                      _generators.end());
    if (_generators.empty()) {
      throw precondition_violated("a numerical monoid needs generators");
    }
    if (_generators.front() == 0) {
      throw precondition_violated("generators must be positive");
    }
    std::uint64_t g = 0;
    for (auto x : _generators) {
      g = std::gcd(g, x);
    }
    if (g != 1) {
      throw precondition_violated("generators have gcd " + std::to_string(g)
                                  + ", the complement would be infinite");
    }
    if (_generators.back() > (std::uint64_t(1) << 20)) {
      throw precondition_violated("generators above 2^20 are not supported");
    }

    std::uint64_t const smallest = _generators.front();
    std::uint64_t       horizon  = smallest * _generators.back() + smallest;
    while (true) {
      std::vector<char> member(horizon + 1, 0);
      member[0] = 1;
      for (std::uint64_t x = 1; x <= horizon; ++x) {
        for (auto g : _generators) {
          if (g > x) {
            break;
          }
          if (member[x - g]) {
            member[x] = 1;
            break;
          }
        }
      }
      // Once `smallest` consecutive members appear, adding the smallest
      // generator covers everything beyond.
      std::uint64_t run = 0;
      std::uint64_t x   = 0;
      for (; x <= horizon && run < smallest; ++x) {
        run = member[x] ? run + 1 : 0;
      }
      if (run == smallest) {
        std::uint64_t const run_start = x - smallest;
        _gaps.clear();
        for (std::uint64_t y = 0; y < run_start; ++y) {
          if (!member[y]) {
            _gaps.push_back(y);
          }
        }
        return;
      }
      horizon *= 2;
    }
  }

  bool numerical_monoid::contains(std::uint64_t x) const noexcept {
    return !std::binary_search(_gaps.begin(), _gaps.end(), x);
  }

  bool nm_membership(numerical_monoid const& M, std::uint64_t x) {
    return M.contains(x);
  }

  bool nm_equal(numerical_monoid const& M1, numerical_monoid const& M2) {
    return M1.gaps() == M2.gaps();
  }

  namespace {
    void require_members(numerical_monoid const&        M,
                         std::span<std::uint64_t const> X) {
      for (auto x : X) {
        if (!M.contains(x)) {
          throw non_member_input(std::to_string(x)
                                 + " is not in the numerical monoid");
        }
      }
    }

    std::vector<std::uint64_t> sumset(std::span<std::uint64_t const> X,
                                      std::span<std::uint64_t const> Y) {
      std::vector<std::uint64_t> out;
      out.reserve(X.size() * Y.size());
      for (auto x : X) {
        for (auto y : Y) {
          out.push_back(x + y);
        }
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }

    std::vector<std::uint64_t> sorted_set(std::span<std::uint64_t const> X) {
      std::vector<std::uint64_t> out(X.begin(), X.end());
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }
  }  // namespace

  std::vector<std::uint64_t> nm_sumset(numerical_monoid const&        M,
                                       std::span<std::uint64_t const> X,
                                       std::span<std::uint64_t const> Y) {
    require_members(M, X);
    require_members(M, Y);
    auto out = sumset(X, Y);
    for (auto z : out) {
      if (!M.contains(z)) {
        throw theorem_violation("numerical monoid is not closed under "
                                "addition at "
                                + std::to_string(z));
      }
    }
    return out;
  }

  nm_witness nm_witness_noncancellative(numerical_monoid const&        M,
                                        std::span<std::uint64_t const> A) {
    auto const set = sorted_set(A);
    if (set.size() < 2) {
      throw precondition_violated("multiplier must have at least two "
                                  "elements");
    }
    require_members(M, set);
    nm_witness w;
    w.multiplier = set;
    w.a          = set[0];
    w.b          = set[1];
    w.lhs        = sumset(set, set);
    w.rhs        = w.lhs;
    w.rhs.erase(std::find(w.rhs.begin(), w.rhs.end(), w.a + w.b));
    if (!is_valid_nm_witness(M, w)) {
      throw theorem_violation("numerical monoid witness does not certify "
                              "non-cancellativity");
    }
    return w;
  }

  bool is_valid_nm_witness(numerical_monoid const& M, nm_witness const& w) {
    for (auto const* X : {&w.multiplier, &w.lhs, &w.rhs}) {
      if (X->empty()
          || !std::all_of(X->begin(), X->end(),
                          [&](auto x) { return M.contains(x); })) {
        return false;
      }
    }
    if (w.lhs == w.rhs) {
      return false;
    }
    if (!std::binary_search(w.rhs.begin(), w.rhs.end(), w.b + w.b)) {
      return false;
    }
    return sumset(w.multiplier, w.lhs) == sumset(w.multiplier, w.rhs);
  }

}  // namespace psg
