#include "psg/power.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>

#include "psg/error.hpp"

namespace psg {

  subset::subset(mask_type bits) : _bits(bits) {
    if (bits == 0) {
      throw precondition_violated("subsets must be non-empty");
    }
  }

  subset subset::singleton(std::size_t x) {
    if (x >= 64) {
      throw index_out_of_range("element " + std::to_string(x)
                               + " does not fit a 64-bit mask");
    }
    return subset(mask_type(1) << x);
  }

  subset subset::of(std::span<std::size_t const> elements) {
    mask_type m = 0;
    for (auto x : elements) {
      if (x >= 64) {
        throw index_out_of_range("element " + std::to_string(x)
                                 + " does not fit a 64-bit mask");
      }
      m |= mask_type(1) << x;
    }
    return subset(m);
  }

  subset subset::of(std::initializer_list<std::size_t> elements) {
    return of(std::span<std::size_t const>(elements.begin(), elements.size()));
  }

  std::vector<std::size_t> subset::elements() const {
    std::vector<std::size_t> out;
    for (mask_type m = _bits; m != 0; m &= m - 1) {
      out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    }
    return out;
  }

  mask_type product_mask(finite_semigroup const& S, mask_type X, mask_type Y) {
    mask_type out = 0;
    for (mask_type xs = X; xs != 0; xs &= xs - 1) {
      auto const row = S.row(static_cast<std::size_t>(std::countr_zero(xs)));
      for (mask_type ys = Y; ys != 0; ys &= ys - 1) {
        out |= mask_type(1) << row[static_cast<std::size_t>(std::countr_zero(ys))];
      }
    }
    return out;
  }

  namespace {
    void check_ambient(finite_semigroup const& S, subset X) {
      if ((X.bits() & ~full_mask(S.order())) != 0) {
        throw ambient_mismatch("subset with mask " + std::to_string(X.bits())
                               + " is not inside a carrier of order "
                               + std::to_string(S.order()));
      }
    }
  }  // namespace

  subset setwise_product(finite_semigroup const& S, subset X, subset Y) {
    check_ambient(S, X);
    check_ambient(S, Y);
    return subset(product_mask(S, X.bits(), Y.bits()));
  }

  finite_semigroup build_power_semigroup(finite_semigroup const& S,
                                         std::size_t             cap) {
    std::size_t const n = S.order();
    if (n > cap) {
      throw order_cap_exceeded("power semigroup of an order-"
                               + std::to_string(n)
                               + " semigroup exceeds the materialisation cap "
                               + std::to_string(cap));
    }
    std::size_t const m = (std::size_t(1) << n) - 1;
    if (m > max_order) {
      throw order_cap_exceeded("power semigroup of order " + std::to_string(m)
                               + " exceeds the supported maximum "
                               + std::to_string(max_order));
    }
    std::vector<std::uint8_t> table(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        table[i * m + j] = static_cast<std::uint8_t>(
            power_index(product_mask(S, power_mask(i), power_mask(j))));
      }
    }
    return validate_semigroup(m, table);
  }

  ////////////////////////////////////////////////////////////////////////
  // subset_family
  ////////////////////////////////////////////////////////////////////////

  subset_family::subset_family(finite_semigroup ambient,
                               std::vector<subset> members)
      : _ambient(std::move(ambient)),
        _members(std::move(members)),
        _subsemigroup(false),
        _downward_complete(false) {
    if (_members.empty()) {
      throw precondition_violated("a subset family needs at least one member");
    }
    for (auto X : _members) {
      check_ambient(_ambient, X);
    }
    std::sort(_members.begin(), _members.end());
    _members.erase(std::unique(_members.begin(), _members.end()),
                   _members.end());

    _subsemigroup = true;
    for (auto X : _members) {
      for (auto Y : _members) {
        if (!contains(subset(product_mask(_ambient, X.bits(), Y.bits())))) {
          _subsemigroup = false;
          break;
        }
      }
      if (!_subsemigroup) {
        break;
      }
    }
    _downward_complete = static_cast<bool>(check_downward_complete(*this));
  }

  bool subset_family::contains(subset X) const noexcept {
    return std::binary_search(_members.begin(), _members.end(), X);
  }

  std::optional<std::size_t> subset_family::index_of(subset X) const noexcept {
    auto it = std::lower_bound(_members.begin(), _members.end(), X);
    if (it == _members.end() || *it != X) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - _members.begin());
  }

  downward_completeness check_downward_complete(subset_family const& F) {
    using failure = downward_completeness::failure;
    auto const& S = F.ambient();

    mask_type covered = 0;
    for (auto X : F.members()) {
      covered |= X.bits();
    }
    if (covered != full_mask(S.order())) {
      downward_completeness out;
      out.reason  = failure::not_covering;
      out.element = static_cast<std::size_t>(
          std::countr_zero(~covered & full_mask(S.order())));
      return out;
    }
    for (auto X : F.members()) {
      // Proper non-empty submasks, in descending order.
      for (mask_type sub = (X.bits() - 1) & X.bits(); sub != 0;
           sub        = (sub - 1) & X.bits()) {
        if (!F.contains(subset(sub))) {
          downward_completeness out;
          out.reason = failure::not_subset_closed;
          out.first  = X;
          out.second = subset(sub);
          return out;
        }
      }
    }
    for (auto X : F.members()) {
      for (auto Y : F.members()) {
        subset const XY(product_mask(S, X.bits(), Y.bits()));
        if (!F.contains(XY)) {
          downward_completeness out;
          out.reason = failure::not_closed;
          out.first  = X;
          out.second = Y;
          return out;
        }
      }
    }
    return {};
  }

  subset_family full_family(finite_semigroup const& S) {
    if (S.order() > 20) {
      throw order_cap_exceeded("full family of an order-"
                               + std::to_string(S.order())
                               + " semigroup is too large to list");
    }
    std::vector<subset> members;
    mask_type const     top = full_mask(S.order());
    members.reserve(static_cast<std::size_t>(top));
    for (mask_type m = 1; m <= top; ++m) {
      members.emplace_back(m);
    }
    return subset_family(S, std::move(members));
  }

  subset_family singleton_family(finite_semigroup const& S) {
    std::vector<subset> members;
    for (std::size_t x = 0; x < S.order(); ++x) {
      members.push_back(subset::singleton(x));
    }
    return subset_family(S, std::move(members));
  }

  subset_family downward_complete_closure(finite_semigroup const& S,
                                          std::span<subset const> generators,
                                          std::size_t             limit) {
    for (auto X : generators) {
      check_ambient(S, X);
    }
    std::unordered_set<mask_type> seen;
    std::vector<mask_type>        members;
    std::deque<mask_type>         queue;

    // Adding a set adds all of its non-empty subsets.
    auto add = [&](mask_type m) {
      if (seen.contains(m)) {
        return;
      }
      for (mask_type sub = m; sub != 0; sub = (sub - 1) & m) {
        if (seen.insert(sub).second) {
          if (seen.size() > limit) {
            throw order_cap_exceeded(
                "downward complete closure exceeds "
                + std::to_string(limit) + " members");
          }
          members.push_back(sub);
          queue.push_back(sub);
        }
      }
    };

    for (std::size_t x = 0; x < S.order(); ++x) {
      add(mask_type(1) << x);
    }
    for (auto X : generators) {
      add(X.bits());
    }
    // Each new member is multiplied against every member present when it is
    // processed; members added later handle the remaining pairs.
    while (!queue.empty()) {
      mask_type const X = queue.front();
      queue.pop_front();
      std::size_t const count = members.size();
      for (std::size_t i = 0; i < count; ++i) {
        mask_type const Y = members[i];
        add(product_mask(S, X, Y));
        add(product_mask(S, Y, X));
      }
    }
    std::vector<subset> out;
    out.reserve(members.size());
    for (auto m : members) {
      out.emplace_back(m);
    }
    return subset_family(S, std::move(out));
  }

  subset_family congruence_family(finite_semigroup const& S,
                                  congruence const&       c) {
    if (c.labels().size() != S.order()) {
      throw ambient_mismatch("congruence and semigroup have different orders");
    }
    std::vector<subset> members;
    for (mask_type block : c.block_masks()) {
      for (mask_type sub = block; sub != 0; sub = (sub - 1) & block) {
        members.emplace_back(sub);
      }
    }
    return subset_family(S, std::move(members));
  }

  finite_semigroup family_semigroup(subset_family const& F) {
    if (!F.is_subsemigroup()) {
      throw precondition_violated("family is not closed under setwise product");
    }
    std::size_t const m = F.size();
    if (m > max_order) {
      throw order_cap_exceeded("family has " + std::to_string(m)
                               + " members, more than "
                               + std::to_string(max_order));
    }
    std::vector<std::uint8_t> table(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        subset const XY(product_mask(F.ambient(), F[i].bits(), F[j].bits()));
        table[i * m + j] = static_cast<std::uint8_t>(*F.index_of(XY));
      }
    }
    return validate_semigroup(m, table);
  }

}  // namespace psg
