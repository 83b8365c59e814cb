#include "psg/isomorphism.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>

#include "psg/error.hpp"

namespace psg {

  ////////////////////////////////////////////////////////////////////////
  // Invariants
  ////////////////////////////////////////////////////////////////////////

  std::vector<element_invariant> element_invariants(finite_semigroup const& S) {
    std::size_t const              n = S.order();
    std::vector<element_invariant> out(n);
    std::vector<std::uint16_t>     factorisations(n, 0);
    std::vector<std::uint8_t>      roots(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        ++factorisations[S.product(x, y)];
      }
      ++roots[S.product(x, x)];
    }
    std::vector<std::size_t> first_seen(n);
    for (std::size_t a = 0; a < n; ++a) {
      auto& inv      = out[a];
      inv.idempotent = S.product(a, a) == a;

      // Powers a^1, a^2, ... until one repeats.
      std::fill(first_seen.begin(), first_seen.end(), 0);
      std::size_t p = a;
      for (std::size_t k = 1;; ++k) {
        if (first_seen[p] != 0) {
          inv.index  = static_cast<std::uint8_t>(first_seen[p]);
          inv.period = static_cast<std::uint8_t>(k - first_seen[p]);
          break;
        }
        first_seen[p] = k;
        p             = S.product(p, a);
      }

      std::uint64_t left = 0, right = 0;
      std::size_t   commuting = 0;
      for (std::size_t x = 0; x < n; ++x) {
        left |= std::uint64_t(1) << S.product(a, x);
        right |= std::uint64_t(1) << S.product(x, a);
        commuting += S.product(a, x) == S.product(x, a);
      }
      inv.left_image     = static_cast<std::uint8_t>(std::popcount(left));
      inv.right_image    = static_cast<std::uint8_t>(std::popcount(right));
      inv.commuting      = static_cast<std::uint8_t>(commuting);
      inv.factorisations = factorisations[a];
      inv.square_roots   = roots[a];
    }
    return out;
  }

  namespace {
    void hash_combine(std::size_t& seed, std::size_t v) {
      seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    }
  }  // namespace

  iso_fingerprint::iso_fingerprint(finite_semigroup const& S)
      : _order(S.order()),
        _commutative(S.is_commutative()),
        _idempotents(0),
        _has_identity(S.is_monoid()),
        _elements(element_invariants(S)),
        _hash(0) {
    std::sort(_elements.begin(), _elements.end());
    for (auto const& e : _elements) {
      _idempotents += e.idempotent;
    }
    hash_combine(_hash, _order);
    hash_combine(_hash, _commutative);
    hash_combine(_hash, _idempotents);
    hash_combine(_hash, _has_identity);
    for (auto const& e : _elements) {
      hash_combine(_hash, e.idempotent);
      hash_combine(_hash, e.index);
      hash_combine(_hash, e.period);
      hash_combine(_hash, e.left_image);
      hash_combine(_hash, e.right_image);
      hash_combine(_hash, e.commuting);
      hash_combine(_hash, e.factorisations);
      hash_combine(_hash, e.square_roots);
    }
  }

  std::optional<std::string>
  iso_fingerprint::mismatch(iso_fingerprint const& that) const {
    if (_order != that._order) {
      return "order";
    }
    if (_commutative != that._commutative) {
      return "commutativity";
    }
    if (_has_identity != that._has_identity) {
      return "identity";
    }
    if (_idempotents != that._idempotents) {
      return "idempotent count";
    }
    // Compare each component as a sorted multiset so the message names the
    // coarsest invariant that separates the two.
    auto component = [&](auto proj) {
      std::vector<std::size_t> a, b;
      for (auto const& e : _elements) {
        a.push_back(proj(e));
      }
      for (auto const& e : that._elements) {
        b.push_back(proj(e));
      }
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      return a != b;
    };
    if (component([](auto const& e) { return e.index * 256 + e.period; })) {
      return "monogenic index/period";
    }
    if (component([](auto const& e) { return e.left_image; })) {
      return "left multiplication image sizes";
    }
    if (component([](auto const& e) { return e.right_image; })) {
      return "right multiplication image sizes";
    }
    if (component([](auto const& e) { return e.commuting; })) {
      return "commuting-element counts";
    }
    if (component([](auto const& e) { return e.factorisations; })) {
      return "factorisation counts";
    }
    if (component([](auto const& e) { return e.square_roots; })) {
      return "square-root counts";
    }
    if (_elements != that._elements) {
      return "joint element invariants";
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // morphism
  ////////////////////////////////////////////////////////////////////////

  morphism::morphism(finite_semigroup         source,
                     finite_semigroup         target,
                     std::vector<std::size_t> map)
      : _source(std::move(source)),
        _target(std::move(target)),
        _map(std::move(map)),
        _homomorphism(true),
        _injective(true),
        _surjective(false) {
    std::size_t const n = _source.order();
    std::size_t const m = _target.order();
    if (_map.size() != n) {
      throw index_out_of_range("map has " + std::to_string(_map.size())
                               + " entries, source has order "
                               + std::to_string(n));
    }
    std::uint64_t image = 0;
    for (auto y : _map) {
      if (y >= m) {
        throw index_out_of_range("map value " + std::to_string(y)
                                 + " is not in [0, " + std::to_string(m)
                                 + ")");
      }
      if ((image >> y) & 1) {
        _injective = false;
      }
      image |= std::uint64_t(1) << y;
    }
    _surjective = image == full_mask(m);
    for (std::size_t x = 0; x < n && _homomorphism; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (_map[_source.product(x, y)]
            != _target.product(_map[x], _map[y])) {
          _homomorphism = false;
          break;
        }
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Backtracking search
  ////////////////////////////////////////////////////////////////////////

  namespace {
    constexpr std::size_t unset = static_cast<std::size_t>(-1);

    class iso_search {
     public:
      iso_search(finite_semigroup const& S,
                 finite_semigroup const& T,
                 bool                    use_invariants)
          : _S(S),
            _T(T),
            _n(S.order()),
            _use_invariants(use_invariants),
            _map(_n, unset),
            _inv(_n, unset) {
        if (_use_invariants) {
          _inv_S = element_invariants(S);
          _inv_T = element_invariants(T);
        }
        _order.resize(_n);
        std::iota(_order.begin(), _order.end(), 0);
        if (_use_invariants) {
          std::map<element_invariant, std::size_t> class_size;
          for (auto const& e : _inv_S) {
            ++class_size[e];
          }
          // Rarest invariant class first, ties broken by the invariant and
          // then by index.
          std::stable_sort(
              _order.begin(), _order.end(), [&](std::size_t a, std::size_t b) {
                auto const ca = class_size[_inv_S[a]];
                auto const cb = class_size[_inv_S[b]];
                if (ca != cb) {
                  return ca < cb;
                }
                return _inv_S[a] < _inv_S[b];
              });
        }
      }

      // Returns true if the visitor asked to stop.
      template <typename Visit>
      bool run(Visit&& visit) {
        return recurse(0, visit);
      }

     private:
      template <typename Visit>
      bool recurse(std::size_t depth, Visit& visit) {
        while (depth < _n && _map[_order[depth]] != unset) {
          ++depth;
        }
        if (depth == _n) {
          return !visit(_map);
        }
        std::size_t const x = _order[depth];
        for (std::size_t y = 0; y < _n; ++y) {
          if (_inv[y] != unset
              || (_use_invariants && _inv_S[x] != _inv_T[y])) {
            continue;
          }
          std::size_t const mark = _trail.size();
          if (assign(x, y) && recurse(depth + 1, visit)) {
            return true;
          }
          undo(mark);
        }
        return false;
      }

      // Assigns x -> y and every image forced by products with assigned
      // elements.  On conflict returns false; the caller undoes the trail.
      bool assign(std::size_t x, std::size_t y) {
        _queue.clear();
        _queue.emplace_back(x, y);
        for (std::size_t q = 0; q < _queue.size(); ++q) {
          auto const [u, v] = _queue[q];
          if (_map[u] == v) {
            continue;
          }
          if (_map[u] != unset || _inv[v] != unset) {
            return false;
          }
          if (_use_invariants && _inv_S[u] != _inv_T[v]) {
            return false;
          }
          _map[u] = v;
          _inv[v] = u;
          _trail.push_back(u);
          for (std::size_t z : _trail) {
            std::size_t const w = _map[z];
            _queue.emplace_back(_S.product(u, z), _T.product(v, w));
            _queue.emplace_back(_S.product(z, u), _T.product(w, v));
          }
        }
        return true;
      }

      void undo(std::size_t mark) {
        while (_trail.size() > mark) {
          std::size_t const u = _trail.back();
          _trail.pop_back();
          _inv[_map[u]] = unset;
          _map[u]       = unset;
        }
      }

      finite_semigroup const&                            _S;
      finite_semigroup const&                            _T;
      std::size_t                                        _n;
      bool                                               _use_invariants;
      std::vector<element_invariant>                     _inv_S;
      std::vector<element_invariant>                     _inv_T;
      std::vector<std::size_t>                           _order;
      std::vector<std::size_t>                           _map;
      std::vector<std::size_t>                           _inv;
      std::vector<std::size_t>                           _trail;
      std::vector<std::pair<std::size_t, std::size_t>> _queue;
    };

    std::optional<morphism> search_one(finite_semigroup const& S,
                                       finite_semigroup const& T,
                                       bool                    use_invariants) {
      std::optional<morphism> out;
      iso_search(S, T, use_invariants).run([&](auto const& map) {
        out.emplace(S, T, map);
        return false;
      });
      if (out && !out->is_isomorphism()) {
        throw theorem_violation("isomorphism search returned a map that "
                                "does not verify");
      }
      return out;
    }
  }  // namespace

  iso_verdict decide_isomorphism(finite_semigroup const& S,
                                 finite_semigroup const& T,
                                 iso_fingerprint const&  fS,
                                 iso_fingerprint const&  fT) {
    iso_verdict out;
    if (S.order() != T.order()) {
      out.fingerprint_mismatch = "order";
      return out;
    }
    if (auto why = fS.mismatch(fT)) {
      out.fingerprint_mismatch = std::move(why);
      return out;
    }
    out.isomorphism = search_one(S, T, true);
    return out;
  }

  iso_verdict decide_isomorphism(finite_semigroup const& S,
                                 finite_semigroup const& T,
                                 iso_search_options      options) {
    if (options.use_invariants) {
      return decide_isomorphism(S, T, iso_fingerprint(S), iso_fingerprint(T));
    }
    iso_verdict out;
    if (S.order() == T.order()) {
      out.isomorphism = search_one(S, T, false);
    }
    return out;
  }

  std::optional<morphism> find_isomorphism(finite_semigroup const& S,
                                           finite_semigroup const& T,
                                           iso_search_options      options) {
    return decide_isomorphism(S, T, options).isomorphism;
  }

  std::size_t
  for_each_isomorphism(finite_semigroup const&                     S,
                       finite_semigroup const&                     T,
                       std::function<bool(morphism const&)> const& visit) {
    if (S.order() != T.order()
        || iso_fingerprint(S).mismatch(iso_fingerprint(T))) {
      return 0;
    }
    std::size_t count = 0;
    iso_search(S, T, true).run([&](auto const& map) {
      morphism f(S, T, map);
      if (!f.is_isomorphism()) {
        throw theorem_violation("isomorphism search returned a map that "
                                "does not verify");
      }
      ++count;
      return visit(f);
    });
    return count;
  }

  std::vector<morphism> all_isomorphisms(finite_semigroup const& S,
                                         finite_semigroup const& T) {
    std::vector<morphism> out;
    for_each_isomorphism(S, T, [&](morphism const& f) {
      out.push_back(f);
      return true;
    });
    return out;
  }

  std::size_t
  for_each_homomorphism(finite_semigroup const&                     S,
                        finite_semigroup const&                     T,
                        std::function<bool(morphism const&)> const& visit) {
    std::size_t const n = S.order();
    std::size_t const m = T.order();
    double const      total = std::pow(double(m), double(n));
    if (total > double(1 << 24)) {
      throw order_cap_exceeded("exhaustive homomorphism scan over "
                               + std::to_string(m) + "^" + std::to_string(n)
                               + " maps is too large");
    }
    std::vector<std::size_t> map(n, 0);
    std::size_t              count = 0;
    while (true) {
      bool hom = true;
      for (std::size_t x = 0; x < n && hom; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          if (map[S.product(x, y)] != T.product(map[x], map[y])) {
            hom = false;
            break;
          }
        }
      }
      if (hom) {
        ++count;
        if (!visit(morphism(S, T, map))) {
          return count;
        }
      }
      // Odometer increment, last position fastest.
      std::size_t i = n;
      while (i > 0) {
        --i;
        if (++map[i] < m) {
          break;
        }
        map[i] = 0;
        if (i == 0) {
          return count;
        }
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // family_morphism
  ////////////////////////////////////////////////////////////////////////

  family_morphism::family_morphism(subset_family            source,
                                   subset_family            target,
                                   std::vector<std::size_t> map)
      : _source(std::move(source)),
        _target(std::move(target)),
        _members(family_semigroup(_source),
                 family_semigroup(_target),
                 std::move(map)) {}

  subset family_morphism::operator()(subset X) const {
    auto i = _source.index_of(X);
    if (!i) {
      throw precondition_violated("subset is not a member of the source "
                                  "family");
    }
    return _target[_members(*i)];
  }

  family_morphism as_power_morphism(finite_semigroup const& H,
                                    finite_semigroup const& K,
                                    morphism const&         F) {
    // full_family lists masks 1, 2, ..., matching the power semigroup layout.
    return family_morphism(full_family(H), full_family(K), F.map());
  }

  family_morphism lift_isomorphism(morphism const& f) {
    if (!f.is_isomorphism()) {
      throw precondition_violated("lift requires an isomorphism");
    }
    auto const& H = f.source();
    auto const& K = f.target();
    subset_family            P = full_family(H);
    subset_family            Q = full_family(K);
    std::vector<std::size_t> map(P.size());
    for (std::size_t i = 0; i < P.size(); ++i) {
      mask_type image = 0;
      for (auto x : P[i].elements()) {
        image |= mask_type(1) << f(x);
      }
      subset const FX(image);
      if (FX.size() != P[i].size()) {
        throw theorem_violation("lifted map changed the cardinality of a "
                                "subset");
      }
      map[i] = *Q.index_of(FX);
    }
    family_morphism out(std::move(P), std::move(Q), std::move(map));
    if (!out.is_isomorphism()) {
      throw theorem_violation("lift of an isomorphism is not an isomorphism");
    }
    return out;
  }

  morphism restrict_isomorphism(family_morphism const& F) {
    auto const& H = F.source().ambient();
    auto const& K = F.target().ambient();
    if (!F.is_isomorphism()) {
      throw precondition_violated("restriction requires an isomorphism of "
                                  "families");
    }
    if (!F.source().is_downward_complete()
        || !F.target().is_downward_complete()) {
      throw precondition_violated("both families must be downward complete");
    }
    if (!is_cancellative(H) || !is_cancellative(K)) {
      throw precondition_violated("both ambient semigroups must be "
                                  "cancellative");
    }
    if (!H.is_commutative() && !K.is_commutative()) {
      throw precondition_violated("at least one ambient semigroup must be "
                                  "commutative");
    }
    std::vector<std::size_t> map(H.order());
    for (std::size_t x = 0; x < H.order(); ++x) {
      subset const image = F(subset::singleton(x));
      if (!image.is_singleton()) {
        throw theorem_violation("singleton {" + std::to_string(x)
                                + "} is mapped to a set of size "
                                + std::to_string(image.size()));
      }
      map[x] = image.front();
    }
    morphism out(H, K, std::move(map));
    if (!out.is_isomorphism()) {
      throw theorem_violation("restriction to singletons is not an "
                              "isomorphism");
    }
    return out;
  }

  bool verify_commutativity_transfer(family_morphism const& F) {
    if (!F.is_isomorphism()) {
      throw precondition_violated("commutativity transfer requires an "
                                  "isomorphism");
    }
    if (!F.source().is_downward_complete()
        || !F.target().is_downward_complete()) {
      throw precondition_violated("both families must be downward complete");
    }
    if (!F.source().ambient().is_commutative()) {
      throw precondition_violated("source ambient semigroup must be "
                                  "commutative");
    }
    return F.target().ambient().is_commutative();
  }

  bool cancellative_preservation_check(morphism const& f) {
    if (!f.is_isomorphism()) {
      throw precondition_violated("cancellativity preservation requires an "
                                  "isomorphism");
    }
    for (std::size_t a = 0; a < f.source().order(); ++a) {
      if (is_left_cancellative(f.source(), a)
              != is_left_cancellative(f.target(), f(a))
          || is_right_cancellative(f.source(), a)
                 != is_right_cancellative(f.target(), f(a))) {
        return false;
      }
    }
    return true;
  }

}  // namespace psg
