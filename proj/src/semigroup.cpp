#include "psg/semigroup.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <utility>

#include "psg/error.hpp"

namespace psg {

  namespace {
    std::string triple_message(std::size_t x, std::size_t y, std::size_t z) {
      std::ostringstream os;
      os << "non-associative triple (" << x << ", " << y << ", " << z
         << "): (xy)z != x(yz)";
      return os.str();
    }

    std::string quadruple_message(std::size_t x1,
                                  std::size_t y1,
                                  std::size_t x2,
                                  std::size_t y2) {
      std::ostringstream os;
      os << "labels are not a congruence: " << x1 << " ~ " << y1 << " and "
         << x2 << " ~ " << y2 << " but " << x1 << "*" << x2 << " !~ " << y1
         << "*" << y2;
      return os.str();
    }
  }  // namespace

  non_associative::non_associative(std::size_t x, std::size_t y, std::size_t z)
      : error(triple_message(x, y, z)), _triple{x, y, z} {}

  not_compatible::not_compatible(std::size_t x1,
                                 std::size_t y1,
                                 std::size_t x2,
                                 std::size_t y2)
      : error(quadruple_message(x1, y1, x2, y2)), _quadruple{x1, y1, x2, y2} {}

  finite_semigroup::finite_semigroup(std::size_t n, std::vector<std::uint8_t> t)
      : _order(n), _table(std::move(t)), _commutative(true), _identity() {
    for (std::size_t x = 0; x < n && _commutative; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) {
        if (_table[x * n + y] != _table[y * n + x]) {
          _commutative = false;
          break;
        }
      }
    }
    // A two-sided identity is unique when it exists.
    for (std::size_t e = 0; e < n; ++e) {
      bool ok = true;
      for (std::size_t x = 0; x < n && ok; ++x) {
        ok = _table[e * n + x] == x && _table[x * n + e] == x;
      }
      if (ok) {
        _identity = e;
        break;
      }
    }
  }

  std::optional<std::array<std::size_t, 3>>
  first_non_associative_triple(std::size_t                   n,
                               std::span<std::uint8_t const> t) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        std::size_t const xy = t[x * n + y];
        for (std::size_t z = 0; z < n; ++z) {
          if (t[xy * n + z] != t[x * n + t[y * n + z]]) {
            return std::array<std::size_t, 3>{x, y, z};
          }
        }
      }
    }
    return std::nullopt;
  }

  finite_semigroup validate_semigroup(std::size_t                   n,
                                      std::span<std::uint8_t const> table) {
    if (n == 0 || n > max_order) {
      throw index_out_of_range("order must lie in [1, "
                               + std::to_string(max_order) + "], found "
                               + std::to_string(n));
    }
    if (table.size() != n * n) {
      throw index_out_of_range("expected " + std::to_string(n * n)
                               + " table entries, found "
                               + std::to_string(table.size()));
    }
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (table[i] >= n) {
        throw index_out_of_range(
            "entry " + std::to_string(table[i]) + " at row "
            + std::to_string(i / n) + ", column " + std::to_string(i % n)
            + " is not in [0, " + std::to_string(n) + ")");
      }
    }
    if (auto bad = first_non_associative_triple(n, table)) {
      throw non_associative((*bad)[0], (*bad)[1], (*bad)[2]);
    }
    return finite_semigroup(n, {table.begin(), table.end()});
  }

  finite_semigroup
  validate_semigroup(std::vector<std::vector<std::size_t>> const& rows) {
    std::size_t const n = rows.size();
    if (n == 0 || n > max_order) {
      throw index_out_of_range("order must lie in [1, "
                               + std::to_string(max_order) + "]");
    }
    std::vector<std::uint8_t> flat;
    flat.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n) {
        throw index_out_of_range("row " + std::to_string(i) + " has "
                                 + std::to_string(rows[i].size())
                                 + " entries, expected " + std::to_string(n));
      }
      for (std::size_t v : rows[i]) {
        if (v >= n) {
          throw index_out_of_range("entry " + std::to_string(v) + " in row "
                                   + std::to_string(i) + " is not in [0, "
                                   + std::to_string(n) + ")");
        }
        flat.push_back(static_cast<std::uint8_t>(v));
      }
    }
    return validate_semigroup(n, flat);
  }

  namespace {
    void check_element(finite_semigroup const& S, std::size_t a) {
      if (a >= S.order()) {
        throw index_out_of_range("element " + std::to_string(a)
                                 + " is not in [0, "
                                 + std::to_string(S.order()) + ")");
      }
    }
  }  // namespace

  bool is_left_cancellative(finite_semigroup const& S, std::size_t a) {
    check_element(S, a);
    std::uint64_t seen = 0;
    for (std::size_t x = 0; x < S.order(); ++x) {
      std::uint64_t const bit = std::uint64_t(1) << S.product(a, x);
      if (seen & bit) {
        return false;
      }
      seen |= bit;
    }
    return true;
  }

  bool is_right_cancellative(finite_semigroup const& S, std::size_t a) {
    check_element(S, a);
    std::uint64_t seen = 0;
    for (std::size_t x = 0; x < S.order(); ++x) {
      std::uint64_t const bit = std::uint64_t(1) << S.product(x, a);
      if (seen & bit) {
        return false;
      }
      seen |= bit;
    }
    return true;
  }

  bool is_cancellative(finite_semigroup const& S, std::size_t a) {
    return is_left_cancellative(S, a) && is_right_cancellative(S, a);
  }

  bool is_cancellative(finite_semigroup const& S) {
    for (std::size_t a = 0; a < S.order(); ++a) {
      if (!is_cancellative(S, a)) {
        return false;
      }
    }
    return true;
  }

  bool is_group(finite_semigroup const& S) {
    auto e = S.identity();
    if (!e) {
      return false;
    }
    for (std::size_t x = 0; x < S.order(); ++x) {
      bool has_inverse = false;
      for (std::size_t y = 0; y < S.order() && !has_inverse; ++y) {
        has_inverse = S.product(x, y) == *e && S.product(y, x) == *e;
      }
      if (!has_inverse) {
        return false;
      }
    }
    return true;
  }

  bool is_idempotent(finite_semigroup const& S, std::size_t a) {
    check_element(S, a);
    return S.product(a, a) == a;
  }

  ////////////////////////////////////////////////////////////////////////
  // Congruences
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::uint64_t> congruence::block_masks() const {
    std::vector<std::uint64_t> out(_blocks, 0);
    for (std::size_t x = 0; x < _labels.size(); ++x) {
      out[_labels[x]] |= std::uint64_t(1) << x;
    }
    return out;
  }

  congruence congruence_from_partition(finite_semigroup const&      S,
                                       std::span<std::size_t const> labels) {
    std::size_t const n = S.order();
    if (labels.size() != n) {
      throw index_out_of_range("expected " + std::to_string(n)
                               + " labels, found "
                               + std::to_string(labels.size()));
    }
    // Normalise to first-occurrence numbering.
    std::vector<std::size_t> norm(n);
    std::vector<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t x = 0; x < n; ++x) {
      auto it = std::find_if(seen.begin(), seen.end(), [&](auto const& p) {
        return p.first == labels[x];
      });
      if (it == seen.end()) {
        seen.emplace_back(labels[x], seen.size());
        norm[x] = seen.size() - 1;
      } else {
        norm[x] = it->second;
      }
    }
    for (std::size_t x1 = 0; x1 < n; ++x1) {
      for (std::size_t y1 = 0; y1 < n; ++y1) {
        if (norm[x1] != norm[y1]) {
          continue;
        }
        for (std::size_t x2 = 0; x2 < n; ++x2) {
          for (std::size_t y2 = 0; y2 < n; ++y2) {
            if (norm[x2] == norm[y2]
                && norm[S.product(x1, x2)] != norm[S.product(y1, y2)]) {
              throw not_compatible(x1, y1, x2, y2);
            }
          }
        }
      }
    }
    return congruence(std::move(norm), seen.size());
  }

  std::vector<congruence> all_congruences(finite_semigroup const& S) {
    std::size_t const        n = S.order();
    std::vector<congruence>  out;
    std::vector<std::size_t> rgs(n, 0);
    std::vector<std::size_t> prefix_max(n, 0);
    // Iterate restricted growth strings: rgs[0] = 0 and
    // rgs[i] <= 1 + max(rgs[0..i)).
    while (true) {
      try {
        out.push_back(congruence_from_partition(S, rgs));
      } catch (not_compatible const&) {
      }
      std::size_t i = n - 1;
      while (i >= 1 && rgs[i] > prefix_max[i - 1]) {
        --i;
      }
      if (i == 0) {
        return out;
      }
      ++rgs[i];
      prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
      for (std::size_t j = i + 1; j < n; ++j) {
        rgs[j]        = 0;
        prefix_max[j] = prefix_max[i];
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Text format
  ////////////////////////////////////////////////////////////////////////

  finite_semigroup parse_cayley_table(std::istream& in) {
    std::vector<long long> values;
    std::string            line;
    std::size_t            line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      std::istringstream ls(line);
      std::string        token;
      while (ls >> token) {
        std::size_t used = 0;
        long long   v    = 0;
        try {
          v = std::stoll(token, &used);
        } catch (std::exception const&) {
          used = 0;
        }
        if (used != token.size() || v < 0) {
          throw index_out_of_range("line " + std::to_string(line_no)
                                   + ": invalid token '" + token + "'");
        }
        values.push_back(v);
      }
    }
    if (values.empty()) {
      throw index_out_of_range("empty Cayley table");
    }
    if (values[0] < 1 || static_cast<std::size_t>(values[0]) > max_order) {
      throw index_out_of_range("order must lie in [1, "
                               + std::to_string(max_order) + "]");
    }
    std::size_t const n = static_cast<std::size_t>(values[0]);
    if (values.size() - 1 != n * n) {
      throw index_out_of_range("expected " + std::to_string(n * n)
                               + " entries, found "
                               + std::to_string(values.size() - 1));
    }
    std::vector<std::uint8_t> flat;
    flat.reserve(n * n);
    for (std::size_t i = 1; i < values.size(); ++i) {
      if (static_cast<std::size_t>(values[i]) >= n) {
        throw index_out_of_range(
            "entry " + std::to_string(values[i]) + " at row "
            + std::to_string((i - 1) / n) + ", column "
            + std::to_string((i - 1) % n) + " is not in [0, "
            + std::to_string(n) + ")");
      }
      flat.push_back(static_cast<std::uint8_t>(values[i]));
    }
    return validate_semigroup(n, flat);
  }

  finite_semigroup parse_cayley_table(std::string const& text) {
    std::istringstream in(text);
    return parse_cayley_table(in);
  }

  finite_semigroup read_cayley_table(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw error("cannot open Cayley table file '" + path + "'");
    }
    return parse_cayley_table(in);
  }

  std::string format_cayley_table(finite_semigroup const& S) {
    std::ostringstream os;
    os << S.order() << '\n';
    for (std::size_t x = 0; x < S.order(); ++x) {
      for (std::size_t y = 0; y < S.order(); ++y) {
        os << (y == 0 ? "" : " ") << S.product(x, y);
      }
      os << '\n';
    }
    return os.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Named semigroups
  ////////////////////////////////////////////////////////////////////////

  namespace {
    template <typename Op>
    finite_semigroup from_rule(std::size_t n, Op op) {
      std::vector<std::uint8_t> t(n * n);
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          t[x * n + y] = static_cast<std::uint8_t>(op(x, y));
        }
      }
      return validate_semigroup(n, t);
    }
  }  // namespace

  finite_semigroup cyclic_group(std::size_t n) {
    return from_rule(n, [n](auto x, auto y) { return (x + y) % n; });
  }

  finite_semigroup klein_four_group() {
    return from_rule(4, [](auto x, auto y) { return x ^ y; });
  }

  finite_semigroup null_semigroup(std::size_t n) {
    return from_rule(n, [](auto, auto) { return 0; });
  }

  finite_semigroup left_zero_semigroup(std::size_t n) {
    return from_rule(n, [](auto x, auto) { return x; });
  }

  finite_semigroup right_zero_semigroup(std::size_t n) {
    return from_rule(n, [](auto, auto y) { return y; });
  }

  finite_semigroup min_semilattice(std::size_t n) {
    return from_rule(n, [](auto x, auto y) { return std::min(x, y); });
  }

  finite_semigroup relabel(finite_semigroup const&      S,
                           std::span<std::size_t const> perm) {
    std::size_t const n = S.order();
    if (perm.size() != n) {
      throw index_out_of_range("relabelling has the wrong length");
    }
    std::uint64_t seen = 0;
    for (auto p : perm) {
      if (p >= n || (seen >> p) & 1) {
        throw index_out_of_range("relabelling is not a permutation");
      }
      seen |= std::uint64_t(1) << p;
    }
    std::vector<std::uint8_t> t(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        t[perm[x] * n + perm[y]]
            = static_cast<std::uint8_t>(perm[S.product(x, y)]);
      }
    }
    return validate_semigroup(n, t);
  }

}  // namespace psg
