#include <random>
#include <set>
#include <sstream>

#include "doctest.h"

#include "oracles.hpp"
#include "psg/catalog.hpp"
#include "psg/error.hpp"
#include "psg/semigroup.hpp"

using namespace psg;

TEST_SUITE("semigroup") {
  TEST_CASE("cyclic group of order 2") {
    auto const S = validate_semigroup({{0, 1}, {1, 0}});
    CHECK(S.order() == 2);
    CHECK(S.is_commutative());
    REQUIRE(S.identity().has_value());
    CHECK(*S.identity() == 0);
    CHECK(S == cyclic_group(2));
  }

  TEST_CASE("null semigroup") {
    auto const S = validate_semigroup({{0, 0}, {0, 0}});
    CHECK(S.is_commutative());
    CHECK_FALSE(S.identity().has_value());
    CHECK(S == null_semigroup(2));
  }

  TEST_CASE("exactly 8 of the 16 binary tables are associative") {
    std::size_t accepted = 0, rejected = 0;
    oracle::for_each_table(2, [&](oracle::table const& t) {
      std::vector<std::uint8_t> cells(t.begin(), t.end());
      if (oracle::associative(2, t)) {
        CHECK_NOTHROW(validate_semigroup(2, cells));
        ++accepted;
        return;
      }
      ++rejected;
      auto const triple = first_non_associative_triple(2, cells);
      REQUIRE(triple.has_value());
      auto const [x, y, z] = *triple;
      CHECK(t[t[x * 2 + y] * 2 + z] != t[x * 2 + t[y * 2 + z]]);
      try {
        validate_semigroup(2, cells);
        FAIL("non-associative table accepted");
      } catch (non_associative const& e) {
        CHECK(e.triple() == *triple);
      }
    });
    CHECK(accepted == 8);
    CHECK(rejected == 8);
  }

  TEST_CASE("table [[1,1],[0,1]] is rejected") {
    CHECK_THROWS_AS(validate_semigroup({{1, 1}, {0, 1}}), non_associative);
  }

  TEST_CASE("malformed tables") {
    CHECK_THROWS_AS(validate_semigroup({{0, 2}, {1, 0}}), index_out_of_range);
    CHECK_THROWS_AS(validate_semigroup({{0, 1}, {1}}), index_out_of_range);
    CHECK_THROWS_AS(validate_semigroup({}), index_out_of_range);
  }

  TEST_CASE("cancellativity of single elements") {
    auto const Z2 = cyclic_group(2);
    CHECK(is_left_cancellative(Z2, 1));
    CHECK(is_right_cancellative(Z2, 1));
    CHECK(is_cancellative(Z2, 1));

    auto const N2 = null_semigroup(2);
    CHECK_FALSE(is_cancellative(N2, 0));

    auto const L2 = left_zero_semigroup(2);
    CHECK_FALSE(is_left_cancellative(L2, 0));
    CHECK(is_right_cancellative(L2, 0));
    CHECK_FALSE(is_cancellative(L2, 0));

    CHECK_THROWS_AS(is_cancellative(Z2, 2), index_out_of_range);
  }

  TEST_CASE("parity is a congruence on Z4") {
    auto const       Z4 = cyclic_group(4);
    std::size_t const labels[] = {0, 1, 0, 1};
    auto const       c        = congruence_from_partition(Z4, labels);
    CHECK(c.number_of_blocks() == 2);
    CHECK(c.block_masks() == std::vector<std::uint64_t>{0b0101, 0b1010});
  }

  TEST_CASE("equality is a congruence") {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (auto const& e : enumerate_semigroups(n)) {
        std::vector<std::size_t> labels(n);
        std::iota(labels.begin(), labels.end(), 0);
        CHECK(congruence_from_partition(e.semigroup(), labels)
                  .number_of_blocks()
              == n);
      }
    }
  }

  TEST_CASE("merging 0 and 1 in Z3 is not a congruence") {
    auto const        Z3       = cyclic_group(3);
    std::size_t const labels[] = {0, 0, 1};
    try {
      congruence_from_partition(Z3, labels);
      FAIL("accepted");
    } catch (not_compatible const& e) {
      auto const [x1, y1, x2, y2] = e.quadruple();
      CHECK(labels[x1] == labels[y1]);
      CHECK(labels[x2] == labels[y2]);
      CHECK(labels[Z3.product(x1, x2)] != labels[Z3.product(y1, y2)]);
    }
  }

  TEST_CASE("label vectors of the wrong length are rejected") {
    std::size_t const labels[] = {0, 1};
    CHECK_THROWS_AS(congruence_from_partition(cyclic_group(3), labels),
                    index_out_of_range);
  }

  TEST_CASE("all_congruences matches the labeling scan") {
    for (std::size_t n = 1; n <= 4; ++n) {
      for (auto const& e : enumerate_semigroups(n)) {
        std::set<std::vector<std::size_t>> found;
        for (auto const& c : all_congruences(e.semigroup())) {
          found.insert(c.labels());
        }
        CHECK(found == oracle::congruences(e.semigroup()));
      }
    }
    // Z4: the trivial, parity and universal congruences.
    CHECK(all_congruences(cyclic_group(4)).size() == 3);
  }

  TEST_CASE("text format") {
    auto const S = parse_cayley_table("# left zero\n2\n0 0  # row 0\n1 1\n");
    CHECK(S == left_zero_semigroup(2));
    CHECK(parse_cayley_table(format_cayley_table(cyclic_group(5)))
          == cyclic_group(5));
    CHECK_THROWS_AS(parse_cayley_table("2\n0 1\n"), error);
    CHECK_THROWS_AS(parse_cayley_table("2\n1 1\n0 1\n"), non_associative);
    CHECK_THROWS_AS(read_cayley_table("/nonexistent/table"), error);
  }

  TEST_CASE("named constructors") {
    CHECK(klein_four_group().is_commutative());
    CHECK(is_group(klein_four_group()));
    CHECK(is_group(cyclic_group(4)));
    CHECK_FALSE(right_zero_semigroup(2).is_commutative());
    CHECK(min_semilattice(3).identity() == std::optional<std::size_t>(2));
    auto const        Z3       = cyclic_group(3);
    std::size_t const swap[]   = {0, 2, 1};
    CHECK(relabel(Z3, swap) == Z3);
  }

  TEST_CASE("associativity holds on all triples of catalogued tables") {
    for (std::size_t n = 1; n <= 4; ++n) {
      for (auto const& e : enumerate_semigroups(n)) {
        CHECK(oracle::associative(n, oracle::table_of(e.semigroup())));
      }
    }
  }

  TEST_CASE("all elements cancellative iff the table is a Latin square") {
    for (std::size_t n = 1; n <= 4; ++n) {
      for (auto const& e : enumerate_semigroups(n)) {
        auto const& S     = e.semigroup();
        bool        latin = true;
        for (std::size_t x = 0; x < n; ++x) {
          std::set<std::size_t> row, column;
          for (std::size_t y = 0; y < n; ++y) {
            row.insert(S.product(x, y));
            column.insert(S.product(y, x));
          }
          latin = latin && row.size() == n && column.size() == n;
        }
        CHECK(is_cancellative(S) == latin);
      }
    }
  }

  TEST_CASE("finite cancellative semigroups are groups") {
    std::size_t groups = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
      for (auto const& e : enumerate_semigroups(n)) {
        auto const& S = e.semigroup();
        if (!is_cancellative(S)) {
          continue;
        }
        ++groups;
        REQUIRE(S.identity().has_value());
        for (std::size_t x = 0; x < n; ++x) {
          bool inverse = false;
          for (std::size_t y = 0; y < n; ++y) {
            inverse = inverse
                      || (S.product(x, y) == *S.identity()
                          && S.product(y, x) == *S.identity());
          }
          CHECK(inverse);
        }
        CHECK(is_group(S));
      }
    }
    // Z1, Z2, Z3, Z4 and the Klein four-group.
    CHECK(groups == 5);
  }

  TEST_CASE("commutative flag and identity agree with direct scans") {
    std::mt19937_64 rng(7);
    for (std::size_t n = 1; n <= 4; ++n) {
      for (auto const& e : enumerate_semigroups(n)) {
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        auto const S = relabel(e.semigroup(), perm);
        bool       commutative = true;
        std::optional<std::size_t> identity;
        for (std::size_t x = 0; x < n; ++x) {
          bool is_identity = true;
          for (std::size_t y = 0; y < n; ++y) {
            commutative = commutative && S.product(x, y) == S.product(y, x);
            is_identity = is_identity && S.product(x, y) == y
                          && S.product(y, x) == y;
          }
          if (is_identity) {
            identity = x;
          }
        }
        CHECK(S.is_commutative() == commutative);
        CHECK(S.identity() == identity);
        CHECK(oracle::associative(n, oracle::table_of(S)));
      }
    }
  }
}
