#include <random>

#include "doctest.h"

#include "oracles.hpp"
#include "psg/catalog.hpp"
#include "psg/error.hpp"
#include "psg/free_semigroup.hpp"
#include "psg/identity_lemma.hpp"
#include "psg/numerical_monoid.hpp"

using namespace psg;

namespace {
  using values = std::vector<std::uint64_t>;

  values sorted(std::set<std::uint64_t> const& s) {
    return values(s.begin(), s.end());
  }
}  // namespace

TEST_SUITE("numerical-monoid") {
  TEST_CASE("<2,3>") {
    numerical_monoid const M({2, 3});
    CHECK_FALSE(nm_membership(M, 1));
    CHECK(M.gaps() == values{1});
    CHECK(M.frobenius() == std::optional<std::uint64_t>(1));
    CHECK(M.gaps() == oracle::gaps({2, 3}));
  }

  TEST_CASE("<3,5>") {
    numerical_monoid const M({5, 3});
    CHECK_FALSE(nm_membership(M, 7));
    CHECK(M.gaps() == values{1, 2, 4, 7});
    CHECK(M.frobenius() == std::optional<std::uint64_t>(7));
    CHECK(M.generators() == values{3, 5});
  }

  TEST_CASE("the naturals") {
    numerical_monoid const N({1});
    CHECK(N.gaps().empty());
    CHECK_FALSE(N.frobenius().has_value());
    CHECK(nm_membership(N, 0));
  }

  TEST_CASE("zero is always a member") {
    for (auto const& gens : {values{2, 3}, values{3, 5}, values{4, 6, 9}}) {
      CHECK(nm_membership(numerical_monoid(gens), 0));
    }
  }

  TEST_CASE("invalid generator sets") {
    CHECK_THROWS_AS(numerical_monoid(values{}), precondition_violated);
    CHECK_THROWS_AS(numerical_monoid({0, 1}), precondition_violated);
    CHECK_THROWS_AS(numerical_monoid({2, 4}), precondition_violated);
  }

  TEST_CASE("equality") {
    numerical_monoid const a({2, 3}), b({3, 4, 5});
    CHECK(nm_equal(a, numerical_monoid({2, 3})));
    CHECK(nm_equal(a, numerical_monoid({2, 3, 5})));
    CHECK_FALSE(nm_equal(a, b));
    CHECK(b.gaps() == values{1, 2});

    numerical_monoid const c({4, 6, 9}), d({4, 6, 9, 11});
    CHECK(c.gaps() == oracle::gaps({4, 6, 9}));
    CHECK(d.gaps() == oracle::gaps({4, 6, 9, 11}));
    CHECK(c.gaps() == values{1, 2, 3, 5, 7, 11});
    CHECK(d.gaps() == values{1, 2, 3, 5, 7});
    CHECK_FALSE(nm_equal(c, d));
  }

  TEST_CASE("gaps agree with the reachability oracle") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 200; ++trial) {
      values gens;
      std::uniform_int_distribution<std::uint64_t> g(1, 40);
      std::uniform_int_distribution<int>           k(1, 4);
      do {
        gens.clear();
        for (int i = k(rng); i > 0; --i) {
          gens.push_back(g(rng));
        }
      } while (std::reduce(gens.begin(), gens.end(), std::uint64_t(0),
                           [](auto x, auto y) { return std::gcd(x, y); })
               != 1);
      numerical_monoid const M(gens);
      CHECK(M.gaps() == oracle::gaps(gens));
      if (auto f = M.frobenius()) {
        for (std::uint64_t x = *f + 1; x < *f + 50; ++x) {
          CHECK(M.contains(x));
        }
      }
    }
  }

  TEST_CASE("members are closed under addition and cancel") {
    numerical_monoid const M({5, 7, 11});
    std::mt19937_64        rng(13);
    std::uniform_int_distribution<std::uint64_t> value(0, 80);
    std::size_t checked = 0;
    while (checked < 1000) {
      auto const a = value(rng), x = value(rng), y = value(rng);
      if (!M.contains(a) || !M.contains(x) || !M.contains(y)) {
        continue;
      }
      ++checked;
      CHECK(M.contains(a + x));
      CHECK(((a + x == a + y) == (x == y)));
    }
  }

  TEST_CASE("sumsets") {
    numerical_monoid const M23({2, 3});
    values const           X{2, 3};
    CHECK(nm_sumset(M23, X, X) == values{4, 5, 6});
    CHECK(nm_sumset(M23, values{0}, X) == X);
    numerical_monoid const M35({3, 5});
    CHECK(nm_sumset(M35, values{3, 5}, values{3}) == values{6, 8});
    CHECK_THROWS_AS(nm_sumset(M35, values{4}, values{3}), non_member_input);
  }

  TEST_CASE("witness in <2,3>") {
    numerical_monoid const M({2, 3});
    auto const             w = nm_witness_noncancellative(M, values{2, 3});
    CHECK(w.lhs == values{4, 5, 6});
    CHECK(w.rhs == values{4, 6});
    CHECK(sorted(oracle::sumset(w.multiplier, w.lhs)) == values{6, 7, 8, 9});
    CHECK(sorted(oracle::sumset(w.multiplier, w.rhs)) == values{6, 7, 8, 9});
    CHECK(is_valid_nm_witness(M, w));
  }

  TEST_CASE("witness in the naturals") {
    numerical_monoid const N({1});
    auto const             w = nm_witness_noncancellative(N, values{0, 1});
    CHECK(w.lhs == values{0, 1, 2});
    CHECK(w.rhs == values{0, 2});
    CHECK(sorted(oracle::sumset(w.multiplier, w.lhs)) == values{0, 1, 2, 3});
    CHECK(sorted(oracle::sumset(w.multiplier, w.rhs)) == values{0, 1, 2, 3});
  }

  TEST_CASE("witness preconditions") {
    numerical_monoid const M({2, 3});
    CHECK_THROWS_AS(nm_witness_noncancellative(M, values{2}),
                    precondition_violated);
    CHECK_THROWS_AS(nm_witness_noncancellative(M, values{1, 2}),
                    non_member_input);
  }
}

TEST_SUITE("free-semigroup") {
  TEST_CASE("words are non-empty") {
    CHECK_THROWS_AS(word(std::vector<std::uint8_t>{}), precondition_violated);
    CHECK_THROWS_AS(word::parse(""), precondition_violated);
    CHECK(word::parse("aab").to_string() == "aab");
    CHECK(word::parse("ab") * word::parse("b") == word::parse("abb"));
  }

  TEST_CASE("setwise products") {
    CHECK(free_setwise_product(parse_word_set({"a", "b"}),
                               parse_word_set({"ab"}))
          == parse_word_set({"aab", "bab"}));
    CHECK(free_setwise_product(parse_word_set({"a"}), parse_word_set({"a"}))
          == parse_word_set({"aa"}));
    CHECK(free_setwise_product(parse_word_set({"a", "ab"}),
                               parse_word_set({"b"}))
          == parse_word_set({"ab", "abb"}));
  }

  TEST_CASE("sets of letters cancel") {
    auto const X  = parse_word_set({"a", "b"});
    auto const Y1 = parse_word_set({"ab"});
    auto const Y2 = parse_word_set({"ab", "b"});
    CHECK(free_setwise_product(X, Y2)
          == parse_word_set({"aab", "bab", "ab", "bb"}));
    CHECK(free_cancellativity_check(X, Y1, Y2));
    CHECK(free_cancellativity_check(X, Y1, Y1));
    CHECK(leading_letter_disjoint(X, Y1, Y2));
  }

  TEST_CASE("X must consist of letters") {
    auto const Y = parse_word_set({"a"});
    CHECK_THROWS_AS(free_cancellativity_check(parse_word_set({"a", "ab"}), Y, Y),
                    precondition_violated);
    CHECK_THROWS_AS(free_cancellativity_check(word_set{}, Y, Y),
                    precondition_violated);
  }

  TEST_CASE("seeded campaigns with long words") {
    for (std::size_t alphabet = 1; alphabet <= 4; ++alphabet) {
      auto const r = run_free_campaign(alphabet, 300, alphabet, 16, 64);
      CHECK(r.trials == 300);
      CHECK(r.violations == 0);
      CHECK(r.disjointness_failures == 0);
      CHECK(r.equal_pairs + r.distinct_pairs == 300);
      CHECK(r.distinct_pairs > 0);
    }
  }

  TEST_CASE("campaigns are reproducible") {
    auto const a = run_free_campaign(3, 200, 9);
    auto const b = run_free_campaign(3, 200, 9);
    CHECK(a.equal_pairs == b.equal_pairs);
    CHECK(a.distinct_pairs == b.distinct_pairs);
  }
}

TEST_SUITE("identity") {
  TEST_CASE("surjective homomorphisms between monoids keep the identity") {
    auto const r = check_identity_preservation(3);
    CHECK(r.violations.empty());
    CHECK(r.surjective_homomorphisms > 0);
  }

  TEST_CASE("identity preservation preconditions") {
    auto const Z2 = cyclic_group(2);
    CHECK(maps_identity_to_identity(morphism(Z2, Z2, {0, 1})));
    CHECK_THROWS_AS(maps_identity_to_identity(morphism(Z2, Z2, {0, 0})),
                    precondition_violated);
    auto const N2 = null_semigroup(2);
    CHECK_THROWS_AS(maps_identity_to_identity(morphism(N2, N2, {0, 0})),
                    precondition_violated);
  }

  TEST_CASE("identity need not be kept without surjectivity") {
    // The constant map onto the bottom of min(3) is a homomorphism that
    // misses the identity.
    auto const S = min_semilattice(2);
    auto const T = min_semilattice(3);
    morphism const f(S, T, {0, 0});
    CHECK(f.is_homomorphism());
    CHECK_FALSE(f.is_surjective());
    CHECK(f(*S.identity()) != *T.identity());
  }
}
