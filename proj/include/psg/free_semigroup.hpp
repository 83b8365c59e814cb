#ifndef PSG_FREE_SEMIGROUP_HPP_
#define PSG_FREE_SEMIGROUP_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace psg {

  //! A non-empty word over the alphabet {0, 1, ...}, printed as a, b, ...
  class word {
   public:
    //! Throws precondition_violated if `letters` is empty.
    explicit word(std::vector<std::uint8_t> letters);
    //! From "aab" style text; letters a-z.
    static word parse(std::string_view text);

    std::vector<std::uint8_t> const& letters() const noexcept {
      return _letters;
    }

    std::size_t length() const noexcept {
      return _letters.size();
    }

    std::uint8_t front() const noexcept {
      return _letters.front();
    }

    std::uint8_t back() const noexcept {
      return _letters.back();
    }

    std::string to_string() const;

    auto operator<=>(word const&) const = default;

   private:
    std::vector<std::uint8_t> _letters;
  };

  //! Concatenation.
  word operator*(word const& x, word const& y);

  using word_set = std::set<word>;

  word_set parse_word_set(std::initializer_list<std::string_view> words);

  //! {x y : x in X, y in Y}.
  word_set free_setwise_product(word_set const& X, word_set const& Y);

  //! Every non-empty set X of letters is cancellative in P(F+(V)): returns
  //! whether (X Y1 == X Y2) == (Y1 == Y2) and
  //! (Y1 X == Y2 X) == (Y1 == Y2).  Throws precondition_violated if X is
  //! empty or holds a word of length != 1.
  bool free_cancellativity_check(word_set const& X,
                                 word_set const& Y1,
                                 word_set const& Y2);

  //! For distinct letters x1 != x2 of X, x1 Y1 and x2 Y2 are disjoint (and
  //! likewise Y1 x1 and Y2 x2).
  bool leading_letter_disjoint(word_set const& X,
                               word_set const& Y1,
                               word_set const& Y2);

  struct free_campaign_report {
    std::size_t   alphabet         = 0;
    std::size_t   trials           = 0;
    std::uint64_t seed             = 0;
    std::size_t   equal_pairs      = 0;
    std::size_t   distinct_pairs   = 0;
    std::size_t   violations       = 0;
    std::size_t   disjointness_failures = 0;
    //! First failing trial, for reproduction.
    std::vector<std::string> first_failure;
  };

  //! Seeded random trials: X a random non-empty set of letters, Y1 a random
  //! set of at most `max_words` words of length at most `max_length`, and Y2
  //! either Y1 or a small edit of it.
  free_campaign_report run_free_campaign(std::size_t   alphabet,
                                         std::size_t   trials,
                                         std::uint64_t seed,
                                         std::size_t   max_length = 6,
                                         std::size_t   max_words  = 64);

}  // namespace psg

#endif  // PSG_FREE_SEMIGROUP_HPP_
