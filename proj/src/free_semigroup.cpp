#include "psg/free_semigroup.hpp"

#include <algorithm>
#include <random>

#include "psg/error.hpp"

namespace psg {

  word::word(std::vector<std::uint8_t> letters) : _letters(std::move(letters)) {
    if (_letters.empty()) {
      throw precondition_violated("words of a free semigroup are non-empty");
    }
  }

  word word::parse(std::string_view text) {
    std::vector<std::uint8_t> letters;
    for (char c : text) {
      if (c < 'a' || c > 'z') {
        throw precondition_violated(std::string("invalid letter '") + c
                                    + "'");
      }
      letters.push_back(static_cast<std::uint8_t>(c - 'a'));
    }
    return word(std::move(letters));
  }

  std::string word::to_string() const {
    std::string out;
    for (auto l : _letters) {
      out += l < 26 ? static_cast<char>('a' + l) : '?';
    }
    return out;
  }

  word operator*(word const& x, word const& y) {
    std::vector<std::uint8_t> letters(x.letters());
    letters.insert(letters.end(), y.letters().begin(), y.letters().end());
    return word(std::move(letters));
  }

  word_set parse_word_set(std::initializer_list<std::string_view> words) {
    word_set out;
    for (auto w : words) {
      out.insert(word::parse(w));
    }
    return out;
  }

  word_set free_setwise_product(word_set const& X, word_set const& Y) {
    word_set out;
    for (auto const& x : X) {
      for (auto const& y : Y) {
        out.insert(x * y);
      }
    }
    return out;
  }

  namespace {
    void require_letters(word_set const& X) {
      if (X.empty()) {
        throw precondition_violated("X must be non-empty");
      }
      for (auto const& x : X) {
        if (x.length() != 1) {
          throw precondition_violated("X must consist of single letters, "
                                      "found "
                                      + x.to_string());
        }
      }
    }

    bool disjoint(word_set const& A, word_set const& B) {
      auto a = A.begin();
      auto b = B.begin();
      while (a != A.end() && b != B.end()) {
        if (*a < *b) {
          ++a;
        } else if (*b < *a) {
          ++b;
        } else {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  bool free_cancellativity_check(word_set const& X,
                                 word_set const& Y1,
                                 word_set const& Y2) {
    require_letters(X);
    bool const same = Y1 == Y2;
    bool const left
        = (free_setwise_product(X, Y1) == free_setwise_product(X, Y2)) == same;
    bool const right
        = (free_setwise_product(Y1, X) == free_setwise_product(Y2, X)) == same;
    return left && right;
  }

  bool leading_letter_disjoint(word_set const& X,
                               word_set const& Y1,
                               word_set const& Y2) {
    require_letters(X);
    for (auto const& x1 : X) {
      for (auto const& x2 : X) {
        if (x1 == x2) {
          continue;
        }
        word_set const s1{x1}, s2{x2};
        if (!disjoint(free_setwise_product(s1, Y1),
                      free_setwise_product(s2, Y2))
            || !disjoint(free_setwise_product(Y1, s1),
                         free_setwise_product(Y2, s2))) {
          return false;
        }
      }
    }
    return true;
  }

  free_campaign_report run_free_campaign(std::size_t   alphabet,
                                         std::size_t   trials,
                                         std::uint64_t seed,
                                         std::size_t   max_length,
                                         std::size_t   max_words) {
    if (alphabet < 1 || alphabet > 26) {
      throw precondition_violated("alphabet size must lie in [1, 26]");
    }
    if (max_length < 1 || max_words < 1) {
      throw precondition_violated("word length and count limits must be "
                                  "positive");
    }
    free_campaign_report report;
    report.alphabet = alphabet;
    report.trials   = trials;
    report.seed     = seed;

    std::mt19937_64 rng(seed);
    auto            uniform = [&](std::size_t lo, std::size_t hi) {
      return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    };
    auto random_word = [&] {
      std::vector<std::uint8_t> letters(uniform(1, max_length));
      for (auto& l : letters) {
        l = static_cast<std::uint8_t>(uniform(0, alphabet - 1));
      }
      return word(std::move(letters));
    };

    for (std::size_t t = 0; t < trials; ++t) {
      word_set X;
      for (std::size_t l = 0; l < alphabet; ++l) {
        if (uniform(0, 1)) {
          X.insert(word({static_cast<std::uint8_t>(l)}));
        }
      }
      if (X.empty()) {
        X.insert(word({static_cast<std::uint8_t>(uniform(0, alphabet - 1))}));
      }
      word_set          Y1;
      std::size_t const count = uniform(1, max_words);
      while (Y1.size() < count) {
        Y1.insert(random_word());
        // Short alphabets may not have `count` distinct short words.
        if (Y1.size() < count && uniform(0, 7) == 0) {
          break;
        }
      }
      word_set Y2 = Y1;
      switch (uniform(0, 3)) {
        case 0:
          break;
        case 1:
          Y2.insert(random_word());
          break;
        case 2:
          if (Y2.size() > 1) {
            Y2.erase(std::next(Y2.begin(), uniform(0, Y2.size() - 1)));
          } else {
            Y2.insert(random_word());
          }
          break;
        default: {
          auto it = std::next(Y2.begin(), uniform(0, Y2.size() - 1));
          Y2.erase(it);
          Y2.insert(random_word());
          break;
        }
      }
      (Y1 == Y2 ? report.equal_pairs : report.distinct_pairs)++;

      bool const ok       = free_cancellativity_check(X, Y1, Y2);
      bool const disjoint = leading_letter_disjoint(X, Y1, Y2);
      report.violations += !ok;
      report.disjointness_failures += !disjoint;
      if ((!ok || !disjoint) && report.first_failure.empty()) {
        auto dump = [](word_set const& s) {
          std::string out = "{";
          for (auto const& w : s) {
            out += (out.size() > 1 ? "," : "") + w.to_string();
          }
          return out + "}";
        };
        report.first_failure = {"trial " + std::to_string(t), dump(X),
                                dump(Y1), dump(Y2)};
      }
    }
    return report;
  }

}  // namespace psg
