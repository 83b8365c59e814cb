#ifndef PSG_IDENTITY_LEMMA_HPP_
#define PSG_IDENTITY_LEMMA_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "psg/isomorphism.hpp"

namespace psg {

  //! A surjective semigroup homomorphism between monoids sends the identity
  //! to the identity: with e = f(1), every y = f(x) satisfies
  //! y e = f(x 1) = y, so 1 = 1 e = e.  Returns whether f does so.  Throws
  //! precondition_violated unless both ends are monoids and f is a
  //! surjective homomorphism.
  bool maps_identity_to_identity(morphism const& f);

  struct identity_lemma_report {
    std::size_t              max_order                = 0;
    std::size_t              monoids                  = 0;
    std::size_t              pairs                    = 0;
    std::size_t              homomorphisms            = 0;
    std::size_t              surjective_homomorphisms = 0;
    std::vector<std::string> violations;
  };

  //! Scans every map between every ordered pair of catalogued monoids of
  //! order <= max_order and checks each surjective homomorphism found.
  identity_lemma_report check_identity_preservation(std::size_t max_order);

}  // namespace psg

#endif  // PSG_IDENTITY_LEMMA_HPP_
