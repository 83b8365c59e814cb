#include "psg/identity_lemma.hpp"

#include "psg/catalog.hpp"
#include "psg/error.hpp"

namespace psg {

  bool maps_identity_to_identity(morphism const& f) {
    auto const e_source = f.source().identity();
    auto const e_target = f.target().identity();
    if (!e_source || !e_target) {
      throw precondition_violated("source and target must be monoids");
    }
    if (!f.is_homomorphism() || !f.is_surjective()) {
      throw precondition_violated("map must be a surjective homomorphism");
    }
    return f(*e_source) == *e_target;
  }

  identity_lemma_report check_identity_preservation(std::size_t max_order) {
    identity_lemma_report report;
    report.max_order = max_order;
    std::vector<finite_semigroup> monoids;
    for (std::size_t n = 1; n <= max_order; ++n) {
      for (auto const& e : enumerate_semigroups(n)) {
        if (e.semigroup().is_monoid()) {
          monoids.push_back(e.semigroup());
        }
      }
    }
    report.monoids = monoids.size();
    for (std::size_t i = 0; i < monoids.size(); ++i) {
      for (std::size_t j = 0; j < monoids.size(); ++j) {
        if (monoids[j].order() > monoids[i].order()) {
          continue;  // no surjection possible
        }
        ++report.pairs;
        for_each_homomorphism(monoids[i], monoids[j], [&](morphism const& f) {
          ++report.homomorphisms;
          if (f.is_surjective()) {
            ++report.surjective_homomorphisms;
            if (!maps_identity_to_identity(f)) {
              report.violations.push_back(
                  "monoid " + std::to_string(i) + " -> monoid "
                  + std::to_string(j) + " moves the identity");
            }
          }
          return true;
        });
      }
    }
    return report;
  }

}  // namespace psg
