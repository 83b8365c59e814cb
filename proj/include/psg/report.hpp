#ifndef PSG_REPORT_HPP_
#define PSG_REPORT_HPP_

// JSON views of the library's results.  Keys are sorted by the json type, so
// identical inputs serialise to identical bytes.

#include "json.hpp"

#include "psg/cancellativity.hpp"
#include "psg/catalog.hpp"
#include "psg/free_semigroup.hpp"
#include "psg/identity_lemma.hpp"
#include "psg/isomorphism.hpp"
#include "psg/numerical_monoid.hpp"
#include "psg/power.hpp"
#include "psg/semigroup.hpp"

namespace psg {

  using json = nlohmann::json;

  inline constexpr int schema_version = 1;

  json to_json(finite_semigroup const& S);
  json to_json(congruence const& c);
  //! { ambient_order, members, downward_complete, subsemigroup }
  json to_json(subset_family const& F);
  json to_json(downward_completeness const& d);
  //! { case, multiplier, lhs, rhs } plus the chosen elements a, b.
  json to_json(cancellation_witness const& w);
  //! { isomorphic, map, fingerprint_mismatch }
  json to_json(iso_verdict const& v);
  json to_json(morphism const& f);
  json to_json(family_morphism const& F);
  json to_json(catalog_entry const& e);
  json to_json(enumeration_audit const& a);
  //! { order, classes, pairs_checked, counterexamples, pruned_by_fingerprint,
  //!   elapsed_ms, ... }
  json to_json(probe_report const& r);
  json to_json(prop1_report const& r);
  json to_json(numerical_monoid const& M);
  json to_json(nm_witness const& w);
  json to_json(free_campaign_report const& r);
  json to_json(identity_lemma_report const& r);

  std::vector<mask_type> masks(std::span<subset const> v);

}  // namespace psg

#endif  // PSG_REPORT_HPP_
