#include "psg/report.hpp"

namespace psg {

  std::vector<mask_type> masks(std::span<subset const> v) {
    std::vector<mask_type> out;
    out.reserve(v.size());
    for (auto X : v) {
      out.push_back(X.bits());
    }
    return out;
  }

  json to_json(finite_semigroup const& S) {
    json rows = json::array();
    for (std::size_t x = 0; x < S.order(); ++x) {
      auto r = S.row(x);
      rows.push_back(std::vector<int>(r.begin(), r.end()));
    }
    json out{{"order", S.order()},
             {"table", std::move(rows)},
             {"commutative", S.is_commutative()},
             {"identity", nullptr}};
    if (auto e = S.identity()) {
      out["identity"] = *e;
    }
    return out;
  }

  json to_json(congruence const& c) {
    return {{"labels", c.labels()}, {"blocks", c.number_of_blocks()}};
  }

  json to_json(subset_family const& F) {
    return {{"ambient_order", F.ambient().order()},
            {"members", masks(F.members())},
            {"downward_complete", F.is_downward_complete()},
            {"subsemigroup", F.is_subsemigroup()}};
  }

  json to_json(downward_completeness const& d) {
    using failure = downward_completeness::failure;
    json out{{"holds", static_cast<bool>(d)}};
    switch (d.reason) {
      case failure::none:
        out["failure"] = nullptr;
        break;
      case failure::not_closed:
        out["failure"] = "not_closed";
        break;
      case failure::not_covering:
        out["failure"] = "not_covering";
        break;
      case failure::not_subset_closed:
        out["failure"] = "not_subset_closed";
        break;
    }
    if (d.first) {
      out["first"] = d.first->bits();
    }
    if (d.second) {
      out["second"] = d.second->bits();
    }
    if (d.element) {
      out["element"] = *d.element;
    }
    return out;
  }

  json to_json(cancellation_witness const& w) {
    json out{{"case", std::string(to_string(w.kind))},
             {"multiplier", w.multiplier.bits()},
             {"lhs", w.lhs.bits()},
             {"rhs", w.rhs.bits()}};
    if (w.a) {
      out["a"] = *w.a;
    }
    if (w.b) {
      out["b"] = *w.b;
    }
    return out;
  }

  json to_json(iso_verdict const& v) {
    json out{{"isomorphic", v.isomorphic()},
             {"map", nullptr},
             {"fingerprint_mismatch", nullptr}};
    if (v.isomorphism) {
      out["map"] = v.isomorphism->map();
    }
    if (v.fingerprint_mismatch) {
      out["fingerprint_mismatch"] = *v.fingerprint_mismatch;
    }
    return out;
  }

  json to_json(morphism const& f) {
    return {{"map", f.map()},
            {"homomorphism", f.is_homomorphism()},
            {"injective", f.is_injective()},
            {"surjective", f.is_surjective()}};
  }

  json to_json(family_morphism const& F) {
    json pairs = json::array();
    for (auto X : F.source().members()) {
      pairs.push_back({X.bits(), F(X).bits()});
    }
    return {{"source", to_json(F.source())},
            {"target", to_json(F.target())},
            {"map", std::move(pairs)},
            {"isomorphism", F.is_isomorphism()}};
  }

  json to_json(catalog_entry const& e) {
    json out     = to_json(e.semigroup());
    out["id"]    = e.canonical_id();
    out["index"] = e.index();
    return out;
  }

  json to_json(enumeration_audit const& a) {
    return {{"order", a.order},
            {"labeled_tables", a.labeled_tables},
            {"classes", a.classes},
            {"rejected", a.rejected},
            {"sampled", a.sampled},
            {"sampled_matched", a.sampled_matched},
            {"pairs_checked", a.pairs_checked},
            {"pairs_isomorphic", a.pairs_isomorphic},
            {"seed", a.seed},
            {"consistent", a.consistent()}};
  }

  json to_json(probe_report const& r) {
    json counterexamples = json::array();
    for (auto const& c : r.counterexamples) {
      std::vector<mask_type> mask_map;
      for (auto i : c.map) {
        mask_map.push_back(power_mask(i));
      }
      counterexamples.push_back({{"left", c.left},
                                 {"right", c.right},
                                 {"left_semigroup", to_json(c.left_semigroup)},
                                 {"right_semigroup", to_json(c.right_semigroup)},
                                 {"map", c.map},
                                 {"mask_map", mask_map},
                                 {"reverified", c.reverified}});
    }
    return {{"order", r.order},
            {"classes", r.classes},
            {"pairs_checked", r.pairs_checked},
            {"counterexamples", std::move(counterexamples)},
            {"pruned_by_fingerprint", r.pruned_by_fingerprint},
            {"searched", r.searched},
            {"double_checked", r.double_checked},
            {"double_check_conflicts", r.double_check_conflicts},
            {"elapsed_ms", r.elapsed_ms},
            {"seed", r.seed},
            {"jobs", r.jobs}};
  }

  json to_json(prop1_report const& r) {
    json violations = json::array();
    for (auto const& v : r.violations) {
      violations.push_back({{"entry", v.entry},
                            {"family", v.family},
                            {"members", v.members},
                            {"detail", v.detail}});
    }
    return {{"order", r.order},
            {"seed", r.seed},
            {"samples_per_entry", r.samples_per_entry},
            {"commutative_entries", r.commutative_entries},
            {"families_checked", r.families_checked},
            {"congruences_checked", r.congruences_checked},
            {"closures_checked", r.closures_checked},
            {"witnesses_checked", r.witnesses_checked},
            {"case1_witnesses", r.case1_witnesses},
            {"case2_witnesses", r.case2_witnesses},
            {"violations", std::move(violations)}};
  }

  json to_json(numerical_monoid const& M) {
    json out{{"generators", M.generators()},
             {"gaps", M.gaps()},
             {"genus", M.gaps().size()},
             {"frobenius", nullptr}};
    if (auto f = M.frobenius()) {
      out["frobenius"] = *f;
    }
    return out;
  }

  json to_json(nm_witness const& w) {
    return {{"case", "Case2"},
            {"multiplier", w.multiplier},
            {"lhs", w.lhs},
            {"rhs", w.rhs},
            {"a", w.a},
            {"b", w.b}};
  }

  json to_json(free_campaign_report const& r) {
    return {{"alphabet", r.alphabet},
            {"trials", r.trials},
            {"seed", r.seed},
            {"equal_pairs", r.equal_pairs},
            {"distinct_pairs", r.distinct_pairs},
            {"violations", r.violations},
            {"disjointness_failures", r.disjointness_failures},
            {"first_failure", r.first_failure}};
  }

  json to_json(identity_lemma_report const& r) {
    return {{"max_order", r.max_order},
            {"monoids", r.monoids},
            {"pairs", r.pairs},
            {"homomorphisms", r.homomorphisms},
            {"surjective_homomorphisms", r.surjective_homomorphisms},
            {"violations", r.violations}};
  }

}  // namespace psg
