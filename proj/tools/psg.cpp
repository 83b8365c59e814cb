// psg: batch front-end for the power semigroup workbench.  Every subcommand
// writes one JSON report to stdout (or --out).
//
// Exit status: 0 on success, 1 when a computation contradicts a proven
// statement (or the probe finds a counterexample), 2 on usage or input
// errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "psg/cancellativity.hpp"
#include "psg/catalog.hpp"
#include "psg/error.hpp"
#include "psg/free_semigroup.hpp"
#include "psg/identity_lemma.hpp"
#include "psg/isomorphism.hpp"
#include "psg/numerical_monoid.hpp"
#include "psg/power.hpp"
#include "psg/report.hpp"
#include "psg/semigroup.hpp"

namespace {

  using psg::json;

  constexpr int exit_ok        = 0;
  constexpr int exit_violation = 1;
  constexpr int exit_usage     = 2;

  struct global_flags {
    std::uint64_t seed         = 0;
    unsigned      jobs         = 1;
    std::string   out;
    bool          long_running = false;
  };

  // Thrown to report a usage problem detected after parsing.
  struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  template <typename T>
  std::vector<T> parse_list(std::string const& text, char sep = ',') {
    std::vector<T>     out;
    std::istringstream in(text);
    std::string        item;
    while (std::getline(in, item, sep)) {
      if (item.empty()) {
        continue;
      }
      std::size_t used = 0;
      long long   v    = 0;
      try {
        v = std::stoll(item, &used, 0);
      } catch (std::exception const&) {
        used = 0;
      }
      if (used != item.size() || v < 0) {
        throw usage_error("invalid list item '" + item + "' in '" + text
                          + "'");
      }
      out.push_back(static_cast<T>(v));
    }
    return out;
  }

  json envelope(std::string const& command, json body) {
    body["schema_version"] = psg::schema_version;
    body["command"]        = command;
    return body;
  }

  void emit(global_flags const& g, json const& report) {
    std::string const text = report.dump(2) + "\n";
    if (g.out.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(g.out);
    if (!f) {
      throw usage_error("cannot write '" + g.out + "'");
    }
    f << text;
  }

  ////////////////////////////////////////////////////////////////////////
  // Family selection shared by family, cancellatives and witness
  ////////////////////////////////////////////////////////////////////////

  struct family_flags {
    std::string kind = "power";
    std::string gens;
    std::string partition;
  };

  void add_family_flags(CLI::App* cmd, family_flags& f) {
    cmd->add_option("--kind", f.kind,
                    "power | singletons | closure | congruence | list")
        ->check(CLI::IsMember(
            {"power", "singletons", "closure", "congruence", "list"}));
    cmd->add_option("--gens", f.gens,
                    "comma-separated subset masks (closure generators, or "
                    "the members for --kind list)");
    cmd->add_option("--partition", f.partition,
                    "comma-separated block labels, one per element");
  }

  std::vector<psg::subset> parse_masks(std::string const& text) {
    std::vector<psg::subset> out;
    for (auto m : parse_list<psg::mask_type>(text)) {
      if (m == 0) {
        throw usage_error("subset masks must be non-zero");
      }
      out.emplace_back(m);
    }
    return out;
  }

  psg::subset_family select_family(psg::finite_semigroup const& S,
                                   family_flags const&          f) {
    if (f.kind == "power") {
      return psg::full_family(S);
    }
    if (f.kind == "singletons") {
      return psg::singleton_family(S);
    }
    if (f.kind == "closure") {
      auto const gens = parse_masks(f.gens);
      return psg::downward_complete_closure(S, gens);
    }
    if (f.kind == "congruence") {
      auto const labels = parse_list<std::size_t>(f.partition);
      return psg::congruence_family(S, psg::congruence_from_partition(S, labels));
    }
    return psg::subset_family(S, parse_masks(f.gens));
  }

  ////////////////////////////////////////////////////////////////////////
  // Error reporting
  ////////////////////////////////////////////////////////////////////////

  int report_error(global_flags const& g,
                   std::string const&  command,
                   std::string const&  kind,
                   std::string const&  message,
                   json                extra,
                   int                 code) {
    std::cerr << "psg " << command << ": " << kind << ": " << message << "\n";
    extra["kind"]    = kind;
    extra["message"] = message;
    try {
      emit(g, envelope(command, {{"error", std::move(extra)}}));
    } catch (std::exception const&) {
    }
    return code;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Power semigroup workbench"};
  app.require_subcommand(1);
  app.fallthrough();

  global_flags g;
  app.add_option("--seed", g.seed, "seed for random campaigns");
  app.add_option("--jobs", g.jobs, "worker threads for probe/enumerate")
      ->check(CLI::Range(1u, 1024u));
  app.add_option("--out", g.out, "write the report to this file");
  app.add_flag("--long-running", g.long_running, "allow order 5 catalogs");

  std::string table_path, other_path;

  auto* validate = app.add_subcommand("validate", "validate a Cayley table");
  validate->add_option("--table", table_path)->required();

  std::size_t cap   = psg::default_power_cap;
  auto*       power = app.add_subcommand("power", "materialise P(S)");
  power->add_option("--table", table_path)->required();
  power->add_option("--cap", cap, "largest carrier to materialise");

  family_flags fam;
  auto* family = app.add_subcommand("family", "build a subset family");
  family->add_option("--table", table_path)->required();
  add_family_flags(family, fam);

  auto* cancellatives = app.add_subcommand(
      "cancellatives", "classify cancellative members of a family");
  cancellatives->add_option("--table", table_path)->required();
  add_family_flags(cancellatives, fam);

  std::string set_text;
  auto*       witness = app.add_subcommand(
      "witness", "non-cancellativity witness for a subset");
  witness->add_option("--table", table_path)->required();
  witness->add_option("--set", set_text, "comma-separated elements")
      ->required();
  add_family_flags(witness, fam);

  bool  no_invariants = false;
  auto* iso = app.add_subcommand("iso", "decide isomorphism of two tables");
  iso->add_option("--table", table_path)->required();
  iso->add_option("--other", other_path)->required();
  iso->add_flag("--no-invariants", no_invariants,
                "search without invariant pruning");

  std::string map_text;
  auto* lift = app.add_subcommand("lift", "lift an isomorphism H -> K");
  lift->add_option("--table", table_path)->required();
  lift->add_option("--other", other_path)->required();
  lift->add_option("--map", map_text, "images of 0, 1, ... in K")
      ->required();

  auto* restrict_cmd = app.add_subcommand(
      "restrict", "restrict an isomorphism P(H) -> P(K) to H -> K");
  restrict_cmd->add_option("--table", table_path)->required();
  restrict_cmd->add_option("--other", other_path)->required();
  restrict_cmd->add_option("--map", map_text,
                           "image masks of the masks 1, 2, ..., 2^n - 1; "
                           "searched for when omitted");

  std::size_t order   = 0;
  bool        labeled = false;
  bool        audit   = false;
  auto* enumerate     = app.add_subcommand("enumerate", "catalog semigroups");
  enumerate->add_option("--order", order)->required();
  enumerate->add_flag("--labeled", labeled, "all tables, not up to iso");
  enumerate->add_flag("--audit", audit, "pairwise and sampled audit");

  bool  no_timing = false, no_double_check = false;
  auto* probe = app.add_subcommand("probe", "global isomorphism probe");
  probe->add_option("--order", order)->required();
  probe->add_flag("--no-timing", no_timing, "report elapsed_ms as 0");
  probe->add_flag("--no-double-check", no_double_check,
                  "skip the unpruned cross-check at order <= 3");

  std::size_t samples = 8;
  auto*       prop1   = app.add_subcommand(
      "prop1-check", "exhaustive cancellativity classification check");
  prop1->add_option("--order", order)->required();
  prop1->add_option("--samples", samples, "random closures per semigroup");

  std::size_t identity_order = 4;
  auto*       identity       = app.add_subcommand(
      "identity-check", "surjective homomorphisms preserve identities");
  identity->add_option("--order", identity_order);

  std::string gens_text, member_text, compare_text;
  bool        show_gaps = false;
  auto*       nm = app.add_subcommand("nm", "numerical monoid membership");
  nm->add_option("--gens", gens_text)->required();
  nm->add_flag("--gaps", show_gaps, "list the gaps");
  nm->add_option("--member", member_text, "comma-separated values to test");
  nm->add_option("--compare", compare_text,
                 "generators of a second monoid to compare");

  auto* nm_witness = app.add_subcommand(
      "nm-witness", "non-cancellativity witness in a numerical monoid");
  nm_witness->add_option("--gens", gens_text)->required();
  nm_witness->add_option("--set", set_text)->required();

  std::size_t alphabet = 2, trials = 1000, max_length = 6, max_words = 64;
  auto*       free_check = app.add_subcommand(
      "free-check", "cancellativity of letter sets in P(F+(V))");
  free_check->add_option("--alphabet", alphabet)->check(CLI::Range(1, 26));
  free_check->add_option("--trials", trials);
  free_check->add_option("--max-length", max_length);
  free_check->add_option("--max-words", max_words);

  try {
    app.parse(argc, argv);
  } catch (CLI::Success const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_usage;
  }

  std::string const command = app.get_subcommands().front()->get_name();

  try {
    if (validate->parsed()) {
      auto const S   = psg::read_cayley_table(table_path);
      json       out = psg::to_json(S);
      json       left = json::array(), right = json::array(),
           both     = json::array();
      for (std::size_t a = 0; a < S.order(); ++a) {
        if (psg::is_left_cancellative(S, a)) {
          left.push_back(a);
        }
        if (psg::is_right_cancellative(S, a)) {
          right.push_back(a);
        }
        if (psg::is_cancellative(S, a)) {
          both.push_back(a);
        }
      }
      out["valid"]                 = true;
      out["left_cancellative"]     = left;
      out["right_cancellative"]    = right;
      out["cancellative"]          = both;
      out["group"]                 = psg::is_group(S);
      emit(g, envelope(command, out));
      return exit_ok;
    }

    if (power->parsed()) {
      auto const S  = psg::read_cayley_table(table_path);
      auto const PS = psg::build_power_semigroup(S, cap);
      std::vector<psg::mask_type> elements;
      for (std::size_t i = 0; i < PS.order(); ++i) {
        elements.push_back(psg::power_mask(i));
      }
      json p        = psg::to_json(PS);
      p["elements"] = elements;
      emit(g, envelope(command, {{"semigroup", psg::to_json(S)}, {"power", p}}));
      return exit_ok;
    }

    if (family->parsed()) {
      auto const S   = psg::read_cayley_table(table_path);
      auto const F   = select_family(S, fam);
      json       out = psg::to_json(F);
      out["certificate"] = psg::to_json(psg::check_downward_complete(F));
      emit(g, envelope(command, out));
      return exit_ok;
    }

    if (cancellatives->parsed()) {
      auto const S     = psg::read_cayley_table(table_path);
      auto const F     = select_family(S, fam);
      auto const brute = psg::cancellative_elements_bruteforce(F);
      json       out{{"family", psg::to_json(F)},
               {"bruteforce", psg::masks(brute)},
               {"prop1", nullptr},
               {"agree", nullptr},
               {"prop1_precondition", nullptr}};
      int code = exit_ok;
      try {
        auto const prop = psg::classify_cancellatives_prop1(F);
        out["prop1"]    = psg::masks(prop);
        out["agree"]    = prop == brute;
        if (prop != brute) {
          code = exit_violation;
        }
      } catch (psg::precondition_violated const& e) {
        out["prop1_precondition"] = e.what();
      }
      emit(g, envelope(command, out));
      return code;
    }

    if (witness->parsed()) {
      auto const S = psg::read_cayley_table(table_path);
      auto const F = select_family(S, fam);
      auto const A = psg::subset::of(parse_list<std::size_t>(set_text));
      auto const w = psg::witness_noncancellative(F, A);
      json       out = psg::to_json(w);
      out["valid"]   = psg::is_valid_witness(S, w);
      emit(g, envelope(command, out));
      return exit_ok;
    }

    if (iso->parsed()) {
      auto const S = psg::read_cayley_table(table_path);
      auto const T = psg::read_cayley_table(other_path);
      auto const v = psg::decide_isomorphism(
          S, T, {.use_invariants = !no_invariants});
      emit(g, envelope(command, psg::to_json(v)));
      return exit_ok;
    }

    if (lift->parsed()) {
      auto const H = psg::read_cayley_table(table_path);
      auto const K = psg::read_cayley_table(other_path);
      psg::morphism const f(H, K, parse_list<std::size_t>(map_text));
      auto const          F = psg::lift_isomorphism(f);
      json                out{{"carrier_map", psg::to_json(f)},
                              {"lift", psg::to_json(F)}};
      emit(g, envelope(command, out));
      return exit_ok;
    }

    if (restrict_cmd->parsed()) {
      auto const H  = psg::read_cayley_table(table_path);
      auto const K  = psg::read_cayley_table(other_path);
      auto const PH = psg::build_power_semigroup(H);
      auto const PK = psg::build_power_semigroup(K);
      std::optional<psg::morphism> F;
      if (map_text.empty()) {
        F = psg::find_isomorphism(PH, PK);
        if (!F) {
          emit(g, envelope(command, {{"power_isomorphic", false},
                                     {"restriction", nullptr}}));
          return exit_ok;
        }
      } else {
        std::vector<std::size_t> indices;
        for (auto m : parse_list<psg::mask_type>(map_text)) {
          if (m == 0) {
            throw usage_error("image masks must be non-zero");
          }
          indices.push_back(psg::power_index(m));
        }
        F.emplace(PH, PK, std::move(indices));
      }
      auto const FF = psg::as_power_morphism(H, K, *F);
      auto const f  = psg::restrict_isomorphism(FF);
      json       out{{"power_isomorphic", true},
               {"power_map", psg::to_json(FF)},
               {"restriction", psg::to_json(f)},
               {"commutativity_transfer", nullptr}};
      int code = exit_ok;
      if (H.is_commutative()) {
        bool const ok                 = psg::verify_commutativity_transfer(FF);
        out["commutativity_transfer"] = ok;
        code                          = ok ? exit_ok : exit_violation;
      }
      emit(g, envelope(command, out));
      return code;
    }

    if (enumerate->parsed()) {
      auto const catalog = psg::enumerate_semigroups(
          order, {.up_to_isomorphism = !labeled,
                  .long_running      = g.long_running,
                  .jobs              = g.jobs});
      json entries = json::array();
      for (auto const& e : catalog) {
        entries.push_back(psg::to_json(e));
      }
      json out{{"order", order},
               {"up_to_isomorphism", !labeled},
               {"count", catalog.size()},
               {"entries", std::move(entries)}};
      int code = exit_ok;
      if (audit && !labeled) {
        auto const a  = psg::audit_enumeration(catalog, g.seed);
        out["audit"]  = psg::to_json(a);
        code          = a.consistent() ? exit_ok : exit_violation;
      }
      emit(g, envelope(command, out));
      return code;
    }

    if (probe->parsed()) {
      auto const r = psg::global_iso_probe(
          {.order        = order,
           .jobs         = g.jobs,
           .long_running = g.long_running,
           .double_check = !no_double_check,
           .record_time  = !no_timing,
           .seed         = g.seed});
      emit(g, envelope(command, psg::to_json(r)));
      bool bad = !r.counterexamples.empty() || r.double_check_conflicts > 0;
      return bad ? exit_violation : exit_ok;
    }

    if (prop1->parsed()) {
      auto const r = psg::prop1_exhaustive_check(
          {.order             = order,
           .seed              = g.seed,
           .samples_per_entry = samples,
           .long_running      = g.long_running});
      emit(g, envelope(command, psg::to_json(r)));
      return r.violations.empty() ? exit_ok : exit_violation;
    }

    if (identity->parsed()) {
      auto const r = psg::check_identity_preservation(identity_order);
      emit(g, envelope(command, psg::to_json(r)));
      return r.violations.empty() ? exit_ok : exit_violation;
    }

    if (nm->parsed()) {
      psg::numerical_monoid const M(parse_list<std::uint64_t>(gens_text));
      json                        out = psg::to_json(M);
      if (!show_gaps) {
        out.erase("gaps");
      }
      if (!member_text.empty()) {
        json membership = json::object();
        for (auto x : parse_list<std::uint64_t>(member_text)) {
          membership[std::to_string(x)] = psg::nm_membership(M, x);
        }
        out["membership"] = membership;
      }
      if (!compare_text.empty()) {
        psg::numerical_monoid const other(
            parse_list<std::uint64_t>(compare_text));
        out["compare"] = {{"other", psg::to_json(other)},
                          {"equal", psg::nm_equal(M, other)}};
      }
      emit(g, envelope(command, out));
      return exit_ok;
    }

    if (nm_witness->parsed()) {
      psg::numerical_monoid const M(parse_list<std::uint64_t>(gens_text));
      auto const w   = psg::nm_witness_noncancellative(
          M, parse_list<std::uint64_t>(set_text));
      json out       = psg::to_json(w);
      out["valid"]   = psg::is_valid_nm_witness(M, w);
      out["monoid"]  = psg::to_json(M);
      emit(g, envelope(command, out));
      return exit_ok;
    }

    if (free_check->parsed()) {
      auto const r = psg::run_free_campaign(
          alphabet, trials, g.seed, max_length, max_words);
      emit(g, envelope(command, psg::to_json(r)));
      bool bad = r.violations > 0 || r.disjointness_failures > 0;
      return bad ? exit_violation : exit_ok;
    }
  } catch (psg::theorem_violation const& e) {
    return report_error(g, command, "TheoremViolation", e.what(), {},
                        exit_violation);
  } catch (psg::non_associative const& e) {
    auto t = e.triple();
    return report_error(g, command, "NonAssociative", e.what(),
                        {{"triple", {t[0], t[1], t[2]}}}, exit_usage);
  } catch (psg::not_compatible const& e) {
    auto q = e.quadruple();
    return report_error(g, command, "NotCompatible", e.what(),
                        {{"quadruple", {q[0], q[1], q[2], q[3]}}},
                        exit_usage);
  } catch (psg::index_out_of_range const& e) {
    return report_error(g, command, "IndexOutOfRange", e.what(), {},
                        exit_usage);
  } catch (psg::ambient_mismatch const& e) {
    return report_error(g, command, "AmbientMismatch", e.what(), {},
                        exit_usage);
  } catch (psg::order_cap_exceeded const& e) {
    return report_error(g, command, "OrderCapExceeded", e.what(), {},
                        exit_usage);
  } catch (psg::order_unsupported const& e) {
    return report_error(g, command, "OrderUnsupported", e.what(), {},
                        exit_usage);
  } catch (psg::precondition_violated const& e) {
    return report_error(g, command, "PreconditionViolated", e.what(), {},
                        exit_usage);
  } catch (psg::non_member_input const& e) {
    return report_error(g, command, "NonMemberInput", e.what(), {},
                        exit_usage);
  } catch (psg::error const& e) {
    return report_error(g, command, "Error", e.what(), {}, exit_usage);
  } catch (usage_error const& e) {
    return report_error(g, command, "Usage", e.what(), {}, exit_usage);
  }
  return exit_usage;
}
