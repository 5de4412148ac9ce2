#pragma once

#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bicat/algebra_calculus.hpp"
#include "bicat/groupoid_calculus.hpp"
#include "bicat/groupoid_rep.hpp"
#include "bicat/json_io.hpp"
#include "bicat/morita_algebra.hpp"
#include "bicat/multimatrix_calculus.hpp"
#include "bicat/report.hpp"

namespace bicat::cli {

namespace detail {

inline std::string plural(std::size_t n, const char* noun) {
  return std::to_string(n) + " " + noun + (n == 1 ? "" : "s");
}

inline void emit(const Report& rep, const std::string& format, std::ostream& out) {
  out << (format == "text" ? rep.render_text() : rep.render_json());
}

inline int exit_code(const Report& rep) { return rep.status == "pass" ? 0 : 1; }

// --- validate ---------------------------------------------------------------

inline Report cmd_validate(const std::vector<std::string>& files, std::uint64_t seed) {
  Report rep;
  rep.command = "validate";
  rep.determinism_seed = seed;
  rep.status = "pass";
  std::set<std::string> names;
  for (const auto& path : files) {
    try {
      auto doc = load_document(path);
      if (!names.insert(doc.name).second) {
        rep.status = "fail";
        rep.add(path, "fail", "duplicate instance name '" + doc.name + "'");
        continue;
      }
      validate_payload(doc);
      rep.add(path, "valid " + doc.kind + " '" + doc.name + "'");
    } catch (const Error& e) {
      rep.status = "fail";
      rep.add(path, "fail", e.what());
    }
  }
  return rep;
}

// --- compose ----------------------------------------------------------------

inline Report cmd_compose(const std::string& calculus, const std::string& lhs_path,
                          const std::string& rhs_path, const std::string& out_path,
                          std::uint64_t seed) {
  Report rep;
  rep.command = "compose " + calculus;
  rep.determinism_seed = seed;
  auto lhs_doc = load_document(lhs_path);
  auto rhs_doc = load_document(rhs_path);
  InstanceDocument out_doc;
  out_doc.name = lhs_doc.name + "_x_" + rhs_doc.name;

  if (calculus == "rings") {
    auto lhs = bimodule_from_json(lhs_doc.payload);
    auto rhs = bimodule_from_json(rhs_doc.payload);
    auto comp = tensor_over(lhs, rhs);
    rep.add("compose", "bimodule of dim " + std::to_string(comp.cell.dim()) + " from dims " +
                           std::to_string(lhs.dim()) + ", " + std::to_string(rhs.dim()));
    if (lhs.left_algebra() == lhs.right_algebra() && lhs == unit_bimodule(lhs.left_algebra())) {
      bool iso = is_isomorphic_bimodule(comp.cell, rhs, seed).found();
      rep.add("left-unitor", iso ? "composite isomorphic to the right factor"
                                 : "unitor isomorphism missing");
      if (!iso) rep.status = "fail";
    }
    if (rhs.left_algebra() == rhs.right_algebra() && rhs == unit_bimodule(rhs.left_algebra())) {
      bool iso = is_isomorphic_bimodule(comp.cell, lhs, seed).found();
      rep.add("right-unitor", iso ? "composite isomorphic to the left factor"
                                  : "unitor isomorphism missing");
      if (!iso) rep.status = "fail";
    }
    out_doc.kind = "bimodule";
    out_doc.payload = bimodule_to_json(comp.cell);
  } else if (calculus == "cstar") {
    auto lhs = correspondence_from_json(lhs_doc.payload);
    auto rhs = correspondence_from_json(rhs_doc.payload);
    auto prod = interior_tensor(lhs, rhs);
    rep.add("compose", "multiplicity matrix " + std::to_string(prod.left.block_count()) + "x" +
                           std::to_string(prod.right.block_count()) + " (strict product)");
    if (lhs.mult == int_identity(lhs.left.block_count()))
      rep.add("left-unitor", prod == rhs ? "strict unit law holds exactly"
                                         : "strict unit law violated");
    out_doc.kind = "correspondence";
    out_doc.payload = correspondence_to_json(prod);
  } else if (calculus == "groupoids") {
    auto lhs = bibundle_from_json(lhs_doc.payload);
    auto rhs = bibundle_from_json(rhs_doc.payload);
    auto comp = hs_tensor(lhs, rhs);
    rep.add("compose", "bibundle with " + plural(comp.cell.carrier(), "orbit") + " from carriers " +
                           std::to_string(lhs.carrier()) + ", " + std::to_string(rhs.carrier()));
    if (lhs == unit_bibundle(lhs.left_groupoid())) {
      bool iso = find_bibundle_iso(comp.cell, rhs).found();
      rep.add("left-unitor",
              iso ? "composite isomorphic to the right factor" : "unitor isomorphism missing");
      if (!iso) rep.status = "fail";
    }
    out_doc.kind = "bibundle";
    out_doc.payload = bibundle_to_json(comp.cell);
  } else {
    throw ValidationFailure("unknown calculus '" + calculus + "'");
  }

  if (rep.status.empty()) rep.status = "pass";
  if (!out_path.empty()) {
    save_document(out_doc, out_path);
    rep.add("output", "wrote " + out_path);
  }
  return rep;
}

// --- coherence --------------------------------------------------------------

template <ArrowCalculus C>
void run_coherence(const std::vector<typename C::OneCell>& arrows, std::size_t cap, Report& rep,
                   const char* annotation) {
  std::size_t unit_fail = 0;
  for (const auto& m : arrows) {
    if (!check_left_unit<C>(m).holds) ++unit_fail;
    if (!check_right_unit<C>(m).holds) ++unit_fail;
  }
  rep.add("unitors", unit_fail == 0 ? "all invertible (" + detail::plural(arrows.size(), "arrow") +
                                          ")" + annotation
                                    : std::to_string(unit_fail) + " unitors failed");
  if (unit_fail) rep.status = "fail";

  std::size_t triangles = 0, tri_fail = 0;
  for (std::size_t i = 0; i < arrows.size() && triangles < cap; ++i)
    for (std::size_t j = 0; j < arrows.size() && triangles < cap; ++j) {
      if (!C::objects_equal(C::right_object(arrows[i]), C::left_object(arrows[j]))) continue;
      ++triangles;
      auto r = check_triangle<C>(arrows[i], arrows[j]);
      if (!r.holds) {
        ++tri_fail;
        rep.add("triangle witness", "fail", "tuple (" + std::to_string(i) + "," +
                                                std::to_string(j) + "): " + r.witness);
      }
    }
  rep.add("triangle", tri_fail == 0 ? "holds on " + detail::plural(triangles, "tuple") + annotation
                                    : std::to_string(tri_fail) + " of " +
                                          detail::plural(triangles, "tuple") + " failed");
  if (tri_fail) rep.status = "fail";

  std::size_t assocs = 0, assoc_fail = 0;
  for (std::size_t i = 0; i < arrows.size() && assocs < cap; ++i)
    for (std::size_t j = 0; j < arrows.size() && assocs < cap; ++j) {
      if (!C::objects_equal(C::right_object(arrows[i]), C::left_object(arrows[j]))) continue;
      for (std::size_t k = 0; k < arrows.size() && assocs < cap; ++k) {
        if (!C::objects_equal(C::right_object(arrows[j]), C::left_object(arrows[k]))) continue;
        ++assocs;
        if (!C::is_iso(C::associator(arrows[i], arrows[j], arrows[k]))) ++assoc_fail;
      }
    }
  rep.add("associator", assoc_fail == 0 ? "invertible on " + detail::plural(assocs, "triple") +
                                              annotation
                                        : std::to_string(assoc_fail) + " failures");
  if (assoc_fail) rep.status = "fail";

  std::size_t pentagons = 0, pent_fail = 0;
  for (std::size_t i = 0; i < arrows.size() && pentagons < cap; ++i)
    for (std::size_t j = 0; j < arrows.size() && pentagons < cap; ++j) {
      if (!C::objects_equal(C::right_object(arrows[i]), C::left_object(arrows[j]))) continue;
      for (std::size_t k = 0; k < arrows.size() && pentagons < cap; ++k) {
        if (!C::objects_equal(C::right_object(arrows[j]), C::left_object(arrows[k]))) continue;
        for (std::size_t l = 0; l < arrows.size() && pentagons < cap; ++l) {
          if (!C::objects_equal(C::right_object(arrows[k]), C::left_object(arrows[l]))) continue;
          ++pentagons;
          auto r = check_pentagon<C>(arrows[i], arrows[j], arrows[k], arrows[l]);
          if (!r.holds) {
            ++pent_fail;
            rep.add("pentagon witness", "fail",
                    "tuple (" + std::to_string(i) + "," + std::to_string(j) + "," +
                        std::to_string(k) + "," + std::to_string(l) + ")");
          }
        }
      }
    }
  rep.add("pentagon", pent_fail == 0 ? "holds on " + detail::plural(pentagons, "tuple") +
                                           annotation
                                     : std::to_string(pent_fail) + " of " +
                                           detail::plural(pentagons, "tuple") + " failed");
  if (pent_fail) rep.status = "fail";
}

inline Report cmd_coherence(const std::string& calculus, const std::vector<std::string>& files,
                            std::size_t cap, std::uint64_t seed) {
  Report rep;
  rep.command = "coherence " + calculus;
  rep.determinism_seed = seed;
  rep.status = "pass";
  if (calculus == "rings") {
    std::vector<Bimodule> arrows;
    for (const auto& f : files) arrows.push_back(bimodule_from_json(load_document(f).payload));
    run_coherence<AlgebraCalculus>(arrows, cap, rep, "");
  } else if (calculus == "cstar") {
    std::vector<MultiplicityBimodule> arrows;
    for (const auto& f : files)
      arrows.push_back(correspondence_from_json(load_document(f).payload));
    run_coherence<MultimatrixCalculus>(arrows, cap, rep, "; strict identities");
  } else if (calculus == "groupoids") {
    std::vector<Bibundle> arrows;
    for (const auto& f : files) arrows.push_back(bibundle_from_json(load_document(f).payload));
    run_coherence<GroupoidCalculus>(arrows, cap, rep, "");
  } else {
    throw ValidationFailure("unknown calculus '" + calculus + "'");
  }
  return rep;
}

// --- morita -----------------------------------------------------------------

inline void report_ring_certification(const Bimodule& m, const RingEquivalenceCertification& cert,
                                      Report& rep, std::uint64_t seed) {
  auto fgp_line = [](const FgpResult& r) {
    if (r.projective)
      return "projective, " + detail::plural(r.certificate->generator_count, "generator");
    return "refuted (proven): " + r.obstruction;
  };
  if (cert.fgp_right) rep.add("fgp_right", fgp_line(*cert.fgp_right));
  if (cert.fgp_left) rep.add("fgp_left", fgp_line(*cert.fgp_left));
  if (cert.end_result) {
    if (cert.end_result->canonical_iso)
      rep.add("end_iso", "canonical map R -> End is an isomorphism (dim " +
                             std::to_string(cert.end_result->basis.size()) + ")");
    else
      rep.add("end_iso", "canonical map fails: End has dim " +
                             std::to_string(cert.end_result->basis.size()) + ", R has dim " +
                             std::to_string(m.left_algebra().dim()));
  }
  if (cert.inverse)
    rep.add("inverse", "Hom-inverse bimodule of dim " + std::to_string(cert.inverse->dim()));
  if (cert.round_trip_right)
    rep.add("round_trip_right", "inverse (x) M isomorphic to the unit bimodule");
  if (cert.round_trip_left)
    rep.add("round_trip_left", "M (x) inverse isomorphic to the unit bimodule");
  if (cert.equivalent) {
    auto cross = verify_object_isomorphism<AlgebraCalculus>(m, *cert.inverse, seed);
    rep.add("bicategory_cross_check",
            cross.isomorphic ? "verify_object_isomorphism agrees" : "DISAGREEMENT");
    rep.status = cross.isomorphic ? "pass" : "fail";
  } else {
    rep.status = "fail";
    rep.add("verdict", "not an equivalence bimodule",
            "failed at " + cert.failed_stage +
                (cert.refutation_proven ? " (proven)" : " (high-confidence, randomized search)"));
  }
}

inline Report cmd_morita(const std::string& calculus, const std::vector<std::string>& files,
                         std::size_t cap, std::uint64_t seed) {
  Report rep;
  rep.command = "morita " + calculus;
  rep.determinism_seed = seed;
  if (calculus == "rings") {
    if (files.size() == 1) {
      auto m = bimodule_from_json(load_document(files[0]).payload);
      auto cert = certify_equivalence(m, seed);
      report_ring_certification(m, cert, rep, seed);
    } else if (files.size() == 2) {
      auto r = algebra_from_json(load_document(files[0]).payload);
      auto s = algebra_from_json(load_document(files[1]).payload);
      auto search = morita_search_rings(r, s, cap, seed);
      rep.add("search", detail::plural(search.candidates_tried, "candidate bimodule") +
                            " up to dim " + std::to_string(cap));
      if (search.equivalent) {
        rep.add("witness", "equivalence bimodule found, dim " +
                               std::to_string(search.witness->dim()));
        report_ring_certification(*search.witness, *search.certification, rep, seed);
      } else if (search.cap_exhausted) {
        rep.status = "unknown";
        rep.add("verdict", "no equivalence bimodule of dim <= " + std::to_string(cap) +
                               " exists (proven exhaustively); beyond the cap the answer is unknown");
      } else {
        rep.status = "unknown";
        rep.add("verdict", "no equivalence found; some refutations were high-confidence only");
      }
    } else {
      throw ValidationFailure("morita rings takes one bimodule or two algebras");
    }
  } else if (calculus == "cstar") {
    if (files.size() != 1)
      throw ValidationFailure("morita cstar takes one correspondence");
    auto e = correspondence_from_json(load_document(files[0]).payload);
    auto res = certify_equivalence_cstar(e);
    std::string kvec = "[";
    for (std::size_t i = 0; i < res.k_blocks.size(); ++i)
      kvec += (i ? "," : "") + std::to_string(res.k_blocks[i]);
    kvec += "]";
    rep.add("full", is_full(e) ? "no zero column" : "zero column present");
    rep.add("compacts_iso", (res.equivalent || res.failed_condition != "compacts_iso"
                                 ? "E is a permutation matrix"
                                 : "E is not a permutation matrix") +
                                std::string("; K-block sizes ") + kvec);
    if (res.equivalent) {
      rep.add("round_trip", "conjugate inverts exactly: E E^T and E^T E are unit correspondences");
      rep.status = "pass";
    } else {
      rep.status = "fail";
      rep.add("verdict", "not invertible", "failed at " + res.failed_condition);
    }
  } else if (calculus == "groupoids") {
    if (files.size() == 1) {
      auto m = bibundle_from_json(load_document(files[0]).payload);
      auto bip = check_biprincipal(m);
      rep.add("left_principal", bip.left.principal ? "yes" : "no", bip.left.witness);
      rep.add("right_principal", bip.right.principal ? "yes" : "no", bip.right.witness);
      rep.add("properness", bip.properness_note);
      auto cross = verify_object_isomorphism<GroupoidCalculus>(m, opposite_bibundle(m), seed);
      rep.add("bicategory_cross_check", cross.isomorphic == bip.biprincipal
                                            ? "verify_object_isomorphism agrees"
                                            : "DISAGREEMENT");
      rep.status = (bip.biprincipal && cross.isomorphic == bip.biprincipal) ? "pass" : "fail";
    } else if (files.size() == 2) {
      auto g = groupoid_from_json(load_document(files[0]).payload);
      auto h = groupoid_from_json(load_document(files[1]).payload);
      auto verdict = morita_decide(g, h);
      if (verdict.status == MoritaVerdict::Status::equivalent) {
        rep.add("invariants", "orbit counts and isotropy iso-classes match");
        auto bip = check_biprincipal(*verdict.certificate);
        rep.add("certificate",
                "biprincipal bibundle with " + detail::plural(verdict.certificate->carrier(), "point") +
                    (bip.biprincipal ? "" : " (FAILED biprincipality re-check)"));
        rep.add("properness", bip.properness_note);
        rep.status = bip.biprincipal ? "pass" : "fail";
      } else if (verdict.status == MoritaVerdict::Status::not_equivalent) {
        rep.status = "fail";
        const auto& obs = *verdict.obstruction;
        auto orders = [](const std::vector<std::size_t>& v) {
          std::string s = "[";
          for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
          return s + "]";
        };
        rep.add("obstruction", obs.reason,
                "orbits " + std::to_string(obs.g_orbit_count) + " vs " +
                    std::to_string(obs.h_orbit_count) + "; isotropy orders " +
                    orders(obs.g_isotropy_orders) + " vs " + orders(obs.h_isotropy_orders));
      } else {
        rep.status = "unknown";
        rep.add("verdict", verdict.note);
      }
    } else {
      throw ValidationFailure("morita groupoids takes two groupoids or one bibundle");
    }
  } else {
    throw ValidationFailure("unknown calculus '" + calculus + "'");
  }
  return rep;
}

// --- rep-check ----------------------------------------------------------------

inline Report cmd_rep_check(const std::string& calculus, const std::string& file, std::size_t cap,
                            std::uint64_t seed) {
  Report rep;
  rep.command = "rep-check " + calculus;
  rep.determinism_seed = seed;
  if (calculus == "rings") {
    auto m = bimodule_from_json(load_document(file).payload);
    auto cert = certify_equivalence(m, seed);
    if (!cert.equivalent) {
      rep.status = "fail";
      rep.add("certification", "fail", "instance is not a certified equivalence (failed at " +
                                           cert.failed_stage + ")");
      return rep;
    }
    rep.add("certification", "equivalence bimodule certified");
    auto r = induced_functor_report(m, cert, cap, seed);
    rep.add("corpus", detail::plural(r.corpus_size, "module") + " up to dim " + std::to_string(cap));
    rep.add("hom_dims", r.hom_dims_preserved ? "preserved on all pairs" : "violated",
            r.hom_dims_preserved ? "" : r.failures.front());
    rep.add("injectivity", r.injective_on_iso_classes ? "iso classes stay distinct" : "violated");
    rep.add("round_trips", r.round_trips ? "inverse (x) (M (x) L) ~ L for all corpus modules"
                                         : "violated");
    rep.status = r.all_pass() ? "pass" : "fail";
  } else if (calculus == "groupoids") {
    auto m = bibundle_from_json(load_document(file).payload);
    GroupoidRepReport r;
    try {
      r = groupoid_rep_report(m, cap);
    } catch (const NotCertified& e) {
      rep.status = "fail";
      rep.add("certification", "fail", e.witness());
      return rep;
    }
    rep.add("certification", "biprincipal bibundle certified");
    rep.add("corpus", detail::plural(r.corpus_size, "action") + " up to " +
                          detail::plural(cap, "point"));
    rep.add("map_counts", r.map_counts_preserved ? "equivariant map counts preserved" : "violated");
    rep.add("injectivity", r.injective_on_iso_classes ? "iso classes stay distinct" : "violated");
    rep.add("round_trips", r.round_trips ? "opposite induction inverts on the corpus" : "violated");
    rep.status = r.all_pass() ? "pass" : "fail";
  } else {
    throw ValidationFailure("rep-check supports calculi 'rings' and 'groupoids'");
  }
  return rep;
}

}  // namespace detail

// Parses argv-style arguments, runs the subcommand, renders the report to
// `out`, and returns the process exit code (0 iff report status is "pass").
inline int run_cli(std::vector<std::string> args, std::ostream& out) {
  CLI::App app{"exact Morita and coherence checker for finite bicategories"};
  app.require_subcommand(1);

  std::string format = "json";
  std::uint64_t seed = 0;
  app.add_option("--format", format, "json|text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", seed, "determinism seed for randomized searches");

  std::vector<std::string> files;
  std::string calculus, lhs, rhs, out_path, file;
  std::size_t cap = 0;

  auto* validate = app.add_subcommand("validate", "validate instance documents");
  validate->add_option("files", files)->required()->expected(-1);

  auto* compose = app.add_subcommand("compose", "horizontally compose two instances");
  compose->add_option("calculus", calculus)->required()
      ->check(CLI::IsMember({"rings", "cstar", "groupoids"}));
  compose->add_option("lhs", lhs)->required();
  compose->add_option("rhs", rhs)->required();
  compose->add_option("--out", out_path, "path for the composed instance document");

  auto* coherence = app.add_subcommand("coherence", "check unitors, triangle and pentagon laws");
  coherence->add_option("calculus", calculus)->required()
      ->check(CLI::IsMember({"rings", "cstar", "groupoids"}));
  coherence->add_option("files", files)->required()->expected(-1);
  coherence->add_option("--cap", cap, "max tuples per law")->default_val(64);

  auto* morita = app.add_subcommand("morita", "certify or refute Morita equivalence");
  morita->add_option("calculus", calculus)->required()
      ->check(CLI::IsMember({"rings", "cstar", "groupoids"}));
  morita->add_option("files", files)->required()->expected(-1);
  morita->add_option("--cap", cap, "dimension cap for candidate search")->default_val(2);

  auto* rep_check = app.add_subcommand("rep-check", "transport representations along a certificate");
  rep_check->add_option("calculus", calculus)->required()
      ->check(CLI::IsMember({"rings", "groupoids"}));
  rep_check->add_option("file", file)->required();
  rep_check->add_option("--cap", cap, "corpus dimension/size cap")->default_val(2);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    int code = app.exit(e, msg, msg);
    out << msg.str();
    return code;
  }

  Report rep;
  try {
    if (validate->parsed()) rep = detail::cmd_validate(files, seed);
    else if (compose->parsed()) rep = detail::cmd_compose(calculus, lhs, rhs, out_path, seed);
    else if (coherence->parsed()) rep = detail::cmd_coherence(calculus, files, cap, seed);
    else if (morita->parsed()) rep = detail::cmd_morita(calculus, files, cap, seed);
    else if (rep_check->parsed()) rep = detail::cmd_rep_check(calculus, file, cap, seed);
  } catch (const Error& e) {
    rep.command = args.empty() ? "?" : args.front();
    rep.status = "fail";
    rep.determinism_seed = seed;
    rep.add("error", "command aborted", e.what());
  }
  detail::emit(rep, format, out);
  return detail::exit_code(rep);
}

}  // namespace bicat::cli
