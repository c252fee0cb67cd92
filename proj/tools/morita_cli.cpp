/*
 *   Copyright 2026 The morita authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Command-line front end. Canonical JSON reports go to stdout (sorted keys,
// no timestamps, bit-stable for identical inputs); a human summary and the
// timing go to stderr. Exit codes: 0 success/equivalent, 1 domain violation,
// 2 parse error, 3 verified-not-equivalent.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "morita/biset.hpp"
#include "morita/category.hpp"
#include "morita/congruence.hpp"
#include "morita/hom.hpp"
#include "morita/io.hpp"
#include "morita/rees.hpp"
#include "morita/semigroup.hpp"

namespace {

using nlohmann::json;
using namespace morita;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitParse = 2;
constexpr int kExitNotEquivalent = 3;

struct Options {
  std::string format = "json";
  bool oracle = false;
  uint64_t max_size = 10'000'000;
  std::string out_prefix;
};

struct Report {
  json doc = json::object();
  std::string human;
  int exit_code = kExitOk;

  void set_status(const char* status) {
    doc["status"] = status;
  }
};

std::string load_input(Report& rep, const char* role,
                       const std::filesystem::path& path) {
  const std::string text = read_file(path);
  rep.doc["inputs"][role] = fnv1a_hex(text);
  return text;
}

json details_json(const std::map<std::string, std::string>& details) {
  json j = json::object();
  for (const auto& [k, v] : details) {
    j[k] = v;
  }
  return j;
}

json mcalister_json(const McAlisterReport& rep) {
  json j = json::object();
  auto put = [&](const char* name, const McAlisterCheck& c) {
    json e = json::object();
    e["pass"] = c.pass;
    if (!c.pass) {
      e["witness"] = details_json(c.witness);
    }
    j[name] = e;
  };
  put("MF1", rep.mf1);
  put("MF2", rep.mf2);
  put("MF3", rep.mf3);
  put("MF4", rep.mf4);
  put("MF5", rep.mf5);
  j["all_pass"] = rep.all();
  return j;
}

json classification_json(const ClassificationReport& c) {
  json j = json::object();
  j["is_regular"] = c.is_regular;
  j["is_inverse"] = c.is_inverse;
  j["is_orthodox"] = c.is_orthodox;
  j["is_locally_inverse"] = c.is_locally_inverse;
  j["is_generalized_inverse"] = c.is_generalized_inverse;
  j["has_local_units"] = c.has_local_units;
  json w = json::object();
  if (c.regular_witness) w["not_regular"] = *c.regular_witness;
  if (c.inverse_witness) w["not_inverse"] = *c.inverse_witness;
  if (c.orthodox_witness) {
    w["not_orthodox"] =
        json::array({c.orthodox_witness->first, c.orthodox_witness->second});
  }
  if (c.locally_inverse_witness) {
    w["not_locally_inverse"] = *c.locally_inverse_witness;
  }
  if (c.local_units_witness) w["no_local_units"] = *c.local_units_witness;
  if (!w.empty()) j["witnesses"] = w;
  return j;
}

// Closed-form / brute-force cross checks over the FULL Rees semigroup.
// Disagreement would falsify the closed forms; report and fail.
json rees_oracle_json(const SandwichFunction& p) {
  auto full = build_rees(p, ReesMode::full);
  bool regular_ok = true;
  bool idem_ok = true;
  bool closure_ok = true;
  for (int a = 0; a < full.size(); ++a) {
    const ReesTriple t = full.triple(a);
    if (is_regular_triple(p, t) !=
        !inverses_of(full.semigroup(), a).empty()) {
      regular_ok = false;
    }
    if (is_idempotent_triple(p, t) != full.semigroup().is_idempotent(a)) {
      idem_ok = false;
    }
  }
  const auto& sg = full.semigroup();
  for (int a = 0; a < full.size() && closure_ok; ++a) {
    if (!sg.is_idempotent(a)) continue;
    for (int b = 0; b < full.size(); ++b) {
      if (sg.is_idempotent(b) && !sg.is_idempotent(sg.product(a, b))) {
        closure_ok = false;
        break;
      }
    }
  }
  json j = json::object();
  j["regular_triple_closed_form_agrees"] = regular_ok;
  j["idempotent_triple_closed_form_agrees"] = idem_ok;
  j["idempotent_triples_closed"] = closure_ok;
  if (!regular_ok || !idem_ok || !closure_ok) {
    throw DomainError(Errc::internal_inconsistency,
                      "closed-form triple tests disagree with brute force");
  }
  return j;
}

void emit(const Options& opt, Report& rep, double ms) {
  if (opt.format == "json") {
    std::cout << rep.doc.dump(2) << "\n";
    std::cerr << rep.human << "\n";
  } else {
    std::cout << rep.human << "\n";
  }
  std::cerr << "time_ms=" << static_cast<long long>(ms) << "\n";
}

int run_command(const Options& opt, const std::string& name,
                const std::function<void(Report&)>& body) {
  Report rep;
  rep.doc["command"] = name;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(rep);
  } catch (const ParseError& e) {
    rep.doc["status"] = "parse_error";
    rep.doc["error"] = {{"message", e.what()}};
    rep.human = std::string("error: ") + e.what();
    rep.exit_code = kExitParse;
  } catch (const DomainError& e) {
    rep.doc["status"] = "violation";
    rep.doc["error"] = {{"code", std::string(errc_name(e.code()))},
                        {"message", e.what()},
                        {"details", details_json(e.details())}};
    rep.human = std::string("error: ") + e.what();
    rep.exit_code = kExitViolation;
  }
  const auto end = std::chrono::steady_clock::now();
  const double ms =
      std::chrono::duration<double, std::milli>(end - start).count();
  emit(opt, rep, ms);
  return rep.exit_code;
}

std::string flag_str(bool b) {
  return b ? "yes" : "no";
}

void cmd_analyze(const Options& opt, Report& rep,
                 const std::filesystem::path& file) {
  auto S = parse_semigroup(load_input(rep, "semigroup", file));
  const auto cls = classify(S);
  json result = json::object();
  result["order"] = S.order();
  result["classification"] = classification_json(cls);
  result["idempotents"] = S.idempotents();
  const Partition d = green_d(S);
  result["d_classes"] = d.classes();
  if (cls.is_inverse) {
    const Relation leq = natural_order(S);
    json pairs = json::array();
    for (int s = 0; s < S.order(); ++s) {
      for (int t = 0; t < S.order(); ++t) {
        if (s != t && leq.at(s, t)) {
          pairs.push_back(json::array({s, t}));
        }
      }
    }
    result["natural_order_pairs"] = pairs;
  }
  rep.doc["result"] = result;
  rep.set_status("ok");
  rep.human = "analyze: order=" + std::to_string(S.order()) +
              " inverse=" + flag_str(cls.is_inverse) +
              " idempotents=" + std::to_string(S.idempotents().size()) +
              " d_classes=" + std::to_string(d.num_classes);
  (void)opt;
}

void cmd_mcalister_check(const Options& opt, Report& rep,
                         const std::filesystem::path& sg_file,
                         const std::filesystem::path& sw_file) {
  auto S = parse_semigroup(load_input(rep, "semigroup", sg_file));
  auto grid = parse_sandwich(load_input(rep, "sandwich", sw_file));
  auto p = SandwichFunction::create(S, grid.index_size, grid.entries);
  const auto mrep = validate_mcalister(p);
  rep.doc["result"] = {{"mcalister", mcalister_json(mrep)},
                       {"index_size", p.index_size()}};
  if (mrep.all()) {
    rep.set_status("ok");
    rep.human = "mcalister-check: all five conditions hold";
  } else {
    rep.doc["status"] = "violation";
    rep.doc["error"] = {
        {"code", std::string(errc_name(Errc::mcalister_violation))},
        {"message", "sandwich function violates " + mrep.failing()}};
    rep.human = "mcalister-check: failing " + mrep.failing();
    rep.exit_code = kExitViolation;
  }
  (void)opt;
}

void cmd_build_rm(const Options& opt, Report& rep,
                  const std::filesystem::path& sg_file,
                  const std::filesystem::path& sw_file) {
  auto S = parse_semigroup(load_input(rep, "semigroup", sg_file));
  auto grid = parse_sandwich(load_input(rep, "sandwich", sw_file));
  auto p = SandwichFunction::create(S, grid.index_size, grid.entries);
  auto rm = build_rees(p, ReesMode::regular);

  json result = json::object();
  result["full_size"] = p.index_size() * p.index_size() * S.order();
  result["regular_size"] = rm.size();
  int idem = 0;
  for (int a = 0; a < rm.size(); ++a) {
    idem += rm.semigroup().is_idempotent(a) ? 1 : 0;
  }
  result["idempotent_triples"] = idem;
  if (opt.oracle) {
    result["oracle"] = rees_oracle_json(p);
  }
  if (!opt.out_prefix.empty()) {
    const std::string text = semigroup_to_text(rm.semigroup());
    write_file(opt.out_prefix + ".sgp", text);
    result["emitted"] = {{"rm", fnv1a_hex(text)}};
  }
  rep.doc["result"] = result;
  rep.set_status("ok");
  rep.human = "build-rm: |M|=" +
              std::to_string(p.index_size() * p.index_size() * S.order()) +
              " |RM|=" + std::to_string(rm.size());
}

void cmd_build_im(const Options& opt, Report& rep,
                  const std::filesystem::path& sg_file,
                  const std::filesystem::path& sw_file) {
  auto S = parse_semigroup(load_input(rep, "semigroup", sg_file));
  auto grid = parse_sandwich(load_input(rep, "sandwich", sw_file));
  auto p = SandwichFunction::create(S, grid.index_size, grid.entries);
  const auto mrep = validate_mcalister(p);
  auto im = build_im(p);  // throws on any MF violation

  json verdicts = json::object();
  const bool gamma_agrees =
      gamma_closed_form(im.rm).partition == im.gamma.partition;
  verdicts["gamma_closed_form_agrees"] = gamma_agrees;
  const json oracle = rees_oracle_json(p);
  verdicts["regular_triple_closed_form_agrees"] =
      oracle["regular_triple_closed_form_agrees"];
  verdicts["idempotent_triple_closed_form_agrees"] =
      oracle["idempotent_triple_closed_form_agrees"];
  verdicts["rm_is_generalized_inverse"] =
      classify(im.rm.semigroup()).is_generalized_inverse;
  verdicts["im_is_inverse"] = classify(im.im).is_inverse;
  verdicts["projection_is_local_isomorphism"] =
      check_local_isomorphism(im.projection).is_local_isomorphism();
  verdicts["im_isomorphic_to_base"] = find_isomorphism(im.im, S).has_value();
  if (!gamma_agrees) {
    throw DomainError(Errc::internal_inconsistency,
                      "closed-form gamma disagrees with the minimum inverse "
                      "congruence");
  }

  json result = json::object();
  result["mcalister"] = mcalister_json(mrep);
  result["rm_size"] = im.rm.size();
  result["im_size"] = im.im.order();
  result["verdicts"] = verdicts;
  if (!opt.out_prefix.empty()) {
    const std::string text = semigroup_to_text(im.im);
    write_file(opt.out_prefix + ".sgp", text);
    result["emitted"] = {{"im", fnv1a_hex(text)}};
  }
  rep.doc["result"] = result;
  rep.set_status("ok");
  rep.human = "build-im: |RM|=" + std::to_string(im.rm.size()) +
              " |IM|=" + std::to_string(im.im.order()) +
              " im_isomorphic_to_base=" +
              flag_str(verdicts["im_isomorphic_to_base"].get<bool>());
}

void cmd_cauchy(const Options& opt, Report& rep,
                const std::filesystem::path& file) {
  auto S = parse_semigroup(load_input(rep, "semigroup", file));
  auto C = cauchy_completion(S);
  const std::string dump = dump_category(C);
  json hom_sizes = json::array();
  for (int x = 0; x < C.num_objects(); ++x) {
    json row = json::array();
    for (int y = 0; y < C.num_objects(); ++y) {
      row.push_back(C.hom(x, y).size());
    }
    hom_sizes.push_back(row);
  }
  json result = json::object();
  result["objects"] = C.num_objects();
  result["morphisms"] = C.num_morphisms();
  result["hom_sizes"] = hom_sizes;
  result["dump_digest"] = fnv1a_hex(dump);
  if (!opt.out_prefix.empty()) {
    write_file(opt.out_prefix + ".cat", dump);
  }
  rep.doc["result"] = result;
  rep.set_status("ok");
  rep.human = "cauchy: objects=" + std::to_string(C.num_objects()) +
              " morphisms=" + std::to_string(C.num_morphisms());
}

void cmd_equiv(const Options& opt, Report& rep,
               const std::filesystem::path& file_a,
               const std::filesystem::path& file_b) {
  auto A = parse_semigroup(load_input(rep, "semigroup_a", file_a));
  auto B = parse_semigroup(load_input(rep, "semigroup_b", file_b));
  auto CA = cauchy_completion(A);
  auto CB = cauchy_completion(B);
  const int guard =
      static_cast<int>(std::min<uint64_t>(opt.max_size, 1'000'000));
  auto verdict = decide_equivalence(CA, CB, guard);

  json result = json::object();
  result["equivalent"] = verdict.equivalent;
  {
    auto ska = skeleton(CA).skeleton;
    auto skb = skeleton(CB).skeleton;
    result["skeleton_a"] = {{"objects", ska.num_objects()},
                            {"morphisms", ska.num_morphisms()}};
    result["skeleton_b"] = {{"objects", skb.num_objects()},
                            {"morphisms", skb.num_morphisms()}};
  }
  if (verdict.equivalent) {
    result["witness_object_map"] = verdict.witness->object_map;
    result["witness_morphism_map"] = verdict.witness->morphism_map;
    rep.set_status("equivalent");
    rep.human = "equiv: equivalent";
  } else {
    result["obstruction"] = *verdict.obstruction;
    rep.doc["status"] = "not_equivalent";
    rep.human = "equiv: not equivalent (" + *verdict.obstruction + ")";
    rep.exit_code = kExitNotEquivalent;
  }
  rep.doc["result"] = result;
}

json biset_report_json(const BisetReport& brep) {
  json checks = json::array();
  for (const auto& c : brep.checks) {
    json e = json::object();
    e["name"] = c.name;
    e["pass"] = c.pass;
    if (!c.pass) e["witness"] = c.witness;
    checks.push_back(e);
  }
  json j = json::object();
  j["checks"] = checks;
  j["all_pass"] = brep.all_pass();
  return j;
}

void cmd_verify_biset(const Options& opt, Report& rep,
                      const std::filesystem::path& file) {
  auto B = parse_biset(load_input(rep, "biset", file));
  const auto brep = validate_biset(B);
  rep.doc["result"] = {{"carrier_size", B.carrier_size},
                       {"report", biset_report_json(brep)}};
  if (brep.all_pass()) {
    rep.set_status("ok");
    rep.human = "verify-biset: all checks pass";
  } else {
    const BisetCheck* first = brep.first_failure();
    rep.doc["status"] = "violation";
    rep.doc["error"] = {{"code", std::string(errc_name(Errc::biset_invalid))},
                        {"message", "biset fails " + first->name},
                        {"details", json{{"check", first->name},
                                         {"witness", first->witness}}}};
    rep.human =
        "verify-biset: fails " + first->name + " at " + first->witness;
    rep.exit_code = kExitViolation;
  }
  (void)opt;
}

void cmd_biset_to_im(const Options& opt, Report& rep,
                     const std::filesystem::path& file) {
  auto B = parse_biset(load_input(rep, "biset", file));
  auto partner = synthesize_partner(B);

  json verdicts = json::object();
  verdicts["kernel_equals_gamma"] = true;  // certified inside the build
  verdicts["im_isomorphic_to_right_base"] = is_isomorphism(partner.iso);
  if (opt.oracle) {
    verdicts["gamma_closed_form_agrees"] =
        gamma_closed_form(partner.rm).partition ==
        min_inverse_congruence(partner.rm.semigroup()).partition;
  }
  json result = json::object();
  result["carrier_size"] = B.carrier_size;
  result["rm_size"] = partner.rm.size();
  result["im_size"] = partner.im.order();
  result["verdicts"] = verdicts;
  if (!opt.out_prefix.empty()) {
    const std::string text = semigroup_to_text(partner.im);
    write_file(opt.out_prefix + ".sgp", text);
    result["emitted"] = {{"im", fnv1a_hex(text)}};
  }
  rep.doc["result"] = result;
  rep.set_status("ok");
  rep.human = "biset-to-im: |RM|=" + std::to_string(partner.rm.size()) +
              " |IM|=" + std::to_string(partner.im.order()) +
              " isomorphic_to_T=yes";
}

void cmd_enumerate(const Options& opt, Report& rep,
                   const std::filesystem::path& file, int index_size) {
  auto S = parse_semigroup(load_input(rep, "semigroup", file));
  json grids = json::array();
  uint64_t count = enumerate_mcalister(
      S, index_size,
      [&](const SandwichFunction& p) {
        json grid = json::array();
        for (int i = 0; i < index_size; ++i) {
          json row = json::array();
          for (int j = 0; j < index_size; ++j) {
            row.push_back(p.at(i, j));
          }
          grid.push_back(row);
        }
        grids.push_back(grid);
        return true;
      },
      opt.max_size);
  rep.doc["result"] = {{"index_size", index_size},
                       {"count", count},
                       {"functions", grids}};
  rep.set_status("ok");
  rep.human = "enumerate-mcalister: " + std::to_string(count) +
              " function(s) at index size " + std::to_string(index_size);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Morita equivalence toolkit for finite inverse semigroups"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--format", opt.format, "Report format on stdout")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_flag("--oracle", opt.oracle,
               "Run brute-force oracles alongside closed forms");
  app.add_option("--max-size", opt.max_size,
                 "Search guard (enumeration candidates / skeleton size)")
      ->capture_default_str();
  app.add_option("--out", opt.out_prefix,
                 "Prefix for emitted files (.sgp, .cat)");

  std::string sg_file, sw_file, file_b, biset_file;
  int index_size = 1;

  auto* analyze = app.add_subcommand("analyze", "Classify a semigroup file");
  analyze->add_option("semigroup", sg_file)->required();

  auto* mcheck = app.add_subcommand("mcalister-check",
                                    "Check the five sandwich conditions");
  mcheck->add_option("semigroup", sg_file)->required();
  mcheck->add_option("sandwich", sw_file)->required();

  auto* brm = app.add_subcommand("build-rm",
                                 "Build the regular Rees matrix semigroup");
  brm->add_option("semigroup", sg_file)->required();
  brm->add_option("sandwich", sw_file)->required();

  auto* bim = app.add_subcommand("build-im",
                                 "Build the inverse Rees matrix semigroup");
  bim->add_option("semigroup", sg_file)->required();
  bim->add_option("sandwich", sw_file)->required();

  auto* cauchy = app.add_subcommand("cauchy", "Emit the Cauchy completion");
  cauchy->add_option("semigroup", sg_file)->required();

  auto* equiv = app.add_subcommand(
      "equiv", "Decide Morita equivalence of two semigroups");
  equiv->add_option("semigroup_a", sg_file)->required();
  equiv->add_option("semigroup_b", file_b)->required();

  auto* vbiset = app.add_subcommand("verify-biset", "Check the biset axioms");
  vbiset->add_option("biset", biset_file)->required();

  auto* b2im = app.add_subcommand(
      "biset-to-im", "Synthesize the partner semigroup from a biset");
  b2im->add_option("biset", biset_file)->required();

  auto* enumerate = app.add_subcommand(
      "enumerate-mcalister", "List all sandwich functions of a given size");
  enumerate->add_option("semigroup", sg_file)->required();
  enumerate->add_option("index_size", index_size)->required();

  CLI11_PARSE(app, argc, argv);

  if (analyze->parsed()) {
    return run_command(opt, "analyze",
                       [&](Report& r) { cmd_analyze(opt, r, sg_file); });
  }
  if (mcheck->parsed()) {
    return run_command(opt, "mcalister-check", [&](Report& r) {
      cmd_mcalister_check(opt, r, sg_file, sw_file);
    });
  }
  if (brm->parsed()) {
    return run_command(opt, "build-rm", [&](Report& r) {
      cmd_build_rm(opt, r, sg_file, sw_file);
    });
  }
  if (bim->parsed()) {
    return run_command(opt, "build-im", [&](Report& r) {
      cmd_build_im(opt, r, sg_file, sw_file);
    });
  }
  if (cauchy->parsed()) {
    return run_command(opt, "cauchy",
                       [&](Report& r) { cmd_cauchy(opt, r, sg_file); });
  }
  if (equiv->parsed()) {
    return run_command(opt, "equiv", [&](Report& r) {
      cmd_equiv(opt, r, sg_file, file_b);
    });
  }
  if (vbiset->parsed()) {
    return run_command(opt, "verify-biset", [&](Report& r) {
      cmd_verify_biset(opt, r, biset_file);
    });
  }
  if (b2im->parsed()) {
    return run_command(opt, "biset-to-im", [&](Report& r) {
      cmd_biset_to_im(opt, r, biset_file);
    });
  }
  if (enumerate->parsed()) {
    return run_command(opt, "enumerate-mcalister", [&](Report& r) {
      cmd_enumerate(opt, r, sg_file, index_size);
    });
  }
  return kExitParse;
}
