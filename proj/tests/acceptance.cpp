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

// Acceptance suite. Eight criteria, each printed as one pass/fail line.
// Criteria 1-6 drive the library exhaustively over the fixed corpus
// (trivial, E2, E3, Z2, Z3, B2, I2) with every sandwich function of index
// size <= 3, capped at 500 functions per base semigroup. Criteria 7-8
// drive the installed CLI binary.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fixtures.hpp"
#include "morita/biset.hpp"
#include "morita/category.hpp"
#include "morita/congruence.hpp"
#include "morita/hom.hpp"
#include "morita/io.hpp"
#include "morita/rees.hpp"
#include "morita/semigroup.hpp"

using namespace morita;
using nlohmann::json;

namespace {

namespace fs = std::filesystem;

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();

  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  }
};

struct Outcome {
  bool pass = true;
  std::string note;

  void fail(const std::string& why) {
    pass = false;
    if (note.empty()) note = why;
  }
};

int g_failures = 0;

void report(int index, const std::string& title, const Outcome& out,
            double secs) {
  std::ostringstream line;
  line << "[" << index << "] " << title << " ... "
       << (out.pass ? "PASS" : "FAIL");
  if (!out.note.empty()) {
    line << " (" << out.note << ")";
  }
  line << " [" << static_cast<int>(secs * 1000) << " ms]";
  std::cout << line.str() << std::endl;
  if (!out.pass) ++g_failures;
}

struct Instance {
  std::string base_name;
  SandwichFunction p;
};

constexpr size_t kPerBaseCap = 500;

// |I| = 1, 2, 3 in order, first kPerBaseCap functions per base.
std::vector<Instance> corpus_instances() {
  std::vector<Instance> out;
  for (const auto& [name, S] : fixtures::corpus()) {
    size_t taken = 0;
    for (int m = 1; m <= 3 && taken < kPerBaseCap; ++m) {
      enumerate_mcalister(S, m, [&](const SandwichFunction& p) {
        out.push_back(Instance{name, p});
        ++taken;
        return taken < kPerBaseCap;
      });
    }
  }
  return out;
}

std::string cli_path() {
  return MORITA_CLI_PATH;
}

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

CliResult run_cli(const fs::path& dir, const std::string& args,
                  const std::string& tag) {
  const fs::path out_file = dir / (tag + ".out");
  const fs::path err_file = dir / (tag + ".err");
  const std::string cmd = std::string("\"") + cli_path() + "\" " + args +
                          " > \"" + out_file.string() + "\" 2> \"" +
                          err_file.string() + "\"";
  const int raw = std::system(cmd.c_str());
  CliResult r;
  r.exit_code = (raw < 0) ? raw : WEXITSTATUS(raw);
  r.out = read_file(out_file);
  r.err = read_file(err_file);
  return r;
}

void criterion_1(const std::vector<Instance>& instances) {
  Timer timer;
  Outcome out;
  size_t triples = 0;
  for (const auto& inst : instances) {
    auto full = build_rees(inst.p, ReesMode::full);
    for (int a = 0; a < full.size(); ++a) {
      ++triples;
      const bool closed_regular = is_regular_triple(inst.p, full.triple(a));
      const bool brute_regular =
          !inverses_of(full.semigroup(), a).empty();
      if (closed_regular != brute_regular) {
        out.fail("regularity mismatch on " + inst.base_name);
      }
      const bool closed_idem = is_idempotent_triple(inst.p, full.triple(a));
      if (closed_idem != full.semigroup().is_idempotent(a)) {
        out.fail("idempotence mismatch on " + inst.base_name);
      }
    }
  }
  const double secs = timer.seconds();
  if (secs >= 60.0) out.fail("over the 60 s budget");
  if (out.pass) {
    out.note = std::to_string(instances.size()) + " instances, " +
               std::to_string(triples) + " triples";
  }
  report(1, "closed-form regularity/idempotence matches brute force", out,
         secs);
}

void criterion_2(const std::vector<Instance>& instances) {
  Timer timer;
  Outcome out;
  for (const auto& inst : instances) {
    auto rm = build_rees(inst.p, ReesMode::regular);
    if (!(gamma_closed_form(rm).partition ==
          min_inverse_congruence(rm.semigroup()).partition)) {
      out.fail("gamma mismatch on " + inst.base_name);
    }
  }
  if (out.pass) {
    out.note = std::to_string(instances.size()) + " instances";
  }
  report(2, "closed-form gamma equals the minimum inverse congruence", out,
         timer.seconds());
}

void criterion_3(const std::vector<Instance>& instances) {
  Timer timer;
  Outcome out;
  for (const auto& inst : instances) {
    auto im = build_im(inst.p);
    const auto rm_class = classify(im.rm.semigroup());
    if (!rm_class.is_orthodox || !rm_class.is_locally_inverse) {
      out.fail("RM not generalized inverse on " + inst.base_name);
    }
    if (!classify(im.im).is_inverse) {
      out.fail("IM not inverse on " + inst.base_name);
    }
  }
  if (out.pass) {
    out.note = std::to_string(instances.size()) + " instances";
  }
  report(3, "RM is orthodox and locally inverse; IM is inverse", out,
         timer.seconds());
}

void criterion_4(const std::vector<Instance>& instances) {
  Timer timer;
  Outcome out;
  for (const auto& inst : instances) {
    auto im = build_im(inst.p);
    if (!check_local_isomorphism(im.projection).is_local_isomorphism()) {
      out.fail("projection not a local isomorphism on " + inst.base_name);
    }
    const auto theta_checks = functor_checks(functor_theta(im.projection));
    if (!theta_checks.functorial || !theta_checks.weak_equivalence()) {
      out.fail("induced functor of the projection fails on " +
               inst.base_name + ": " + theta_checks.witness);
    }
    const auto psi_checks = functor_checks(functor_psi(im.rm));
    if (!psi_checks.functorial || !psi_checks.weak_equivalence()) {
      out.fail("explicit completion functor fails on " + inst.base_name +
               ": " + psi_checks.witness);
    }
    // The completions these functors run over must validate as categories.
    if (!validate_category(cauchy_completion(im.rm.semigroup())).ok) {
      out.fail("C(RM) invalid on " + inst.base_name);
    }
  }
  if (out.pass) {
    out.note = std::to_string(instances.size()) + " instances";
  }
  report(4,
         "projections are local isomorphisms; both completion functors are "
         "weak equivalences",
         out, timer.seconds());
}

void criterion_5(const std::vector<Instance>& instances) {
  Timer timer;
  Outcome out;
  size_t decided = 0;
  for (const auto& inst : instances) {
    auto im = build_im(inst.p);
    auto verdict = decide_equivalence(cauchy_completion(inst.p.base()),
                                      cauchy_completion(im.im));
    ++decided;
    if (!verdict.equivalent) {
      out.fail("C(S) and C(IM) not equivalent on " + inst.base_name);
    }
  }
  if (decide_equivalence(cauchy_completion(fixtures::e2()),
                         cauchy_completion(fixtures::z2()))
          .equivalent) {
    out.fail("E2 and Z2 wrongly equivalent");
  }
  if (decide_equivalence(cauchy_completion(fixtures::z2()),
                         cauchy_completion(fixtures::z3()))
          .equivalent) {
    out.fail("Z2 and Z3 wrongly equivalent");
  }
  const double secs = timer.seconds();
  if (secs >= 30.0) out.fail("over the 30 s budget");
  if (out.pass) {
    out.note = std::to_string(decided) + " instances + 2 negatives";
  }
  report(5, "C(S) ~ C(IM(S,I,p)) always; E2/Z2 and Z2/Z3 never", out, secs);
}

void criterion_6() {
  Timer timer;
  Outcome out;
  for (const auto& [name, S] : fixtures::corpus()) {
    auto B = identity_biset(S);
    const auto brep = validate_biset(B);
    if (!brep.all_pass()) {
      out.fail("identity biset on " + name + " fails " +
               brep.first_failure()->name);
      continue;
    }
    auto p = mcalister_from_biset(B);
    if (!validate_mcalister(p).all()) {
      out.fail("bracket sandwich on " + name + " not McAlister");
    }
    auto bt = theta_from_biset(B);
    if (!(bt.kernel.partition == gamma_closed_form(bt.rm).partition) ||
        !(bt.kernel.partition ==
          min_inverse_congruence(bt.rm.semigroup()).partition)) {
      out.fail("kernel of theta differs from gamma on " + name);
    }
    auto partner = synthesize_partner(B);
    if (!is_isomorphism(partner.iso) ||
        !find_isomorphism(partner.im, S).has_value()) {
      out.fail("synthesized partner not isomorphic to " + name);
    }
    if (!decide_equivalence(cauchy_completion(S),
                            cauchy_completion(partner.im))
             .equivalent) {
      out.fail("completion of the partner not equivalent on " + name);
    }
  }
  const double secs = timer.seconds();
  if (secs >= 60.0) out.fail("over the 60 s budget");
  if (out.pass) out.note = "7 identity bisets";
  report(6, "identity-biset round trip synthesizes the base semigroup", out,
         secs);
}

void criterion_7(const fs::path& dir) {
  Timer timer;
  Outcome out;

  // MF5 violation.
  {
    auto r = run_cli(dir,
                     "build-im \"" + (dir / "e2.sgp").string() + "\" \"" +
                         (dir / "bad_mf5.sandwich").string() + "\"",
                     "c7_mf5");
    const json doc = json::parse(r.out);
    if (r.exit_code != 1 ||
        doc["error"]["code"] != "MCALISTER_VIOLATION" ||
        !doc["error"]["details"].contains("MF5_idempotent")) {
      out.fail("MF5 control: exit=" + std::to_string(r.exit_code));
    }
  }
  // Non-associative table.
  {
    auto r = run_cli(dir,
                     "analyze \"" + (dir / "not_associative.sgp").string() +
                         "\"",
                     "c7_assoc");
    const json doc = json::parse(r.out);
    if (r.exit_code != 1 || doc["error"]["code"] != "NOT_ASSOCIATIVE" ||
        !doc["error"]["details"].contains("a")) {
      out.fail("associativity control: exit=" +
               std::to_string(r.exit_code));
    }
  }
  // Corrupted ket.
  {
    auto r = run_cli(dir,
                     "verify-biset \"" + (dir / "bad_ket.json").string() +
                         "\"",
                     "c7_ket");
    const json doc = json::parse(r.out);
    bool m7_failed_with_witness = false;
    for (const auto& c : doc["result"]["report"]["checks"]) {
      if (c["name"] == "M7" && c["pass"] == false &&
          !c["witness"].get<std::string>().empty()) {
        m7_failed_with_witness = true;
      }
    }
    if (r.exit_code != 1 || doc["error"]["code"] != "BISET_INVALID" ||
        doc["error"]["details"]["witness"].get<std::string>().empty() ||
        !m7_failed_with_witness) {
      out.fail("corrupted-ket control: exit=" +
               std::to_string(r.exit_code));
    }
  }
  // Malformed grid parses to exit 2.
  {
    auto r = run_cli(dir,
                     "analyze \"" + (dir / "malformed.sgp").string() + "\"",
                     "c7_parse");
    if (r.exit_code != 2) {
      out.fail("malformed control: exit=" + std::to_string(r.exit_code));
    }
  }
  if (out.pass) out.note = "4 controls";
  report(7, "hand-built violations produce the designated exit codes and "
            "witnesses",
         out, timer.seconds());
}

void criterion_8(const fs::path& dir) {
  Timer timer;
  Outcome out;
  const std::string e2 = "\"" + (dir / "e2.sgp").string() + "\"";
  const std::string b2 = "\"" + (dir / "b2.sgp").string() + "\"";
  const std::string diag = "\"" + (dir / "e2_diag.sandwich").string() + "\"";
  const std::string biset = "\"" + (dir / "b2_identity.json").string() + "\"";

  struct Cmd {
    std::string tag;
    std::string args;
    std::vector<std::string> emitted;  // files to compare across runs
  };
  const std::vector<Cmd> commands = {
      {"analyze", "analyze " + e2, {}},
      {"mcheck", "mcalister-check " + e2 + " " + diag, {}},
      {"buildrm",
       "build-rm " + e2 + " " + diag + " --oracle --out {OUT}",
       {".sgp"}},
      {"buildim", "build-im " + e2 + " " + diag + " --out {OUT}", {".sgp"}},
      {"cauchy", "cauchy " + b2 + " --out {OUT}", {".cat"}},
      {"equiv", "equiv " + e2 + " " + b2, {}},
      {"vbiset", "verify-biset " + biset, {}},
      {"b2im", "biset-to-im " + biset + " --out {OUT}", {".sgp"}},
      {"enum", "enumerate-mcalister " + e2 + " 2", {}},
  };
  for (const auto& cmd : commands) {
    std::vector<std::string> stdouts;
    std::vector<std::vector<std::string>> emissions;
    for (int run = 0; run < 2; ++run) {
      const std::string out_prefix =
          (dir / (cmd.tag + "_emit_" + std::to_string(run))).string();
      std::string args = cmd.args;
      if (auto pos = args.find("{OUT}"); pos != std::string::npos) {
        args.replace(pos, 5, "\"" + out_prefix + "\"");
      }
      auto r = run_cli(dir, args, "c8_" + cmd.tag + std::to_string(run));
      stdouts.push_back(r.out);
      std::vector<std::string> files;
      for (const auto& ext : cmd.emitted) {
        files.push_back(read_file(out_prefix + ext));
      }
      emissions.push_back(files);
    }
    if (stdouts[0] != stdouts[1] || stdouts[0].empty()) {
      out.fail(cmd.tag + ": reports differ between runs");
    }
    if (emissions[0] != emissions[1]) {
      out.fail(cmd.tag + ": emitted files differ between runs");
    }
  }
  if (out.pass) out.note = std::to_string(commands.size()) + " commands x 2";
  report(8, "repeated CLI runs produce byte-identical canonical reports",
         out, timer.seconds());
}

fs::path make_fixture_dir() {
  const fs::path dir =
      fs::temp_directory_path() /
      ("morita_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);

  write_file(dir / "e2.sgp", semigroup_to_text(fixtures::e2()));
  write_file(dir / "b2.sgp", semigroup_to_text(fixtures::b2()));
  write_file(dir / "e2_diag.sandwich", "sandwich 2\n1 0\n0 1\n");
  write_file(dir / "bad_mf5.sandwich", "sandwich 1\n0\n");
  write_file(dir / "not_associative.sgp", "semigroup 2\n1 0\n1 1\n");
  write_file(dir / "malformed.sgp", "semigroup 2\n0 x\n0 1\n");
  write_file(dir / "b2_identity.json",
             biset_to_json(identity_biset(fixtures::b2())));
  auto bad = identity_biset(fixtures::b2());
  bad.ket = bad.bra;
  write_file(dir / "bad_ket.json", biset_to_json(bad));
  return dir;
}

}  // namespace

int main() {
  std::cout << "acceptance: corpus = trivial, E2, E3, Z2, Z3, B2, I2; "
               "sandwich index sizes 1..3, capped at "
            << kPerBaseCap << " functions per base" << std::endl;

  const auto instances = corpus_instances();
  criterion_1(instances);
  criterion_2(instances);
  criterion_3(instances);
  criterion_4(instances);
  criterion_5(instances);
  criterion_6();

  const fs::path dir = make_fixture_dir();
  criterion_7(dir);
  criterion_8(dir);
  std::error_code ec;
  fs::remove_all(dir, ec);

  if (g_failures == 0) {
    std::cout << "acceptance: all criteria PASS" << std::endl;
    return 0;
  }
  std::cout << "acceptance: " << g_failures << " criterion(s) FAILED"
            << std::endl;
  return 1;
}
