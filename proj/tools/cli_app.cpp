// Copyright 2026 The crnreach Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli_app.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

#include "crnreach/classify.hpp"
#include "crnreach/random_instances.hpp"
#include "crnreach/reductions.hpp"
#include "crnreach/report.hpp"
#include "crnreach/solvers.hpp"
#include "crnreach/text_format.hpp"

namespace crnreach::cli {

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Settings {
  std::size_t oracleStates = OracleLimits{}.stateCap;
  std::string oracleVolume = "64";
  std::string unaryCap = "5000";
  std::string forceMethod;
  bool crossCheck = false;
  std::string format = "text";
  std::string emitCert;

  SolverOptions solverOptions() const {
    SolverOptions o;
    o.oracle.stateCap = oracleStates;
    o.oracle.volumeCap = parseCount(oracleVolume);
    o.unaryCap = parseCount(unaryCap);
    return o;
  }
};

void addSolverFlags(CLI::App* cmd, Settings& s) {
  cmd->add_option("--oracle-states", s.oracleStates, "State cap of the bounded oracle")->capture_default_str();
  cmd->add_option("--oracle-volume", s.oracleVolume, "Volume cap of the bounded oracle")->capture_default_str();
  cmd->add_option("--unary-cap", s.unaryCap, "Expanded-volume cap of the (2,0) matching procedure")
      ->capture_default_str();
  cmd->add_option("--force-method", s.forceMethod, "Run this procedure instead of the dispatcher")
      ->check(CLI::IsMember(methodNames()));
  cmd->add_flag("--cross-check", s.crossCheck, "Run the bounded oracle alongside and report agreement");
  cmd->add_option("--emit-cert", s.emitCert, "Write the certificate of a Reachable verdict to this file");
}

void addFormatFlag(CLI::App* cmd, Settings& s) {
  cmd->add_option("--format", s.format, "Output format")->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
}

void emit(std::ostream& out, const Settings& s, const RunReport& r, const Crn& crn) {
  out << (s.format == "structured" ? formatReportStructured(r, crn) : formatReportText(r, crn));
}

RunReport solve(const Instance& instance, const Settings& s, const std::string& command) {
  const SolverOptions options = s.solverOptions();
  RunReport r;
  r.command = command;
  r.digest = instanceDigest(instance);
  r.problem = problemName(instance.problem());
  r.profile = classify(instance.crn());
  const auto start = std::chrono::steady_clock::now();
  r.decision = s.forceMethod.empty() ? dispatch(instance, options) : runMethod(s.forceMethod, instance, options);
  r.elapsedMs = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (s.crossCheck) r.crossCheck = crossCheck(instance, *r.decision, options.oracle);
  return r;
}

int finishSolve(std::ostream& out, const Settings& s, const RunReport& r, const Crn& crn) {
  if (!s.emitCert.empty() && r.decision->certificate) {
    std::ofstream f(s.emitCert);
    if (!f) throw InputError("cannot write '" + s.emitCert + "'");
    f << formatCertificate(*r.decision->certificate);
  }
  emit(out, s, r, crn);
  return r.crossCheck && !r.crossCheck->agreement ? kDisagreement : kOk;
}

std::string annotatedInstance(const GeneratedInstance& gen) {
  std::string out;
  for (const auto& w : gen.warnings) out += "# warning: " + w + "\n";
  for (const auto& [species, role] : gen.annotations) out += "# " + species + ": " + role + "\n";
  return out + formatInstance(gen.instance);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reachability and production solver for chemical reaction networks", "crnreach"};
  app.require_subcommand(1);
  Settings s;
  std::function<int()> action;

  // classify
  std::string file;
  auto* classifyCmd = app.add_subcommand("classify", "Report the structural profile of a CRN");
  classifyCmd->add_option("file", file, "CRN file")->required();
  addFormatFlag(classifyCmd, s);
  classifyCmd->callback([&] {
    action = [&] {
      const auto doc = parseCrnDocument(readFile(file));
      RunReport r;
      r.command = "classify";
      r.digest = digest(formatCrn(doc.crn));
      r.profile = classify(doc.crn);
      emit(out, s, r, doc.crn);
      return int{kOk};
    };
  });

  // reach / produce / universal
  for (const char* name : {"reach", "produce", "universal"}) {
    const std::string command = name;
    auto* cmd = app.add_subcommand(command, command == "reach"       ? "Decide reachability of the target"
                                            : command == "produce" ? "Decide production of a species"
                                                                   : "Decide universal reachability of the target");
    cmd->add_option("file", file, "Instance file")->required();
    addSolverFlags(cmd, s);
    addFormatFlag(cmd, s);
    auto species = std::make_shared<std::string>();
    auto count = std::make_shared<std::string>("1");
    if (command == "produce") {
      cmd->add_option("--species", *species, "Species to produce (overrides the file)");
      cmd->add_option("--count", *count, "Copies required")->capture_default_str();
    }
    cmd->callback([&, command, species, count] {
      action = [&, command, species, count] {
        Instance inst = parseInstance(readFile(file));
        if (command == "reach") {
          inst = inst.withProblem(Reach{});
        } else if (command == "universal") {
          inst = inst.withProblem(UniversalReach{});
        } else if (!species->empty()) {
          inst = inst.withProblem(Production{inst.crn().speciesIndex(*species), parseCount(*count)});
        } else if (!std::holds_alternative<Production>(inst.problem())) {
          throw InputError("produce needs --species or a 'problem: produce' line");
        }
        return finishSolve(out, s, solve(inst, s, command), inst.crn());
      };
    });
  }

  // verify-cert
  std::string certFile;
  auto* verifyCmd = app.add_subcommand("verify-cert", "Replay an ordered certificate against an instance");
  verifyCmd->add_option("file", file, "Instance file")->required();
  verifyCmd->add_option("certificate", certFile, "Certificate file")->required();
  addFormatFlag(verifyCmd, s);
  verifyCmd->callback([&] {
    action = [&] {
      const Instance inst = parseInstance(readFile(file));
      const auto cert = parseCertificate(readFile(certFile));
      RunReport r;
      r.command = "verify-cert";
      r.digest = instanceDigest(inst);
      r.problem = problemName(inst.problem());
      r.profile = classify(inst.crn());
      for (const auto& b : cert.blocks) {
        if (!inst.crn().findRule(b.rule)) throw InputError("certificate refers to unknown rule " + std::to_string(b.rule));
      }
      r.certificateValid = verifyCertificate(inst, cert);
      emit(out, s, r, inst.crn());
      return int{kOk};
    };
  });

  // gen
  auto* gen = app.add_subcommand("gen", "Generate instances from hardness constructions");
  gen->require_subcommand(1);
  std::string variant = "22";
  std::string source, target, mode = "production";
  bool split = false;
  auto genCommon = [&](CLI::App* cmd) { cmd->add_option("file", file, "Input file")->required(); };
  auto* genHam = gen->add_subcommand("hampath", "Hamiltonian path to reachability");
  genCommon(genHam);
  genHam->add_option("--variant", variant, "Rule size: 22, 21 or 12")->check(CLI::IsMember({"22", "21", "12"}))
      ->capture_default_str();
  auto* gen3dm = gen->add_subcommand("3dm", "3-dimensional matching to (3,0) reachability");
  genCommon(gen3dm);
  auto* gen3dmSp = gen->add_subcommand("3dm-species", "3-dimensional matching with one sink species");
  genCommon(gen3dmSp);
  auto* genDig = gen->add_subcommand("digraph", "s-t connectivity to unimolecular reachability");
  genCommon(genDig);
  auto* genSat = gen->add_subcommand("sat", "3-CNF (DIMACS) to production");
  genCommon(genSat);
  auto* genGad = gen->add_subcommand("gadgets", "Toggle-lock/rotate motion planning to (2,2) CRNs");
  genCommon(genGad);
  genGad->add_option("--mode", mode, "production or reachability")
      ->check(CLI::IsMember({"production", "reachability"}))->capture_default_str();
  genGad->add_flag("--split", split, "Split every rule through a fresh intermediate");
  for (auto* cmd : {genHam, genDig}) {
    cmd->add_option("--source", source, "Source vertex (overrides the file)");
    cmd->add_option("--target", target, "Target vertex (overrides the file)");
  }
  auto endpoints = [&](const Digraph& g) {
    auto pick = [&](const std::string& flag, const std::optional<std::size_t>& fromFile, const char* what) {
      if (!flag.empty()) return g.vertexIndex(flag);
      if (!fromFile) throw InputError(std::string("digraph has no ") + what + " vertex");
      return *fromFile;
    };
    return std::make_pair(pick(source, g.source, "source"), pick(target, g.target, "target"));
  };
  auto genAction = [&](std::function<GeneratedInstance()> make) {
    return [&, make] {
      action = [&, make] {
        out << annotatedInstance(make());
        return int{kOk};
      };
    };
  };
  genHam->callback(genAction([&] {
    const Digraph g = parseDigraph(readFile(file));
    const auto [s0, t0] = endpoints(g);
    const auto v = variant == "22" ? HamPathVariant::Size22 : variant == "21" ? HamPathVariant::Size21
                                                                              : HamPathVariant::Size12;
    return genHamPath(g, s0, t0, v);
  }));
  gen3dm->callback(genAction([&] { return gen3DM(parseHypergraph(readFile(file))); }));
  gen3dmSp->callback(genAction([&] { return gen3DMSpecies(parseHypergraph(readFile(file))); }));
  genDig->callback(genAction([&] {
    const Digraph g = parseDigraph(readFile(file));
    const auto [s0, t0] = endpoints(g);
    return genDigraphPath(g, s0, t0);
  }));
  genSat->callback(genAction([&] { return genSatProduction(parseDimacs(readFile(file))); }));
  genGad->callback(genAction([&] {
    return genGadgetCrn(parseGadgetSystem(readFile(file)),
                        mode == "production" ? GadgetMode::Production : GadgetMode::Reachability, split);
  }));

  // split
  auto* splitCmd = app.add_subcommand("split", "Split (2,2) rules into (2,1) and (1,2) rules");
  splitCmd->add_option("file", file, "CRN or instance file")->required();
  splitCmd->callback([&] {
    action = [&] {
      const auto doc = parseCrnDocument(readFile(file));
      const Crn crn = splitNonMonotone(doc.crn);
      std::string text = formatCrn(crn);
      for (const auto& [name, c] : doc.configs) {
        text += "config " + name + ": " + formatMultiset(crn, padConfiguration(c, crn.speciesCount())) + "\n";
      }
      if (doc.problem) {
        if (const auto* p = std::get_if<Production>(&*doc.problem)) {
          text += "problem: produce " + crn.speciesName(p->species) + " " + toString(p->k) + "\n";
        } else {
          text += "problem: " + problemName(*doc.problem) + "\n";
        }
      }
      out << text;
      return int{kOk};
    };
  });

  // batch
  std::vector<std::string> batchFiles;
  std::string family;
  std::size_t batchCount = 100;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  auto* batch = app.add_subcommand("batch", "Solve many instances with oracle cross-checking");
  batch->add_option("files", batchFiles, "Instance files");
  batch->add_option("--family", family, "Random family to generate instead of reading files")
      ->check(CLI::IsMember(randomFamilies()));
  batch->add_option("--count", batchCount, "Number of random instances")->capture_default_str();
  batch->add_option("--seed", seed, "Seed for random families")->capture_default_str();
  batch->add_option("--jobs", jobs, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  addSolverFlags(batch, s);
  addFormatFlag(batch, s);
  batch->callback([&] {
    action = [&] {
      if (batchFiles.empty() == family.empty()) throw InputError("batch needs instance files or --family");
      std::vector<Instance> instances;
      if (!family.empty()) {
        Rng rng(seed);
        for (std::size_t k = 0; k < batchCount; ++k) instances.push_back(randomInstance(rng, family));
      } else {
        for (const auto& f : batchFiles) instances.push_back(parseInstance(readFile(f)));
      }
      Settings cfg = s;
      cfg.crossCheck = true;
      std::vector<std::optional<RunReport>> reports(instances.size());
      std::atomic<std::size_t> nextIndex{0};
      auto worker = [&] {
        for (std::size_t k; (k = nextIndex++) < instances.size();) {
          RunReport r = solve(instances[k], cfg, "batch");
          r.elapsedMs.reset();  // keep reports reproducible
          reports[k] = std::move(r);
        }
      };
      std::vector<std::thread> pool;
      for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
      worker();
      for (auto& t : pool) t.join();

      bool disagreement = false;
      std::vector<std::pair<RunReport, Crn>> all;
      for (std::size_t k = 0; k < instances.size(); ++k) {
        disagreement |= !reports[k]->crossCheck->agreement;
        all.emplace_back(*reports[k], instances[k].crn());
      }
      if (s.format == "structured") {
        out << formatReportsStructured(all);
      } else {
        for (std::size_t k = 0; k < all.size(); ++k) {
          out << "== instance " << k << "\n" << formatReportText(all[k].first, all[k].second);
        }
      }
      return int{disagreement ? kDisagreement : kOk};
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  try {
    return action();
  } catch (const ParseError& e) {
    err << "error: " << file << ":" << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kInputError;
}

}  // namespace crnreach::cli
