// Copyright 2026 The bmsign Authors
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

// bmsign: command-line driver for the verification suites.
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or input error.

#include <bmsign/bmsign.hpp>
#include <bmsign/io/json.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using bmsign::io::Json;
using bmsign::Rational;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct OutputFlags {
  std::string out;
  bool json = false;
  bool timings = false;
};

void add_output_flags(CLI::App* cmd, OutputFlags& f) {
  cmd->add_option("--out", f.out, "Write the JSON report to this file (default: $BMSIGN_REPORT_DIR/<command>.json)");
  cmd->add_flag("--json", f.json, "Print the JSON report to standard output instead of the summary");
  cmd->add_flag("--timings", f.timings, "Record per-check runtimes (the report is then not byte-reproducible)");
}

class Report {
 public:
  Report(std::string command, const OutputFlags& flags) : flags_(flags) {
    doc_["tool"] = "bmsign";
    doc_["version"] = bmsign::kVersion;
    doc_["command"] = std::move(command);
    doc_["parameters"] = Json::object();
    doc_["checks"] = Json::array();
  }

  Json& parameters() { return doc_["parameters"]; }
  Json& data() {
    if (!doc_.contains("data")) doc_["data"] = Json::object();
    return doc_["data"];
  }

  /// Runtime is the time since the previous record (or construction).
  void record(const std::string& id, bool ok, const std::string& witness = {}) {
    const auto now = std::chrono::steady_clock::now();
    const double secs = std::chrono::duration<double>(now - lap_).count();
    lap_ = now;
    Json c;
    c["id"] = id;
    c["status"] = ok ? "pass" : "fail";
    if (!ok && !witness.empty()) c["witness"] = witness;
    if (flags_.timings) c["runtime_s"] = secs;
    doc_["checks"].push_back(std::move(c));
    ok ? ++passed_ : ++failed_;
    if (!ok) failures_.push_back(id + (witness.empty() ? "" : ": " + witness));
  }

  /// Writes the report, prints the summary, returns the exit code.
  int finish(std::chrono::steady_clock::time_point start) {
    doc_["status"] = failed_ == 0 ? "pass" : "fail";
    if (flags_.timings)
      doc_["runtime_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const std::string text = doc_.dump(2) + "\n";
    std::string path = flags_.out;
    if (path.empty())
      if (const char* dir = std::getenv("BMSIGN_REPORT_DIR"); dir && *dir)
        path = (std::filesystem::path(dir) / (doc_["command"].get<std::string>() + ".json")).string();
    if (!path.empty()) {
      std::ofstream os(path, std::ios::binary);
      if (!os) {
        std::cerr << "bmsign: cannot write report to " << path << "\n";
        return kExitUsage;
      }
      os << text;
    }
    if (flags_.json) {
      std::cout << text;
    } else {
      std::cout << doc_["command"].get<std::string>() << ": " << passed_ << " passed, " << failed_ << " failed\n";
      for (std::size_t i = 0; i < failures_.size() && i < 10; ++i) std::cout << "  FAIL " << failures_[i] << "\n";
      if (failures_.size() > 10) std::cout << "  ... " << failures_.size() - 10 << " more\n";
      if (!path.empty()) std::cout << "report: " << path << "\n";
    }
    return failed_ == 0 ? kExitPass : kExitFail;
  }

 private:
  Json doc_;
  OutputFlags flags_;
  std::chrono::steady_clock::time_point lap_ = std::chrono::steady_clock::now();
  std::size_t passed_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
};

std::string show_assignment(const bmsign::f2::Assignment& a) {
  std::string s;
  for (const auto& [k, v] : a) s += (s.empty() ? "" : " ") + k + "=" + std::to_string(v);
  return s;
}

std::string proof_witness(const bmsign::prover::ProofReport& r) {
  std::string w = "residual " + r.residual.to_string();
  if (r.witness) w += "; at " + show_assignment(*r.witness);
  if (!r.truth_table_agrees) w += "; truth table disagrees";
  return w;
}

std::vector<Rational> parse_levels(const std::string& list) {
  std::vector<Rational> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(bmsign::parse_rational(item));
  return out;
}

Json levels_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(bmsign::to_string(x));
  return a;
}

// ---------------------------------------------------------------------------

struct ProveSignsArgs {
  int k_max = 6;
  int tt_k_max = 4;
};

int run_prove_signs(const ProveSignsArgs& a, const OutputFlags& f) {
  namespace pv = bmsign::prover;
  if (a.k_max < 1) throw CLI::ValidationError("--k-max", "must be >= 1");
  auto start = std::chrono::steady_clock::now();
  Report rep("prove-signs", f);
  rep.parameters()["k_max"] = a.k_max;
  rep.parameters()["truth_table_k_max"] = a.tt_k_max;
  auto add = [&](const pv::ProofReport& r) {
    rep.record(r.id, r.proven && r.truth_table_agrees, r.proven && r.truth_table_agrees ? "" : proof_witness(r));
  };
  for (int k = 1; k <= a.k_max; ++k) {
    pv::ProofOptions opt;
    opt.truth_table = k <= a.tt_k_max;
    for (int k2 = 0; k2 <= k; ++k2)
      for (int j = 1; j <= k + 1 - k2; ++j) {
        add(pv::prove_master_identity(k, j, k2, {}, opt));
        add(pv::prove_kappa_decomposition(k, j, k2, {}, opt));
        add(pv::prove_kappa_prime_decomposition(k, j, k2, {}, opt));
        add(pv::prove_eta_collapse(k, j, k2));
      }
    for (int j = 1; j <= k; ++j) add(pv::prove_rel2_congruence(k, j, {}, opt));
  }
  return rep.finish(start);
}

struct ReplayArgs {
  int k_max = 5;
  std::string spectrum = "0,1";
  std::string flip;
};

int run_replay(const ReplayArgs& a, const OutputFlags& f) {
  if (a.k_max < 0) throw CLI::ValidationError("--k-max", "must be >= 0");
  auto start = std::chrono::steady_clock::now();
  const auto spectrum = bmsign::novikov::GappedSpectrum::from_levels(parse_levels(a.spectrum));
  Report rep("replay-theorem", f);
  rep.parameters()["k_max"] = a.k_max;
  rep.parameters()["spectrum"] = levels_json(spectrum.levels());
  if (!a.flip.empty()) rep.parameters()["flip_term"] = a.flip;
  bmsign::prover::TheoremOptions opt;
  if (!a.flip.empty()) opt.flip_term = a.flip;
  for (int k = 0; k <= a.k_max; ++k) {
    const auto r = bmsign::prover::prove_theorem(k, spectrum, opt);
    std::string w;
    if (r.aborted) w = r.diagnostic;
    for (const auto& t : r.residual) {
      if (!w.empty()) w += "; ";
      w += "uncancelled " + t.key;
      if (t.witness) w += " at " + show_assignment(*t.witness);
    }
    rep.record("theorem[k=" + std::to_string(k) + "]", r.ok(), w);
    rep.data()["cancelled_pairs"][std::to_string(k)] = r.cancelled.size();
  }
  return rep.finish(start);
}

void record_relations(Report& rep, const bmsign::ainfty::RelationReport& r, const std::string& prefix) {
  for (const auto& run : r.runs) {
    const bool failed_here = r.failure && r.failure->k == run.k;
    rep.record(prefix + "relation[k=" + std::to_string(run.k) + "]", !failed_here,
               failed_here ? "tuple " + r.failure->tuple_text + " defect " + r.failure->defect : "");
    rep.data()["runs"].push_back(
        Json{{"k", run.k}, {"tuples", run.tuples}, {"mode", run.exhaustive ? "exhaustive" : "sampled"}});
  }
  if (r.failure && r.runs.empty()) rep.record(prefix + "relations", false, r.failure->defect);
}

struct RelationArgs {
  int k_max = 4;
  std::uint64_t seed = 1;
  std::uint64_t exhaustive_limit = 10000;
  std::size_t samples = 1000;
};

bmsign::ainfty::RelationOptions relation_options(const RelationArgs& a) { return {a.seed, a.exhaustive_limit, a.samples}; }

void relation_params(Report& rep, const RelationArgs& a) {
  rep.parameters()["k_max"] = a.k_max;
  rep.parameters()["seed"] = a.seed;
  rep.parameters()["exhaustive_limit"] = a.exhaustive_limit;
  rep.parameters()["samples"] = a.samples;
}

struct CheckAInftyArgs {
  RelationArgs rel;
  std::string file;
  std::string cutoff;
};

int run_check_ainfty(const CheckAInftyArgs& a, const OutputFlags& f) {
  auto start = std::chrono::steady_clock::now();
  std::optional<Rational> cutoff;
  if (!a.cutoff.empty()) cutoff = bmsign::parse_rational(a.cutoff);
  const auto s = bmsign::io::load_structure(a.file, cutoff);
  Report rep("check-ainfty", f);
  rep.parameters()["file"] = std::filesystem::path(a.file).filename().string();
  rep.parameters()["cutoff"] = bmsign::to_string(s.cutoff().value());
  relation_params(rep, a.rel);
  rep.data()["runs"] = Json::array();
  record_relations(rep, bmsign::ainfty::check_relations(s, a.rel.k_max, relation_options(a.rel)), "");
  return rep.finish(start);
}

struct CheckDgaArgs {
  RelationArgs rel;
  std::string preset = "exterior4";
  std::string rule;
  std::string export_path;
};

bmsign::ainfty::SignRule parse_rule(const std::string& text) {
  if (text.empty()) return bmsign::ainfty::SignRule::from_epsilon();
  // Bits a,b,c,e of s(d1,d2) = a*d1 + b*d2 + c*d1*d2 + e.
  if (text.size() != 4 || text.find_first_not_of("01") != std::string::npos)
    throw bmsign::InvalidArgument("--rule expects four bits 'abce', e.g. 1000");
  return {text[0] - '0', text[1] - '0', text[2] - '0', text[3] - '0'};
}

int run_check_dga(const CheckDgaArgs& a, const OutputFlags& f) {
  auto start = std::chrono::steady_clock::now();
  const auto rule = parse_rule(a.rule);
  const auto s = bmsign::ainfty::from_dga(bmsign::ainfty::dga_preset(a.preset), rule);
  if (!a.export_path.empty()) {
    std::ofstream os(a.export_path, std::ios::binary);
    if (!os) throw bmsign::InvalidArgument("cannot write " + a.export_path);
    os << bmsign::io::structure_to_json(s).dump(2) << "\n";
  }
  Report rep("check-dga", f);
  rep.parameters()["preset"] = a.preset;
  rep.parameters()["rule"] = rule.to_string();
  relation_params(rep, a.rel);
  rep.data()["runs"] = Json::array();
  record_relations(rep, bmsign::ainfty::check_relations(s, a.rel.k_max, relation_options(a.rel)), "");
  return rep.finish(start);
}

struct DeformArgs {
  RelationArgs rel;
  std::string preset = "exterior4";
  std::string b;
  std::string lambda_min = "1/2";
  std::string cutoff;
};

int run_deform_check(const DeformArgs& a, const OutputFlags& f) {
  auto start = std::chrono::steady_clock::now();
  const Rational lambda = bmsign::parse_rational(a.lambda_min);
  if (lambda <= 0) throw bmsign::InvalidArgument("--lambda-min must be positive");
  const Rational cutoff = a.cutoff.empty() ? Rational(4 * lambda) : bmsign::parse_rational(a.cutoff);
  const auto base = bmsign::ainfty::from_dga(bmsign::ainfty::dga_preset(a.preset), bmsign::ainfty::SignRule::from_epsilon(), cutoff);
  const auto b = bmsign::ainfty::parse_chain(base, a.b);
  const auto s = bmsign::ainfty::deform(base, b, lambda);
  Report rep("deform-check", f);
  rep.parameters()["preset"] = a.preset;
  rep.parameters()["b"] = a.b;
  rep.parameters()["lambda_min"] = bmsign::to_string(lambda);
  rep.parameters()["cutoff"] = bmsign::to_string(cutoff);
  relation_params(rep, a.rel);
  const auto m0 = s.apply(0, std::vector<bmsign::ainfty::BasisRef>{});
  Json m0j = Json::object();
  for (const auto& [r, x] : m0) m0j[s.generator(r).name] = x.to_string();
  rep.data()["m0"] = m0j;
  rep.data()["runs"] = Json::array();
  record_relations(rep, bmsign::ainfty::check_relations(s, a.rel.k_max, relation_options(a.rel)), "");
  return rep.finish(start);
}

struct GeoArgs {
  int trials = 500;
  std::uint64_t seed = 1;
  int max_coords = 4;
  int max_poly_deg = 3;
};

int run_verify_geomodel(const GeoArgs& a, const OutputFlags& f) {
  if (a.trials < 1) throw CLI::ValidationError("--trials", "must be >= 1");
  if (a.max_coords < 1 || a.max_poly_deg < 0) throw CLI::ValidationError("--max-coords", "must be >= 1");
  auto start = std::chrono::steady_clock::now();
  Report rep("verify-geomodel", f);
  rep.parameters()["trials"] = a.trials;
  rep.parameters()["seed"] = a.seed;
  rep.parameters()["max_coords"] = a.max_coords;
  rep.parameters()["max_poly_deg"] = a.max_poly_deg;
  bmsign::geo::VerifyOptions o;
  o.seed = a.seed;
  o.trials = a.trials;
  o.max_coords = a.max_coords;
  o.max_poly_deg = a.max_poly_deg;
  for (const auto& r : bmsign::geo::verify_geomodel(o)) {
    rep.record(r.id, r.passed, r.witness);
    rep.data()[r.id] = Json{{"trials", r.trials}, {"nontrivial", r.nontrivial}, {"odd_sign", r.odd_sign}};
  }
  return rep.finish(start);
}

struct StrataArgs {
  int k = 3;
  std::string energy = "1";
  std::string tag;
  std::string spectrum = "0,1";
  std::uint64_t table_seed = 0;
};

Json component_json(const bmsign::strata::ComponentData& c) {
  return Json{{"name", c.name}, {"dim", c.dimension}, {"mu", c.maslov_parity}};
}

Json descriptor_json(const bmsign::strata::ModuliDescriptor& m) {
  Json in = Json::array();
  for (const auto& c : m.inputs) in.push_back(component_json(c));
  return Json{{"k", m.k}, {"energy", bmsign::to_string(m.B.energy)}, {"tag", m.B.tag},
              {"output", component_json(m.output)}, {"inputs", in}};
}

int run_enumerate_strata(const StrataArgs& a, const OutputFlags& f) {
  namespace st = bmsign::strata;
  if (a.k < 0) throw CLI::ValidationError("--k", "must be >= 0");
  auto start = std::chrono::steady_clock::now();
  const auto spectrum = bmsign::novikov::GappedSpectrum::from_levels(parse_levels(a.spectrum));
  const st::EnergyClass B{bmsign::parse_rational(a.energy), a.tag};
  const auto table = st::ComponentTable::synthetic(a.k, a.table_seed);
  const auto strata = st::enumerate_strata(a.k, B, spectrum, table);
  Report rep("enumerate-strata", f);
  rep.parameters()["k"] = a.k;
  rep.parameters()["energy"] = bmsign::to_string(B.energy);
  rep.parameters()["tag"] = a.tag;
  rep.parameters()["spectrum"] = levels_json(spectrum.levels());
  rep.parameters()["table_seed"] = a.table_seed;
  const auto m = table.descriptor(a.k, B);
  rep.data()["moduli"] = descriptor_json(m);
  Json list = Json::array();
  bool dims_ok = true;
  std::string dim_witness;
  for (const auto& s : strata) {
    const bool c = st::codim_one_consistent(m, s);
    if (!c && dims_ok) {
      dims_ok = false;
      dim_witness = st::index_of(s).to_string();
    }
    list.push_back(Json{{"index", st::index_of(s).to_string()}, {"j", s.j}, {"outer", descriptor_json(s.outer)},
                        {"inner", descriptor_json(s.inner)}, {"node", component_json(s.node)}, {"kappa", s.sign},
                        {"vanishing", s.vanishing}, {"codim_one_consistent", c}});
  }
  rep.data()["strata"] = list;
  rep.record("codim-one-parity", dims_ok, dim_witness);
  const auto pr = st::pair_with_composition_terms(a.k, B.energy, spectrum, strata);
  std::string w;
  for (const auto& s : pr.unmatched_strata) w += (w.empty() ? "" : " ") + std::string("stratum") + s.to_string();
  for (const auto& t : pr.unmatched_terms) w += (w.empty() ? "" : " ") + std::string("term") + t.to_string();
  rep.record("pairing", pr.perfect, w);
  return rep.finish(start);
}

int run_nov_eval(const std::string& expr, const std::string& cutoff) {
  auto x = bmsign::novikov::parse(expr);
  if (!cutoff.empty()) x = bmsign::novikov::truncate(x, bmsign::novikov::EnergyCutoff(bmsign::parse_rational(cutoff)));
  std::cout << x.to_string() << "\n";
  return kExitPass;
}

int run_anf(const std::string& expr, const std::string& equals) {
  const auto p = bmsign::f2::to_anf(expr);
  if (equals.empty()) {
    std::cout << p.to_string() << "\n";
    return kExitPass;
  }
  const auto diff = p + bmsign::f2::to_anf(equals);
  if (diff.is_zero()) {
    std::cout << "equivalent\n";
    return kExitPass;
  }
  std::cout << "not equivalent: difference " << diff.to_string();
  if (auto w = bmsign::f2::find_witness(diff)) std::cout << "; at " << show_assignment(*w);
  std::cout << "\n";
  return kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bmsign: sign and structure verification for filtered A-infinity operations"};
  app.require_subcommand(1);
  app.set_version_flag("--version", bmsign::kVersion);
  OutputFlags flags;
  std::function<int()> action;

  auto* ps = app.add_subcommand("prove-signs", "Prove the sign identities symbolically for all instances up to --k-max");
  ProveSignsArgs psa;
  ps->add_option("--k-max", psa.k_max, "Largest arity (>= 1)")->capture_default_str();
  ps->add_option("--truth-table-k-max", psa.tt_k_max, "Cross-check by truth tables up to this arity")->capture_default_str();
  add_output_flags(ps, flags);
  ps->callback([&] { action = [&] { return run_prove_signs(psa, flags); }; });

  auto* rt = app.add_subcommand("replay-theorem", "Replay the formal cancellation argument for k <= --k-max");
  ReplayArgs rta;
  rt->add_option("--k-max", rta.k_max)->capture_default_str();
  rt->add_option("--spectrum", rta.spectrum, "Comma-separated energy levels, including 0")->capture_default_str();
  rt->add_option("--flip-term", rta.flip, "Flip the sign of the first term with this key (mutation test)");
  add_output_flags(rt, flags);
  rt->callback([&] { action = [&] { return run_replay(rta, flags); }; });

  auto add_rel = [](CLI::App* c, RelationArgs& r) {
    c->add_option("--k-max", r.k_max, "Check relations for k <= this")->capture_default_str();
    c->add_option("--seed", r.seed, "Seed for sampled tuples")->capture_default_str();
    c->add_option("--exhaustive-limit", r.exhaustive_limit)->capture_default_str();
    c->add_option("--samples", r.samples)->capture_default_str();
  };

  auto* ca = app.add_subcommand("check-ainfty", "Check the A-infinity relations of a structure file");
  CheckAInftyArgs caa;
  ca->add_option("--file", caa.file, "Structure definition (JSON)")->required();
  ca->add_option("--cutoff", caa.cutoff, "Energy cutoff, overriding the file");
  add_rel(ca, caa.rel);
  add_output_flags(ca, flags);
  ca->callback([&] { action = [&] { return run_check_ainfty(caa, flags); }; });

  auto* cd = app.add_subcommand("check-dga", "Check the A-infinity relations of a DGA preset");
  CheckDgaArgs cda;
  cd->add_option("--preset", cda.preset)->check(CLI::IsMember(bmsign::ainfty::dga_preset_names()))->capture_default_str();
  cd->add_option("--rule", cda.rule, "m2 sign rule bits 'abce' for a*d1 + b*d2 + c*d1*d2 + e (default: from epsilon)");
  cd->add_option("--export", cda.export_path, "Also write the structure in the check-ainfty file format");
  add_rel(cd, cda.rel);
  add_output_flags(cd, flags);
  cd->callback([&] { action = [&] { return run_check_dga(cda, flags); }; });

  auto* dc = app.add_subcommand("deform-check", "Deform a DGA preset by a bounding cochain and check the relations");
  DeformArgs dca;
  dc->add_option("--preset", dca.preset)->check(CLI::IsMember(bmsign::ainfty::dga_preset_names()))->capture_default_str();
  dc->add_option("--b", dca.b, "Element 'gen=novikov; gen=novikov'")->required();
  dc->add_option("--lambda-min", dca.lambda_min)->capture_default_str();
  dc->add_option("--cutoff", dca.cutoff, "Energy cutoff (default 4*lambda-min)");
  add_rel(dc, dca.rel);
  add_output_flags(dc, flags);
  dc->callback([&] { action = [&] { return run_deform_check(dca, flags); }; });

  auto* vg = app.add_subcommand("verify-geomodel", "Randomized exact checks of the fiber-integration calculus");
  GeoArgs vga;
  vg->add_option("--trials", vga.trials)->capture_default_str();
  vg->add_option("--seed", vga.seed)->capture_default_str();
  vg->add_option("--max-coords", vga.max_coords)->capture_default_str();
  vg->add_option("--max-poly-deg", vga.max_poly_deg)->capture_default_str();
  add_output_flags(vg, flags);
  vg->callback([&] { action = [&] { return run_verify_geomodel(vga, flags); }; });

  auto* es = app.add_subcommand("enumerate-strata", "List the codimension-one boundary strata of M_{k+1}(B)");
  StrataArgs esa;
  es->add_option("--k", esa.k)->capture_default_str();
  es->add_option("--energy", esa.energy)->capture_default_str();
  es->add_option("--tag", esa.tag);
  es->add_option("--spectrum", esa.spectrum, "Comma-separated energy levels, including 0")->capture_default_str();
  es->add_option("--table-seed", esa.table_seed, "Synthetic component data; 0 gives all-zero data")->capture_default_str();
  add_output_flags(es, flags);
  es->callback([&] { action = [&] { return run_enumerate_strata(esa, flags); }; });

  auto* ne = app.add_subcommand("nov-eval", "Evaluate a Novikov ring expression");
  std::string nov_expr, nov_cutoff;
  ne->add_option("expr", nov_expr)->required();
  ne->add_option("--cutoff", nov_cutoff, "Drop terms of energy >= this");
  ne->callback([&] { action = [&] { return run_nov_eval(nov_expr, nov_cutoff); }; });

  auto* an = app.add_subcommand("anf", "Print the mod-2 normal form of a sign expression");
  std::string anf_expr, anf_eq;
  an->add_option("--expr", anf_expr)->required();
  an->add_option("--equals", anf_eq, "Compare against this expression (exit 1 if different)");
  an->callback([&] { action = [&] { return run_anf(anf_expr, anf_eq); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    return action();
  } catch (const CLI::Error& e) {
    std::cerr << "bmsign: " << e.what() << "\n";
    return kExitUsage;
  } catch (const bmsign::io::FormatError& e) {
    std::cerr << "bmsign: " << e.what() << "\n";
    return kExitUsage;
  } catch (const bmsign::ParseError& e) {
    std::cerr << "bmsign: " << e.what() << "\n";
    return kExitUsage;
  } catch (const bmsign::InvalidArgument& e) {
    std::cerr << "bmsign: " << e.what() << "\n";
    return kExitUsage;
  }
}
