// Copyright 2026 The tubealg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tubealg/calculus.hpp"
#include "tubealg/modinv.hpp"
#include "tubealg/modular_data.hpp"
#include "tubealg/report.hpp"
#include "tubealg/reps.hpp"
#include "tubealg/tube.hpp"

#ifndef TUBEALG_DEFAULT_DATA_DIR
#define TUBEALG_DEFAULT_DATA_DIR "data"
#endif

namespace {

using namespace tubealg;
using mtc::Label;

enum ExitCode { kOk = 0, kCheckFailed = 1, kLoadFailed = 2, kBudgetExceeded = 3 };

struct RunConfig {
  std::string category;
  std::string modular_data;
  double tolerance = 1e-9;
  std::optional<int> entry_bound;
  int bound_cap = 3;
  std::uint64_t seed = 1;
  std::uint64_t budget = 50'000'000;
  std::string format = "text";
  std::string z = "identity";
  std::vector<std::string> checks;
  int samples = 8;
  bool brute_force = false;
};

const std::vector<std::string> kVerifyChecks{"pentagon",    "hexagon",      "modular",
                                             "idempotents", "handle-slide", "associativity"};

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("TUBEALG_DATA_DIR"); env != nullptr && *env != '\0') return env;
  return TUBEALG_DEFAULT_DATA_DIR;
}

std::filesystem::path resolve_category(const std::string& name) {
  const std::string prefix = "builtin:";
  if (name.rfind(prefix, 0) == 0) {
    auto path = data_dir() / (name.substr(prefix.size()) + ".json");
    if (!std::filesystem::exists(path)) throw mtc::LoadError("unknown builtin category '" + name + "'");
    return path;
  }
  return name;
}

mtc::MTCData load(const RunConfig& cfg) {
  if (cfg.category.empty()) throw mtc::LoadError("no category given (use --category)");
  return mtc::load_category_file(resolve_category(cfg.category), cfg.tolerance);
}

void emit(const RunConfig& cfg, const json& doc, const std::string& text) {
  if (cfg.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

std::string verdict(bool ok) { return ok ? "pass" : "FAIL"; }
std::string yes_no(bool ok) { return ok ? "yes" : "no"; }

std::string sci(double v) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(2) << v;
  return os.str();
}

ConsistencyReport idempotent_report(const tube::TubeCategory& tc) {
  ConsistencyReport report("idempotents", 1e-8);
  const auto& cat = tc.category();
  const auto& names = cat.ring().names();
  const int r = tc.rank();
  std::vector<tube::TubeMorphism> eps;
  for (Label i = 0; i < r; ++i)
    for (Label j = 0; j < r; ++j) eps.push_back(tc.epsilon(i, j));
  for (Label i = 0; i < r; ++i)
    for (Label j = 0; j < r; ++j) {
      const auto& e = eps[i * r + j];
      const std::string ij = names[i] + "," + names[j];
      for (Label k = 0; k < r; ++k)
        for (Label l = 0; l < r; ++l) {
          const auto& f = eps[k * r + l];
          const std::string tag = "e(" + ij + ") e(" + names[k] + "," + names[l] + ")";
          if (i == k && j == l) {
            report.record(tag, tube::residual(tc.compose(e, f), e));
            continue;
          }
          double worst = 0.0;
          const int n = tc.hom_dim(f.source, e.source);
          for (int q = 0; q < n; ++q) {
            worst = std::max(worst, tube::max_abs(tc.compose(e, tc.compose(tc.basis_morphism(f.source, e.source, q), f))));
          }
          report.record(tag, worst);
        }
      report.record("pairing rank e(" + ij + ")", std::abs(tc.pairing_rank(e) - 1));
      tube::TubeMorphism twisted = tc.compose(e, tc.twist(e.source));
      report.record("e(" + ij + ") t", tube::residual(twisted, (cat.twist(i) / cat.twist(j)) * e));
    }
  for (Label s = 0; s < r; ++s) {
    tube::TubeMorphism sum = tc.zero({s}, {s});
    for (Label a = 0; a < r; ++a)
      for (Label b = 0; b < r; ++b) sum += tc.isotypic_idempotent(s, a, b);
    report.record("sum e(" + names[s] + ",A,B)", tube::residual(sum, tc.identity({s})));
  }
  return report;
}

ConsistencyReport associativity_report(const tube::TubeCategory& tc, std::uint64_t seed, int samples) {
  ConsistencyReport report("associativity", 1e-8);
  std::mt19937_64 rng(seed);
  auto family = reps::standard_family(tc.rank());
  std::uniform_int_distribution<std::size_t> pick(0, family.size() - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  auto random_morphism = [&](const mtc::Word& x, const mtc::Word& y) {
    Vector v(tc.hom_dim(x, y));
    for (Eigen::Index k = 0; k < v.size(); ++k) {
      v(k) = Complex(static_cast<double>(coeff(rng)), static_cast<double>(coeff(rng)));
    }
    return tc.from_coordinates(x, y, v);
  };
  for (int n = 0; n < samples; ++n) {
    const auto& a = family[pick(rng)];
    const auto& b = family[pick(rng)];
    const auto& c = family[pick(rng)];
    const auto& d = family[pick(rng)];
    auto f = random_morphism(a, b);
    auto g = random_morphism(b, c);
    auto h = random_morphism(c, d);
    report.record("sample " + std::to_string(n),
                  tube::residual(tc.compose(tc.compose(h, g), f), tc.compose(h, tc.compose(g, f))));
  }
  return report;
}

int cmd_verify(const RunConfig& cfg) {
  std::vector<std::string> checks = cfg.checks.empty() ? kVerifyChecks : cfg.checks;
  for (const auto& c : checks) {
    if (std::find(kVerifyChecks.begin(), kVerifyChecks.end(), c) == kVerifyChecks.end()) {
      std::cerr << "error: unknown check '" << c << "'\n";
      return kLoadFailed;
    }
  }
  auto wants = [&](const std::string& name) { return std::find(checks.begin(), checks.end(), name) != checks.end(); };
  mtc::MTCData cat = load(cfg);
  std::optional<mtc::ModularData> md;
  std::vector<ConsistencyReport> reports;
  if (wants("pentagon")) reports.push_back(mtc::verify_pentagon(cat));
  if (wants("hexagon")) reports.push_back(mtc::verify_hexagon(cat));
  ConsistencyReport md_failure("modular", cat.tolerance());
  try {
    md = mtc::compute_modular_data(cat);
  } catch (const mtc::ModularDataError& e) {
    md_failure.record(e.what(), 1.0);
  }
  if (wants("modular")) reports.push_back(md ? mtc::verify_modular_relations(*md, cat) : md_failure);

  bool need_tube = wants("idempotents") || wants("handle-slide") || wants("associativity");
  if (need_tube) {
    mtc::Calculus calc(cat);
    tube::TubeCategory tc(calc);
    if (wants("idempotents")) reports.push_back(idempotent_report(tc));
    if (wants("handle-slide")) {
      ConsistencyReport hs("handle_slide", 1e-8);
      if (!md) {
        hs.record("modular data unavailable", 1.0);
      } else {
        for (Label i = 0; i < cat.rank(); ++i)
          for (Label j = 0; j < cat.rank(); ++j)
            for (Label s = 0; s < cat.rank(); ++s) hs.merge(tc.verify_handle_slide(i, j, s, *md));
      }
      reports.push_back(hs);
    }
    if (wants("associativity")) reports.push_back(associativity_report(tc, cfg.seed, cfg.samples));
  }

  bool all = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
  std::ostringstream text;
  text << "category: " << cfg.category << " (" << cat.rank() << " labels)\n";
  for (const auto& r : reports) {
    text << "  " << std::left << std::setw(19) << r.check << verdict(r.passed) << "  worst residual "
         << sci(r.max_residual) << "  over " << r.instances << " instances\n";
    for (const auto& f : r.failures) text << "      failed: " << f.instance << "  residual " << sci(f.residual) << "\n";
  }
  text << "result: " << verdict(all) << "\n";
  json doc{{"command", "verify"}, {"category", cfg.category}, {"checks", reports}, {"passed", all}};
  emit(cfg, doc, text.str());
  return all ? kOk : kCheckFailed;
}

mtc::ModularData modular_data_source(const RunConfig& cfg) {
  if (!cfg.modular_data.empty()) return mtc::load_modular_data_file(cfg.modular_data, cfg.tolerance);
  return mtc::compute_modular_data(load(cfg));
}

int cmd_modular_data(const RunConfig& cfg) {
  mtc::ModularData md = modular_data_source(cfg);
  std::ostringstream text;
  text << "labels:";
  for (const auto& l : md.labels) text << " " << l;
  text << "\nS =\n" << format_matrix(md.s_matrix) << "T =\n" << format_matrix(md.t_matrix);
  text << "lambda = " << format_complex(md.lambda) << "\n";
  text << "d(C) = " << format_complex(md.global_dim) << "\n";
  text << "C =\n" << format_int_matrix(md.charge_conj);
  json doc = md;
  doc["command"] = "modular-data";
  emit(cfg, doc, text.str());
  return kOk;
}

int cmd_enumerate(const RunConfig& cfg) {
  mtc::ModularData md = modular_data_source(cfg);
  const int bound = cfg.entry_bound ? *cfg.entry_bound : modinv::default_entry_bound(md, cfg.bound_cap);
  modinv::CommutantBasis cb = modinv::commutant(md);
  modinv::SearchStats stats;
  auto found = modinv::enumerate_modular_invariants(md, bound, cfg.budget, &stats);
  std::optional<bool> agree;
  if (cfg.brute_force) agree = modinv::enumerate_brute_force(md, bound) == found;

  std::ostringstream text;
  text << "entry bound: " << bound << "\ncommutant dimension: " << cb.dimension() << "\nmodular invariants: "
       << found.size() << "\n";
  for (std::size_t k = 0; k < found.size(); ++k) text << "[" << k << "]\n" << format_int_matrix(found[k]);
  if (agree) text << "brute force agrees: " << yes_no(*agree) << "\n";
  json list = json::array();
  for (const auto& z : found) list.push_back(int_matrix_to_json(z));
  json doc{{"command", "enumerate"},
           {"entry_bound", bound},
           {"commutant_dimension", cb.dimension()},
           {"count", found.size()},
           {"invariants", list}};
  if (agree) doc["brute_force_agrees"] = *agree;
  emit(cfg, doc, text.str());
  return agree.value_or(true) ? kOk : kCheckFailed;
}

struct ZSourceError : Error {
  using Error::Error;
};

IntMatrix parse_z(const RunConfig& cfg, const mtc::MTCData& cat) {
  const int n = cat.rank();
  const std::string& src = cfg.z;
  if (src == "identity") return IntMatrix::Identity(n, n);
  if (src == "random") {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<int> entry(0, 2);
    IntMatrix z(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) z(i, j) = entry(rng);
    z(0, 0) = 1;
    return z;
  }
  if (src.rfind("enum:", 0) == 0) {
    int k = 0;
    try {
      k = std::stoi(src.substr(5));
    } catch (const std::exception&) {
      throw ZSourceError("bad enumerator index in --z " + src);
    }
    mtc::ModularData md = mtc::compute_modular_data(cat);
    const int bound = cfg.entry_bound ? *cfg.entry_bound : modinv::default_entry_bound(md, cfg.bound_cap);
    auto found = modinv::enumerate_modular_invariants(md, bound, cfg.budget);
    if (k < 0 || k >= static_cast<int>(found.size())) {
      throw ZSourceError("enumerator returned " + std::to_string(found.size()) + " matrices; index " +
                         std::to_string(k) + " is out of range");
    }
    return found[k];
  }
  std::string body = src;
  if (!src.empty() && src[0] == '@') {
    std::ifstream in(src.substr(1));
    if (!in) throw ZSourceError("cannot open " + src.substr(1));
    std::ostringstream buf;
    buf << in.rdbuf();
    body = buf.str();
  }
  try {
    IntMatrix z = int_matrix_from_json(json::parse(body));
    if (z.rows() != n) throw ZSourceError("Z must be " + std::to_string(n) + "x" + std::to_string(n));
    return z;
  } catch (const json::exception& e) {
    throw ZSourceError(std::string("cannot parse Z: ") + e.what());
  }
}

std::string mismatches(const RealMatrix& table, const std::vector<std::string>& names) {
  std::string out;
  for (Eigen::Index i = 0; i < table.rows(); ++i)
    for (Eigen::Index j = 0; j < table.cols(); ++j) {
      if (table(i, j) > 1e-7) out += " (" + names[i] + "," + names[j] + ")";
    }
  return out.empty() ? " none" : out;
}

int cmd_check_rep(const RunConfig& cfg) {
  mtc::MTCData cat = load(cfg);
  IntMatrix z = parse_z(cfg, cat);
  mtc::ModularData md = mtc::compute_modular_data(cat);
  mtc::Calculus calc(cat);
  tube::TubeCategory tc(calc);
  reps::RepContext ctx(tc);
  reps::TubeRep rep = reps::build_rep(ctx, z);
  reps::ModularInvarianceReport r = reps::check_modular_invariance(rep, md);
  const auto& names = cat.ring().names();

  std::ostringstream text;
  text << "Z =\n" << format_int_matrix(z);
  text << "invariant: " << yes_no(r.modular_invariant) << "\n";
  text << "trace triple Tr = Tr^T = Tr^S: " << (r.trace_triple ? "holds" : "fails") << "\n";
  text << "Z_11 = 1: " << yes_no(r.unit_entry) << "\n";
  text << "T: [Z,T] = 0: " << yes_no(r.t.commutator) << "  F(t_X) = id: " << yes_no(r.t.generator)
       << "  Tr^T = Tr: " << yes_no(r.t.traces) << "  worst residual " << sci(r.t.worst_residual) << "\n";
  text << "   T-trace mismatch at:" << mismatches(r.t.pair_residuals, names) << "\n";
  text << "S: [Z,S] = 0: " << yes_no(r.s.commutator) << "  tr F(nu) = tr F(eps): " << yes_no(r.s.generator)
       << "  Tr^S = Tr: " << yes_no(r.s.traces) << "  worst residual " << sci(r.s.worst_residual) << "\n";
  text << "   S-trace mismatch at:" << mismatches(r.s.pair_residuals, names) << "\n";
  text << "tr F(nu) = (S Z S^-1): " << yes_no(r.s.formula) << "  residual " << sci(r.s.formula_residual) << "\n";
  text << "biconditionals: " << (r.consistent ? "consistent" : "INCONSISTENT") << "\n";
  json doc{{"command", "check-rep"}, {"category", cfg.category}, {"z", int_matrix_to_json(z)}, {"report", r}};
  emit(cfg, doc, text.str());
  return r.consistent ? kOk : kCheckFailed;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--category", cfg.category, "Category file path, or builtin:<name>");
  sub->add_option("--tolerance", cfg.tolerance, "Tolerance for approximate equality")->check(CLI::PositiveNumber);
  sub->add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--seed", cfg.seed, "Seed for sampled checks and --z random");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tube category and modular invariant toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* verify = app.add_subcommand("verify", "Run consistency checks on a category");
  add_common(verify, cfg);
  verify->add_option("--checks", cfg.checks, "Subset of: pentagon hexagon modular idempotents handle-slide associativity")
      ->delimiter(',');
  verify->add_option("--samples", cfg.samples, "Sampled triples for the associativity check");

  auto* modular = app.add_subcommand("modular-data", "Print S, T, lambda, d(C) and C");
  add_common(modular, cfg);
  modular->add_option("--modular-data", cfg.modular_data, "Standalone S/T file instead of a category");

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate bounded modular invariant matrices");
  add_common(enumerate, cfg);
  enumerate->add_option("--modular-data", cfg.modular_data, "Standalone S/T file instead of a category");
  enumerate->add_option("--entry-bound", cfg.entry_bound, "Largest allowed matrix entry")->check(CLI::PositiveNumber);
  enumerate->add_option("--bound-cap", cfg.bound_cap, "Cap on the default entry bound");
  enumerate->add_option("--budget", cfg.budget, "Search node budget");
  enumerate->add_flag("--brute-force", cfg.brute_force, "Cross-check against exhaustive search");

  auto* check = app.add_subcommand("check-rep", "Check modular invariance of the representation with matrix Z");
  add_common(check, cfg);
  check->add_option("--z", cfg.z, "identity | random | enum:<k> | @file | inline JSON matrix");
  check->add_option("--entry-bound", cfg.entry_bound, "Entry bound used by --z enum:<k>")->check(CLI::PositiveNumber);
  check->add_option("--budget", cfg.budget, "Search node budget used by --z enum:<k>");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) return cmd_verify(cfg);
    if (*modular) return cmd_modular_data(cfg);
    if (*enumerate) return cmd_enumerate(cfg);
    if (*check) return cmd_check_rep(cfg);
  } catch (const mtc::LoadError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kLoadFailed;
  } catch (const ZSourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kLoadFailed;
  } catch (const reps::RepError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kLoadFailed;
  } catch (const modinv::SearchBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const mtc::ModularDataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kOk;
}
