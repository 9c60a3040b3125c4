// ppclass: command-line front end for the finite-field permutation polynomial toolkit.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ppclass/eigen.hpp"
#include "ppclass/error.hpp"
#include "ppclass/fp2.hpp"
#include "ppclass/gf.hpp"
#include "ppclass/linalg.hpp"
#include "ppclass/poly.hpp"
#include "ppclass/pp.hpp"
#include "ppclass/reproduce.hpp"

using namespace ppclass;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPrecondition = 2;
constexpr int kExitBudget = 3;
constexpr int kExitUsage = 64;

struct RunConfig {
  std::uint32_t p = 0;
  std::uint32_t n = 1;
  std::string modulus;
  std::uint64_t budget = kDefaultBudget;
  unsigned workers = 1;
  std::string format = "json";
  std::uint64_t seed = 1;
  std::string out;
};

void add_output_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "markdown"}))
      ->capture_default_str();
  cmd->add_option("--out", cfg.out, "Write output to FILE instead of stdout");
}

void add_field_flags(CLI::App* cmd, RunConfig& cfg, bool require_p = true) {
  auto* p = cmd->add_option("--p", cfg.p, "Characteristic");
  if (require_p) p->required();
  cmd->add_option("--n", cfg.n, "Extension degree")->capture_default_str();
  cmd->add_option("--modulus", cfg.modulus, "Monic modulus coefficients, constant term first, e.g. 1,0,1");
  add_output_flags(cmd, cfg);
}

void add_search_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--budget", cfg.budget, "Candidate cap")->check(CLI::PositiveNumber)->capture_default_str();
  cmd->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
}

Field make_field(const RunConfig& cfg) {
  std::optional<std::vector<std::uint32_t>> modulus;
  if (!cfg.modulus.empty()) {
    std::vector<std::uint32_t> coeffs;
    std::stringstream ss(cfg.modulus);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        coeffs.push_back(static_cast<std::uint32_t>(std::stoul(item)));
      } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "bad modulus coefficient '" + item + "'");
      }
    }
    modulus = std::move(coeffs);
  }
  return Field::build(cfg.p, cfg.n, modulus);
}

std::string element_text(const Field& field, Elem a) {
  const auto d = field.digits(a);
  std::string out;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (d[i] != 1 || i == 0) out += std::to_string(d[i]);
    if (i >= 1) out += "t";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

Json field_json(const Field& field) {
  Json j;
  j["p"] = field.p();
  j["n"] = field.n();
  j["modulus"] = field.describe_modulus();
  return j;
}

Json document() {
  Json j;
  j["schema"] = 1;
  return j;
}

// Flattens nested objects to dotted keys for csv and markdown output.
void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
  } else if (j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& e) { return !e.is_structured(); })) {
    std::string joined;
    for (const auto& e : j) joined += (joined.empty() ? "" : "; ") + (e.is_string() ? e.get<std::string>() : e.dump());
    rows.emplace_back(prefix, joined);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), rows);
  } else {
    rows.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

std::string render(const Json& doc, const std::string& format) {
  if (format == "json") return doc.dump(2) + "\n";
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(doc, "", rows);
  std::ostringstream os;
  if (format == "csv") {
    os << "key,value\n";
    for (const auto& [k, v] : rows) {
      os << k << ',';
      if (v.find_first_of(",\"\n") != std::string::npos) {
        os << '"';
        for (char c : v) os << (c == '"' ? "\"\"" : std::string(1, c));
        os << '"';
      } else {
        os << v;
      }
      os << "\n";
    }
  } else {
    os << "| key | value |\n|---|---|\n";
    for (const auto& [k, v] : rows) os << "| " << k << " | " << v << " |\n";
  }
  return os.str();
}

ReportFormat report_format(const std::string& format) {
  if (format == "csv") return ReportFormat::Csv;
  if (format == "markdown") return ReportFormat::Markdown;
  return ReportFormat::Json;
}

void write_output(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw Error(ErrorCode::OutOfRange, "cannot open " + cfg.out + " for writing");
  file << text;
}

std::string read_poly_text(const std::string& arg) {
  if (!arg.empty()) return arg;
  std::string all((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
  while (!all.empty() && (all.back() == '\n' || all.back() == '\r' || all.back() == ' ')) all.pop_back();
  return all;
}

Json subspace_json(const Subspace& s) {
  Json basis = Json::array();
  for (const auto& f : basis_polys(s)) basis.push_back(format_poly(f));
  Json j;
  j["dim"] = s.dim();
  j["basis"] = std::move(basis);
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutation polynomials over finite fields via shift-operator eigenstructure"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* field_info = app.add_subcommand("field-info", "Modulus, primitive element and line count");
  add_field_flags(field_info, cfg);

  std::uint32_t r_index = 1;
  unsigned k = 1;
  auto* eigenspace = app.add_subcommand("eigenspace", "Basis of ker(A_r - I)^k");
  add_field_flags(eigenspace, cfg);
  eigenspace->add_option("--r", r_index, "Shift, as an element index")->capture_default_str();
  eigenspace->add_option("--k", k, "Kernel stage")->capture_default_str();

  std::vector<std::uint32_t> generators;
  auto* intersect_cmd = app.add_subcommand("intersect", "Basis of V_k, the intersection over the generators");
  add_field_flags(intersect_cmd, cfg);
  intersect_cmd->add_option("--k", k, "Kernel stage")->capture_default_str();
  intersect_cmd->add_option("--r", generators, "Generator element indices (default 1, a, ..., a^{n-1})");

  std::string poly_arg;
  auto* is_pp = app.add_subcommand("is-pp", "Direct bijectivity test");
  add_field_flags(is_pp, cfg);
  is_pp->add_option("poly", poly_arg, "Polynomial, read from stdin when omitted");

  auto* hermite = app.add_subcommand("hermite", "Hermite's criterion next to the direct test");
  add_field_flags(hermite, cfg);
  hermite->add_option("poly", poly_arg, "Polynomial, read from stdin when omitted");

  auto* invert = app.add_subcommand("invert", "Compositional inverse by interpolation");
  add_field_flags(invert, cfg);
  invert->add_option("poly", poly_arg, "Polynomial, read from stdin when omitted");

  auto* enumerate = app.add_subcommand("enumerate", "Count PPRs in V_k");
  add_field_flags(enumerate, cfg);
  add_search_flags(enumerate, cfg);
  enumerate->add_option("--k", k, "Kernel stage")->capture_default_str();
  bool all_pps = false;
  enumerate->add_flag("--all-pp", all_pps, "Count every PP rather than PPRs only");

  auto* degree_dist = app.add_subcommand("degree-dist", "PPR counts by degree over F_p");
  add_field_flags(degree_dist, cfg);
  add_search_flags(degree_dist, cfg);

  auto* fp2 = app.add_subcommand("fp2", "The (x^p - b x)^m + alpha x^p + beta x family over F_{p^2}");
  fp2->require_subcommand(1);
  unsigned m = 2;
  std::uint32_t b_index = 1;
  std::optional<std::uint32_t> alpha_index, beta_index;
  auto* fp2_verify = fp2->add_subcommand("verify", "Parameters, conditions and inverse check");
  add_field_flags(fp2_verify, cfg);
  fp2_verify->add_option("--m", m, "Exponent")->capture_default_str();
  fp2_verify->add_option("--b", b_index, "(p+1)-th root of unity, as an element index")->capture_default_str();
  fp2_verify->add_option("--alpha", alpha_index, "alpha index; every pair when omitted with --beta");
  fp2_verify->add_option("--beta", beta_index, "beta index");
  bool full_shape = false;
  auto* fp2_census = fp2->add_subcommand("census", "Conditioned and full-shape counts");
  add_field_flags(fp2_census, cfg);
  add_search_flags(fp2_census, cfg);
  fp2_census->add_option("--m", m, "Exponent")->capture_default_str();
  fp2_census->add_option("--b", b_index, "(p+1)-th root of unity, as an element index")->capture_default_str();
  fp2_census->add_flag("--full", full_shape, "Test every (alpha, beta), not just the conditioned ones");
  auto* fp2_lemmas = fp2->add_subcommand("lemmas", "Exhaustive identity checks");
  add_field_flags(fp2_lemmas, cfg);

  bool timings = false;
  std::size_t samples = ReproduceConfig{}.hermite_samples;
  auto* reproduce = app.add_subcommand("reproduce", "Claim-by-claim report over one field or the default roster");
  add_field_flags(reproduce, cfg, false);
  add_search_flags(reproduce, cfg);
  reproduce->add_option("--seed", cfg.seed, "Seed for sampled checks")->capture_default_str();
  reproduce->add_option("--samples", samples, "Random polynomials for the Hermite comparison")->capture_default_str();
  reproduce->add_flag("--timings", timings, "Include runtimes (output is then not byte-stable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*reproduce) {
      ReproduceConfig rc;
      rc.workers = cfg.workers;
      rc.seed = cfg.seed;
      rc.budget = cfg.budget;
      rc.hermite_samples = samples;
      std::vector<ClaimReport> reports;
      if (cfg.p != 0) {
        reports = reproduce_field(make_field(cfg), rc);
      } else {
        reports = reproduce_all(rc, default_roster());
      }
      write_output(cfg, emit_report(reports, report_format(cfg.format), timings));
      return kExitOk;
    }

    const Field field = make_field(cfg);
    Json doc = document();
    doc["field"] = field_json(field);

    if (*field_info) {
      doc["field"]["q"] = field.q();
      doc["field"]["modulus_coefficients"] = field.modulus();
      doc["primitive"] = {{"index", field.primitive().index}, {"element", element_text(field, field.primitive())}};
      doc["line_count"] = line_count(field);
    } else if (*eigenspace) {
      const Subspace s = kernel_power(field, field.element(r_index), k);
      doc["r"] = r_index;
      doc["k"] = k;
      doc.update(subspace_json(s));
    } else if (*intersect_cmd) {
      std::vector<Elem> gens;
      for (auto g : generators) gens.push_back(field.element(g));
      if (gens.empty()) gens = default_generators(field);
      if (k < 1 || k > field.p()) throw Error(ErrorCode::OutOfRange, "k must lie in [1, p]");
      const Subspace s = intersection_space(field, k, gens);
      Json rs = Json::array();
      for (auto g : gens) rs.push_back(g.index);
      doc["r"] = rs;
      doc["k"] = k;
      doc.update(subspace_json(s));
    } else if (*is_pp || *hermite || *invert) {
      const Poly f = parse_poly(field, read_poly_text(poly_arg));
      doc["poly"] = format_poly(f);
      const PermVerdict v = is_permutation(field, f);
      if (*is_pp) {
        doc["is_pp"] = v.is_pp;
        doc["is_ppr"] = v.is_ppr;
        doc["witness"] = v.witness ? Json::array({v.witness->first.index, v.witness->second.index}) : Json(nullptr);
      } else if (*hermite) {
        doc["hermite"] = hermite_test(field, f);
        doc["direct"] = v.is_pp;
      } else {
        doc["inverse"] = format_poly(compositional_inverse(field, f));
      }
    } else if (*enumerate) {
      if (k < 1 || k > field.p()) throw Error(ErrorCode::OutOfRange, "k must lie in [1, p]");
      EnumOptions opts;
      opts.budget = cfg.budget;
      opts.workers = cfg.workers;
      opts.require_ppr = !all_pps;
      const Subspace s = intersection_space(field, k);
      const EnumReport r = enumerate_pprs(field, s, opts);
      doc["k"] = k;
      doc["dim"] = s.dim();
      doc["searched"] = r.searched;
      doc[all_pps ? "pp_count" : "ppr_count"] = r.ppr_count;
      if (r.list_emitted) {
        Json list = Json::array();
        for (const auto& c : r.ppr_list) list.push_back(format_poly(from_coords(c)));
        doc["list"] = std::move(list);
      } else {
        doc["list"] = nullptr;
      }
    } else if (*degree_dist) {
      EnumOptions opts;
      opts.budget = cfg.budget;
      opts.workers = cfg.workers;
      const DegreeCensus c = degree_distribution(field, opts);
      Json by = Json::object();
      for (const auto& [d, count] : c.by_degree) by[std::to_string(d)] = count;
      doc["by_degree"] = std::move(by);
      doc["total"] = c.total;
      doc["searched"] = c.searched;
      Json mism = Json::array();
      for (const auto& f : c.stage_mismatches) mism.push_back(format_poly(f));
      doc["stage_mismatches"] = std::move(mism);
    } else if (*fp2_verify) {
      const Elem b = field.element(b_index);
      require_family_domain(field, m, b);
      doc["m"] = m;
      doc["b"] = b_index;
      if (alpha_index.has_value() != beta_index.has_value()) {
        throw Error(ErrorCode::OutOfRange, "--alpha and --beta go together");
      }
      if (alpha_index) {
        const Elem alpha = field.element(*alpha_index), beta = field.element(*beta_index);
        const ConditionVerdict v = check_conditions(field, m, b, alpha, beta);
        doc["alpha"] = alpha.index;
        doc["beta"] = beta.index;
        doc["cond1"] = v.cond1;
        doc["cond2"] = v.cond2;
        const Poly f = build_family_member(field, m, b, alpha, beta);
        doc["f"] = format_poly(f);
        doc["is_pp"] = is_permutation(field, f).is_pp;
        if (v.constructible) {
          const FamilyInstance inst = derive_params(field, m, b, alpha, beta);
          doc["params"] = {{"gamma", inst.gamma.index}, {"epsilon", inst.epsilon.index}, {"delta", inst.delta.index},
                           {"d", inst.d.index}};
          const FamilyPair pair = build_pair(field, inst);
          doc["h"] = format_poly(pair.h);
          doc["h_is_inverse"] = compositional_inverse(field, pair.f) == pair.h;
        } else {
          doc["params"] = nullptr;
        }
      } else {
        std::uint64_t instances = 0, pp = 0, inverse_ok = 0;
        for (std::uint32_t a = 0; a < field.q(); ++a) {
          for (std::uint32_t bb = 0; bb < field.q(); ++bb) {
            if (!check_conditions(field, m, b, Elem{a}, Elem{bb}).constructible) continue;
            ++instances;
            const FamilyPair pair = build_pair(field, derive_params(field, m, b, Elem{a}, Elem{bb}));
            if (!is_permutation(field, pair.f).is_pp) continue;
            ++pp;
            inverse_ok += compositional_inverse(field, pair.f) == pair.h;
          }
        }
        doc["conditioned"] = instances;
        doc["pp"] = pp;
        doc["h_is_inverse"] = inverse_ok;
      }
    } else if (*fp2_census) {
      const Elem b = field.element(b_index);
      const CensusResult r = census(field, m, b, full_shape ? CensusMode::FullShape : CensusMode::Conditioned, cfg.workers);
      doc["m"] = m;
      doc["b"] = b_index;
      doc["conditioned"] = r.conditioned;
      doc["conditioned_non_pp"] = r.conditioned_non_pp;
      doc["full"] = r.full ? Json(*r.full) : Json(nullptr);
      doc["excess"] = r.excess ? Json(*r.excess) : Json(nullptr);
      if (r.full) {
        doc["pp_by_condition"] = {{"both", r.pp_by_condition[1][1]},
                                  {"cond1_only", r.pp_by_condition[1][0]},
                                  {"cond2_only", r.pp_by_condition[0][1]},
                                  {"neither", r.pp_by_condition[0][0]}};
      }
    } else if (*fp2_lemmas) {
      Json checks = Json::array();
      for (const auto& c : lemma_suite(field)) {
        checks.push_back({{"id", c.id},
                          {"statement", c.statement},
                          {"as_stated", c.as_stated},
                          {"passed", c.passed()},
                          {"instances", c.instances},
                          {"skipped", c.skipped},
                          {"failures", c.failures},
                          {"counterexamples", c.counterexamples}});
      }
      doc["checks"] = std::move(checks);
    }
    write_output(cfg, render(doc, cfg.format));
    return kExitOk;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::BudgetExceeded ? kExitBudget : kExitPrecondition;
  }
}
