#include "cyclotome/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cyclotome/canonical.hpp"
#include "cyclotome/cases.hpp"
#include "cyclotome/house.hpp"
#include "cyclotome/lemma31.hpp"
#include "cyclotome/mvalue.hpp"
#include "cyclotome/report_json.hpp"
#include "cyclotome/rootsum.hpp"

namespace cyclotome {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitClaimFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnresolved = 3;

// CSV field quoting: wrap when the text contains a comma or quote.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

int emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output_path.empty()) {
    std::fputs(text.c_str(), stdout);
    return kExitOk;
  }
  std::ofstream out(cfg.output_path, std::ios::trunc);
  if (!out) {
    std::cerr << "cyclotome: cannot write " << cfg.output_path << "\n";
    return kExitUsage;
  }
  out << text;
  return kExitOk;
}

int run_house(const RunConfig& cfg) {
  RootSum a = RootSum::parse(cfg.input);
  HouseReport rep = classify(a);
  if (cfg.precision_bits > 0) {
    // Re-evaluate the displayed enclosure at the requested precision; the
    // classification above already escalated as far as it needed.
    rep.house = house_of(a, PrecisionPolicy{0, 0, cfg.precision_bits}).house;
  }

  std::string text;
  if (cfg.format == "json") {
    text = json_text(house_report_json(rep));
  } else if (cfg.format == "csv") {
    text =
        "input,conductor,degree,house_mid,house_rad,status,list_value,"
        "witness_k\n";
    text += csv_field(rep.input.str()) + "," + std::to_string(rep.conductor) +
            "," + std::to_string(rep.degree) + "," + rep.house.mid_str() +
            "," + rep.house.rad_str() + "," + status_name(rep.status) + "," +
            (rep.status == HouseStatus::OnList ? rep.list_value.str() : "") +
            "," + std::to_string(rep.witness_k) + "\n";
  } else {
    text = "input: " + rep.input.str() + "\n" +
           "conductor: " + std::to_string(rep.conductor) + "\n" +
           "degree: " + std::to_string(rep.degree) + "\n" +
           "house: " + rep.house.mid_str() + " (+/- " + rep.house.rad_str() +
           ")\n" + "status: " + status_name(rep.status) + "\n";
    if (rep.status == HouseStatus::OnList)
      text += "list value: " + rep.list_value.str() + "\n";
  }
  int code = emit(cfg, text);
  if (code != kExitOk) return code;
  return rep.status == HouseStatus::Unresolved ? kExitUnresolved : kExitOk;
}

int run_m(const RunConfig& cfg) {
  RootSum a = RootSum::parse(cfg.input);
  mpq_class m = m_of(a);
  std::string text;
  if (cfg.format == "json")
    text = json_text(m_report_json(cfg.input, m));
  else if (cfg.format == "csv")
    text = "input,m\n" + csv_field(cfg.input) + "," + m.get_str() + "\n";
  else
    text = m.get_str() + "\n";
  return emit(cfg, text);
}

int run_reproduce(const RunConfig& cfg) {
  std::vector<std::string> ids;
  if (cfg.all_cases) {
    ids = case_ids();
  } else {
    const auto& known = case_ids();
    bool found = false;
    for (const std::string& id : known) found = found || id == cfg.input;
    if (!found) {
      std::cerr << "cyclotome: unknown case id: " << cfg.input << "\n";
      return kExitUsage;
    }
    ids.push_back(cfg.input);
  }

  CaseOptions opts;
  opts.checkpoint_path = cfg.checkpoint_path;
  opts.seed = cfg.seed;

  bool all_pass = true;
  std::vector<CaseResult> results;
  for (const std::string& id : ids) {
    CaseResult r;
    try {
      r = run_case(id, opts);
    } catch (const std::exception& e) {
      r.id = id;
      r.pass = false;
      r.details = std::string("error: ") + e.what();
    }
    all_pass = all_pass && r.pass;
    // Human-readable progress on stderr; the formatted document goes to the
    // selected output stream.
    std::cerr << (r.pass ? "PASS " : "FAIL ") << r.id << ": " << r.details
              << "\n";
    results.push_back(std::move(r));
  }

  std::string text;
  if (cfg.format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const CaseResult& r : results) arr.push_back(case_result_json(r));
    text = json_text(arr);
  } else if (cfg.format == "csv") {
    text = "id,candidate_count,min_house_sq,max_house_sq,pass,details\n";
    for (const CaseResult& r : results) {
      char nums[64];
      std::snprintf(nums, sizeof nums, "%.6f,%.6f", r.min_house_sq,
                    r.max_house_sq);
      text += csv_field(r.id) + "," + std::to_string(r.candidate_count) +
              "," + nums + "," + (r.pass ? "true" : "false") + "," +
              csv_field(r.details) + "\n";
    }
  } else {
    for (const CaseResult& r : results)
      text += std::string(r.pass ? "PASS " : "FAIL ") + r.id + " (" +
              std::to_string(r.candidate_count) + " candidates): " +
              r.details + "\n";
  }
  int code = emit(cfg, text);
  if (code != kExitOk) return code;
  return all_pass ? kExitOk : kExitClaimFailure;
}

int run_plot_f(const RunConfig& cfg) {
  if (cfg.grid_points < 2) {
    std::cerr << "cyclotome: --grid-points must be at least 2\n";
    return kExitUsage;
  }
  mpq_class excl(cfg.exclusion);
  excl.canonicalize();
  // grid_points rows span [0, 126/25] inclusive before exclusions
  std::vector<PlotSample> samples =
      lemma31_plot_samples(cfg.grid_points - 1, excl);

  std::string text;
  if (cfg.format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const PlotSample& s : samples) {
      nlohmann::ordered_json row;
      row["x"] = s.x;
      row["f"] = s.f;
      arr.push_back(row);
    }
    text = json_text(arr);
  } else {
    text = "x,f\n";
    for (const PlotSample& s : samples) {
      char buf[80];
      std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", s.x, s.f);
      text += buf;
    }
  }
  return emit(cfg, text);
}

}  // namespace

int cli_main(int argc, char** argv) {
  RunConfig cfg;

  CLI::App app{
      "cyclotome: certified houses, exact mean squares, and reproduction "
      "sweeps for sums of roots of unity"};
  app.require_subcommand(1);
  app.set_config("--config", "", "config file (same keys as flags; flags win)")
      ->envname("CYCLOTOME_CONFIG");

  app.add_option("--precision-bits", cfg.precision_bits,
                 "working precision for displayed enclosures "
                 "(classification escalates automatically)")
      ->envname("CYCLOTOME_PRECISION_BITS")
      ->check(CLI::PositiveNumber);
  app.add_option("--workers", cfg.workers,
                 "worker cap; results are identical for every value")
      ->envname("CYCLOTOME_WORKERS")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--checkpoint", cfg.checkpoint_path,
                 "checkpoint path stem for long sweeps")
      ->envname("CYCLOTOME_CHECKPOINT");
  CLI::Option* format_opt =
      app.add_option("--format", cfg.format,
                     "output format (default json; plot-f defaults to csv)")
          ->envname("CYCLOTOME_FORMAT")
          ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--output", cfg.output_path, "write output to this file")
      ->envname("CYCLOTOME_OUTPUT");
  app.add_option("--seed", cfg.seed,
                 "override the pinned seed of sampled sweeps")
      ->envname("CYCLOTOME_SEED");
  app.add_option("--max-conductor", cfg.max_conductor,
                 "largest conductor accepted by reductions")
      ->envname("CYCLOTOME_MAX_CONDUCTOR")
      ->check(CLI::PositiveNumber);

  CLI::App* house =
      app.add_subcommand("house", "certified house and list classification");
  house->fallthrough();
  house->add_option("input", cfg.input, "sum of roots of unity, N:e^m,...")
      ->required();

  CLI::App* m = app.add_subcommand("m", "exact mean square of the conjugates");
  m->fallthrough();
  m->add_option("input", cfg.input, "sum of roots of unity, N:e^m,...")
      ->required();

  CLI::App* reproduce =
      app.add_subcommand("reproduce", "re-run a registered computation");
  reproduce->fallthrough();
  reproduce->add_option("case", cfg.input, "case id");
  reproduce->add_flag("--all", cfg.all_cases, "run every registered case");

  CLI::App* plot =
      app.add_subcommand("plot-f", "sample the certified auxiliary function");
  plot->fallthrough();
  plot->add_option("--grid-points", cfg.grid_points,
                   "rows in the uniform grid over [0, 126/25]");
  plot->add_option("--exclusion", cfg.exclusion,
                   "skip samples within this radius of a singularity "
                   "(rational, e.g. 1/1000)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (cfg.max_conductor > 0) set_max_conductor(cfg.max_conductor);
  if (plot->parsed() && format_opt->count() == 0) cfg.format = "csv";

  try {
    if (house->parsed()) return run_house(cfg);
    if (m->parsed()) return run_m(cfg);
    if (reproduce->parsed()) {
      if (!cfg.all_cases && cfg.input.empty()) {
        std::cerr << "cyclotome: reproduce needs a case id or --all\n";
        return kExitUsage;
      }
      return run_reproduce(cfg);
    }
    if (plot->parsed()) return run_plot_f(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "cyclotome: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "cyclotome: " << e.what() << "\n";
    return kExitClaimFailure;
  }
  return kExitUsage;
}

}  // namespace cyclotome
