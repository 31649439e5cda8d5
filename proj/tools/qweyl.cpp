#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "qweyl/cli/suites.hpp"
#include "qweyl/painleve/evolve.hpp"

using namespace qweyl;
using namespace qweyl::cli;

namespace {

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum affine Weyl group actions and q-Painleve flows"};
  app.require_subcommand(1);

  std::string suite, config_path, out, orders;
  std::optional<int> trials, qmax, cmax, retries;
  std::optional<std::uint64_t> seed;
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "run a named relation suite");
  verify->add_option("suite", suite, "one of: " + join(suite_names()))->required();
  verify->add_option("--orders", orders, "comma-separated root-of-unity orders");
  verify->add_option("--trials", trials, "trials per order")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--retries", retries, "resamples per singular trial")->check(CLI::NonNegativeNumber);
  verify->add_option("--qmax", qmax, "q-degree truncation for series suites")->check(CLI::PositiveNumber);
  verify->add_option("--cmax", cmax, "central-degree truncation for series suites")->check(CLI::PositiveNumber);
  verify->add_option("--out", out, "write the JSON report here");
  verify->add_option("--config", config_path, "key = value defaults, overridden by flags");
  verify->add_flag("--timing", timing, "record elapsed time in the report");

  std::string group, word, on;
  bool compact = false;
  auto* act = app.add_subcommand("act", "apply a group word to an expression");
  act->add_option("--group", group, "a2..a6, a2-classical.., b2, g2, d5")->required();
  act->add_option("--word", word, "letters, rightmost applied first")->required();
  act->add_option("--on", on, "expression")->required();
  act->add_flag("--compact", compact, "omit redundant parentheses");

  std::string flow, mode = "symbolic", evolve_out;
  int steps = 1, order = 7;
  std::uint64_t evolve_seed = 1;
  auto* evolve = app.add_subcommand("evolve", "iterate a discrete Painleve flow");
  evolve->add_option("flow", flow, "qp3 or qp6")->required()->check(CLI::IsMember({"qp3", "qp6"}));
  evolve->add_option("--steps", steps, "number of steps")->check(CLI::NonNegativeNumber);
  evolve->add_option("--mode", mode, "symbolic or numeric")->check(CLI::IsMember({"symbolic", "numeric"}));
  evolve->add_option("--order", order, "root-of-unity order for numeric mode")->check(CLI::Range(2, 64));
  evolve->add_option("--seed", evolve_seed, "random seed for numeric mode");
  evolve->add_option("--out", evolve_out, "write the trajectory here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*verify) {
      if (!is_suite(suite)) {
        std::cerr << "unknown suite '" << suite << "'; choose one of: " << join(suite_names()) << "\n";
        return kUsage;
      }
      RunConfig cfg;
      if (!config_path.empty()) apply_config_file(config_path, cfg);
      if (!orders.empty()) cfg.oracle.orders = parse_orders(orders);
      if (trials) cfg.oracle.trials = *trials;
      if (seed) cfg.oracle.seed = *seed;
      if (retries) cfg.oracle.retries = *retries;
      if (qmax) cfg.qmax = qmax;
      if (cmax) cfg.cmax = cmax;
      cfg.timing = cfg.timing || timing;
      SuiteReport r = run_suite(suite, cfg);
      std::cout << to_text(r);
      if (!out.empty() && !write_file(out, to_json(r).dump(2) + "\n")) {
        std::cerr << "cannot write '" << out << "'\n";
        return kUsage;
      }
      return exit_code(r);
    }
    if (*act) {
      std::cout << act_text(group, word, on, compact ? PrintStyle::Compact : PrintStyle::Parenthesized) << "\n";
      return kOk;
    }
    painleve::FlowSpec spec = flow == "qp3" ? painleve::qp3_flow() : painleve::qp6_flow();
    std::string text;
    if (mode == "symbolic") {
      for (const auto& st : painleve::evolve_symbolic(spec, steps)) {
        text += "step " + std::to_string(st.step) + "\n";
        for (const auto& [name, e] : st.images) text += "  " + name + " = " + to_string(e) + "\n";
      }
    } else {
      text = painleve::to_json_lines(painleve::evolve_numeric(spec, steps, order, evolve_seed));
    }
    if (evolve_out.empty()) {
      std::cout << text;
    } else if (!write_file(evolve_out, text)) {
      std::cerr << "cannot write '" << evolve_out << "'\n";
      return kUsage;
    }
    return kOk;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const AlgebraError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInconclusive;
  }
}
