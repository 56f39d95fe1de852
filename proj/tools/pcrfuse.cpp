// Command-line front end: runs combination rules over a JSON scenario file.

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pcr/report.hpp"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitComputation = 3;

std::vector<std::size_t> parse_order(const std::string& text, std::size_t sources) {
  std::vector<std::size_t> order;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    long v = -1;
    try {
      v = std::stol(item, &pos);
    } catch (const std::exception&) {
    }
    if (v < 1 || pos != item.size() || static_cast<std::size_t>(v) > sources)
      throw pcr::ScenarioError("--order: '" + item + "' is not a source index in 1.." +
                               std::to_string(sources));
    order.push_back(static_cast<std::size_t>(v - 1));
  }
  return order;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combine belief assignments with classic and PCR fusion rules"};
  std::string path;
  std::vector<std::string> rule_names;
  bool all = false, sequential = false, compare = false, timing = false;
  std::string minc_version, wao_mode, pcr5_variant, order, format = "table", arithmetic = "auto";
  int precision = 6;

  app.add_option("scenario", path, "Scenario JSON file")->required();
  app.add_option("--rule", rule_names, "Rule to run (repeatable)");
  app.add_flag("--all", all, "Run every rule in the registry");
  app.add_flag("--sequential", sequential, "Fold sources and stream one observation at a time");
  app.add_flag("--compare", compare, "Add pairwise differences and coinciding rules");
  app.add_option("--minc-version", minc_version, "minC version")->check(CLI::IsMember({"a", "b"}));
  app.add_option("--wao-mode", wao_mode, "WAO weighting")->check(CLI::IsMember({"static", "dynamic"}));
  app.add_option("--pcr5", pcr5_variant, "PCR5 variant")->check(CLI::IsMember({"exact", "approx"}));
  app.add_option("--order", order, "Source order for PCR5-approximate, e.g. 1,2,3");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "machine"}));
  app.add_option("--precision", precision, "Decimals in the table")->check(CLI::Range(1, 15));
  app.add_option("--arithmetic", arithmetic, "Number type")
      ->check(CLI::IsMember({"auto", "double", "exact"}));
  app.add_flag("--timing", timing, "Report per-rule run time");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    pcr::Scenario sc = pcr::load_scenario(path);
    pcr::RuleOptions options = sc.options;
    if (!minc_version.empty())
      options.minc = minc_version == "a" ? pcr::MincVersion::A : pcr::MincVersion::B;
    if (!wao_mode.empty())
      options.wao = wao_mode == "static" ? pcr::WaoMode::Static : pcr::WaoMode::Dynamic;
    if (!pcr5_variant.empty())
      options.pcr5 = pcr5_variant == "exact" ? pcr::Pcr5Variant::Exact : pcr::Pcr5Variant::Approximate;
    if (!order.empty()) options.order = parse_order(order, sc.sources.size());
    if (!options.order.empty() && options.order.size() != sc.sources.size())
      throw pcr::ScenarioError("--order must list every source exactly once");
    options.arithmetic = arithmetic == "double"  ? pcr::Arithmetic::Double
                         : arithmetic == "exact" ? pcr::Arithmetic::Exact
                                                 : pcr::Arithmetic::Auto;

    std::vector<pcr::RuleId> rules;
    if (all) {
      for (const auto& r : pcr::rule_registry()) rules.push_back(r.id);
    } else if (!rule_names.empty()) {
      for (const auto& n : rule_names) {
        auto id = pcr::rule_from_name(n);
        if (!id) throw pcr::ScenarioError("unknown rule '" + n + "'");
        rules.push_back(*id);
      }
    } else {
      rules = sc.rules;
    }
    if (rules.empty()) throw pcr::ScenarioError("no rule selected (use --rule, --all or \"rules\")");

    pcr::Report report = sequential ? pcr::sequential_fusion(sc, rules, options)
                                    : pcr::run_scenario(sc, rules, options);
    if (compare && !sequential) pcr::compare_rules(report);
    std::cout << (format == "machine" ? pcr::format_machine(report, timing)
                                      : pcr::format_table(report, precision, timing));
    return report.failed() ? kExitComputation : 0;
  } catch (const pcr::ScenarioError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
}
