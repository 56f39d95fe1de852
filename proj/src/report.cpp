#include "pcr/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "json.hpp"

namespace pcr {

namespace {

std::string fixed(double v, int precision) {
  if (v == 0) v = 0;  // no "-0.000000"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  return buf;
}

std::size_t display_width(const std::string& s) {
  std::size_t chars = 0;
  for (unsigned char c : s) chars += (c & 0xC0) != 0x80;
  return chars;
}

std::string check_output(const FusionResult<double>& r, const Model& model) {
  double sum = 0;
  for (const auto& [e, v] : r.masses) {
    if (v < -kPruneBelow) return "negative mass on " + to_string(e, model.frame());
    sum += v;
  }
  if (r.under_normalized)
    return "under-normalized: masses sum to " + fixed(sum, 6);
  if (std::fabs(sum - 1) > kSumTolerance) return "masses sum to " + fixed(sum, 9);
  return {};
}

RuleRun run_one(RuleId id, const MassMatrix<double>& matrix, const RuleOptions& options) {
  RuleRun run{id, rule_label(id, options), std::nullopt, {}, {}, 0};
  const auto start = std::chrono::steady_clock::now();
  try {
    run.result = combine(id, matrix, options);
    run.invalid = check_output(*run.result, matrix.fusion_model());
  } catch (const std::exception& e) {
    run.error = e.what();
  }
  run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return run;
}

std::vector<Element> all_elements(const std::vector<RuleRun>& runs) {
  std::set<Element> keys;
  for (const auto& r : runs)
    if (r.result)
      for (const auto& [e, v] : r.result->masses) keys.insert(e);
  return {keys.begin(), keys.end()};
}

std::string flags_of(const RuleRun& run) {
  std::vector<std::string> notes;
  if (!run.error.empty()) notes.push_back("error: " + run.error);
  if (!run.invalid.empty()) notes.push_back(run.invalid);
  if (run.result) {
    const auto& r = *run.result;
    if (r.void_problem) notes.push_back("void problem: all mass on the empty set");
    if (r.order_dependent) {
      std::string o = "order-dependent";
      if (!r.order.empty()) {
        o += ", order";
        for (auto i : r.order) o += " " + std::to_string(i + 1);
      }
      notes.push_back(o);
    }
    std::map<std::string, int> counts;
    for (const auto& ev : r.events) ++counts[to_string(ev.kind)];
    for (const auto& [k, n] : counts)
      notes.push_back(std::to_string(n) + " transfer(s) to " + k);
  }
  std::string out;
  for (const auto& n : notes) out += (out.empty() ? "" : "; ") + n;
  return out;
}

void write_table(std::ostringstream& os, const std::vector<RuleRun>& runs, const Model& model,
                 int precision, bool timing) {
  const auto keys = all_elements(runs);
  std::size_t label_w = std::string("element").size();
  for (const auto& e : keys) label_w = std::max(label_w, display_width(to_string(e, model.frame())));
  std::vector<std::size_t> widths;
  for (const auto& r : runs)
    widths.push_back(std::max<std::size_t>(r.label.size(), static_cast<std::size_t>(precision) + 3));

  auto cell = [&](const std::string& s, std::size_t w, bool left = false) {
    std::string pad(w > s.size() ? w - s.size() : 0, ' ');
    os << (left ? s + pad : pad + s);
  };
  // Labels may contain multi-byte characters; pad by display width.
  auto label_cell = [&](const std::string& s) {
    const std::size_t chars = display_width(s);
    os << s << std::string(label_w > chars ? label_w - chars : 0, ' ');
  };

  label_cell("element");
  for (std::size_t i = 0; i < runs.size(); ++i) {
    os << "  ";
    cell(runs[i].label, widths[i]);
  }
  os << '\n';
  for (const auto& e : keys) {
    label_cell(to_string(e, model.frame()));
    for (std::size_t i = 0; i < runs.size(); ++i) {
      os << "  ";
      std::string v = "-";
      if (runs[i].result) {
        auto it = runs[i].result->masses.find(e);
        if (it != runs[i].result->masses.end()) v = fixed(it->second, precision);
      }
      cell(v, widths[i]);
    }
    os << '\n';
  }
  label_cell("k");
  for (std::size_t i = 0; i < runs.size(); ++i) {
    os << "  ";
    cell(runs[i].result ? fixed(runs[i].result->conflict, precision) : "n/a", widths[i]);
  }
  os << '\n';
  if (timing) {
    label_cell("seconds");
    for (std::size_t i = 0; i < runs.size(); ++i) {
      os << "  ";
      cell(fixed(runs[i].seconds, precision), widths[i]);
    }
    os << '\n';
  }
  for (const auto& r : runs) {
    const std::string f = flags_of(r);
    if (!f.empty()) os << "  " << r.label << ": " << f << '\n';
  }
}

nlohmann::ordered_json run_json(const RuleRun& run, const Model& model, bool timing) {
  nlohmann::ordered_json j;
  const auto& frame = model.frame();
  j["rule"] = run.label;
  if (!run.error.empty()) j["error"] = run.error;
  if (run.result) {
    const auto& r = *run.result;
    auto masses = nlohmann::ordered_json::object();
    for (const auto& [e, v] : r.masses) masses[to_string(e, frame)] = v;
    j["masses"] = masses;
    j["conflict"] = r.conflict;
    auto partial = nlohmann::ordered_json::object();
    for (const auto& [e, v] : r.partial) partial[to_string(e, frame)] = v;
    j["partial_conflicts"] = partial;
    auto transfers = nlohmann::ordered_json::array();
    for (const auto& t : r.transfers)
      transfers.push_back({{"from", to_string(t.from, frame)},
                           {"to", to_string(t.to, frame)},
                           {"mass", t.mass},
                           {"K", t.K}});
    j["transfers"] = transfers;
    auto events = nlohmann::ordered_json::array();
    for (const auto& ev : r.events)
      events.push_back({{"kind", to_string(ev.kind)},
                        {"from", to_string(ev.from, frame)},
                        {"to", to_string(ev.to, frame)}});
    j["fallback_events"] = events;
    j["under_normalized"] = r.under_normalized;
    j["void_problem"] = r.void_problem;
    j["order_dependent"] = r.order_dependent;
    if (!r.order.empty()) {
      auto order = nlohmann::ordered_json::array();
      for (auto i : r.order) order.push_back(i + 1);
      j["order"] = order;
    }
  }
  j["valid"] = run.error.empty() && run.invalid.empty();
  if (!run.invalid.empty()) j["invalid"] = run.invalid;
  if (timing) j["seconds"] = run.seconds;
  return j;
}

}  // namespace

bool Report::failed() const {
  for (const auto& r : runs)
    if (!r.error.empty()) return true;
  for (const auto& t : trajectories)
    for (const auto& r : t)
      if (!r.error.empty()) return true;
  return false;
}

std::string rule_label(RuleId id, const RuleOptions& options) {
  std::string name = rule_name(id);
  switch (id) {
    case RuleId::MinC: return name + (options.minc == MincVersion::A ? "(a)" : "(b)");
    case RuleId::Wao: return name + (options.wao == WaoMode::Static ? "(static)" : "(dynamic)");
    case RuleId::Pcr5: return options.pcr5 == Pcr5Variant::Approximate ? name + "(approx)" : name;
    default: return name;
  }
}

Report run_scenario(const Scenario& sc, const std::vector<RuleId>& rules,
                    const RuleOptions& options) {
  Report report;
  report.scenario = sc.name;
  report.model = sc.model;
  report.sources = sc.sources.size();
  const auto matrix = make_matrix(sc.sources, sc.model);
  for (auto id : rules) report.runs.push_back(run_one(id, matrix, options));
  return report;
}

Report sequential_fusion(const Scenario& sc, const std::vector<RuleId>& rules,
                         const RuleOptions& options) {
  Report report;
  report.scenario = sc.name;
  report.model = sc.model;
  std::vector<Bba> sequence = sc.sources;
  sequence.insert(sequence.end(), sc.stream.begin(), sc.stream.end());
  report.sources = sequence.size();
  if (sequence.size() < 2) throw ScenarioError(sc.name + ": sequential mode needs at least two bbas");
  for (auto id : rules) {
    std::vector<RuleRun> trajectory;
    Bba prior = sequence.front();
    for (std::size_t i = 1; i < sequence.size(); ++i) {
      RuleOptions step = options;
      step.order.clear();
      auto run = run_one(id, make_matrix({prior, sequence[i]}, sc.model), step);
      const bool stop = !run.result || !run.error.empty();
      if (!stop) prior = Bba(sc.model, run.result->masses);
      trajectory.push_back(std::move(run));
      if (stop) break;
    }
    report.trajectories.push_back(std::move(trajectory));
  }
  return report;
}

void compare_rules(Report& report) {
  const auto& runs = report.runs;
  const std::size_t n = runs.size();
  report.max_diff.assign(n, std::vector<double>(n, 0.0));
  report.coincide.clear();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double d = std::nan("");
      if (runs[i].result && runs[j].result) {
        d = 0;
        std::set<Element> keys;
        for (const auto& [e, v] : runs[i].result->masses) keys.insert(e);
        for (const auto& [e, v] : runs[j].result->masses) keys.insert(e);
        for (const auto& e : keys)
          d = std::max(d, std::fabs(runs[i].result->mass(e) - runs[j].result->mass(e)));
        if (d <= kCoincideTolerance) report.coincide.emplace_back(i, j);
      }
      report.max_diff[i][j] = report.max_diff[j][i] = d;
    }
}

std::string format_table(const Report& report, int precision, bool timing) {
  std::ostringstream os;
  const Model& model = *report.model;
  static const char* kinds[] = {"free", "shafer", "hybrid"};
  os << "scenario: " << report.scenario << '\n';
  os << "frame:";
  for (const auto& l : model.frame().labels()) os << ' ' << l;
  os << "\nmodel: " << kinds[static_cast<int>(model.kind())]
     << (model.world() == Model::World::Open ? ", open world" : ", closed world");
  if (!model.constraints().empty()) {
    os << ", empty:";
    for (const auto& c : model.constraints()) os << ' ' << to_string(c, model.frame());
  }
  if (model.closure()) os << ", theta0 closure";
  os << "\nsources: " << report.sources << "\n\n";

  if (!report.trajectories.empty()) {
    for (const auto& traj : report.trajectories) {
      if (traj.empty()) continue;
      os << "rule " << traj.front().label << '\n';
      std::vector<RuleRun> steps = traj;
      for (std::size_t i = 0; i < steps.size(); ++i) steps[i].label = "step" + std::to_string(i + 1);
      write_table(os, steps, model, precision, timing);
      os << '\n';
    }
    return os.str();
  }

  write_table(os, report.runs, model, precision, timing);
  if (!report.max_diff.empty()) {
    os << "\nmax |difference|\n";
    std::size_t w = static_cast<std::size_t>(precision) + 3;
    for (const auto& r : report.runs) w = std::max(w, r.label.size());
    os << std::string(w, ' ');
    for (const auto& r : report.runs) os << "  " << std::string(w - r.label.size(), ' ') << r.label;
    os << '\n';
    for (std::size_t i = 0; i < report.runs.size(); ++i) {
      const auto& l = report.runs[i].label;
      os << l << std::string(w - l.size(), ' ');
      for (std::size_t j = 0; j < report.runs.size(); ++j) {
        const double d = report.max_diff[i][j];
        std::string v = std::isnan(d) ? "n/a" : fixed(d, precision);
        os << "  " << std::string(w > v.size() ? w - v.size() : 0, ' ') << v;
      }
      os << '\n';
    }
    os << "\ncoinciding rules (within 1e-9):";
    if (report.coincide.empty()) os << " none";
    os << '\n';
    for (const auto& [i, j] : report.coincide)
      os << "  " << report.runs[i].label << " = " << report.runs[j].label << '\n';
  }
  return os.str();
}

std::string format_machine(const Report& report, bool timing) {
  nlohmann::ordered_json j;
  const Model& model = *report.model;
  j["scenario"] = report.scenario;
  j["frame"] = model.frame().labels();
  j["sources"] = report.sources;
  auto runs = nlohmann::ordered_json::array();
  for (const auto& r : report.runs) runs.push_back(run_json(r, model, timing));
  j["rules"] = runs;
  if (!report.trajectories.empty()) {
    auto trajs = nlohmann::ordered_json::array();
    for (const auto& t : report.trajectories) {
      auto steps = nlohmann::ordered_json::array();
      for (const auto& r : t) steps.push_back(run_json(r, model, timing));
      trajs.push_back({{"rule", t.empty() ? "" : t.front().label}, {"steps", steps}});
    }
    j["trajectories"] = trajs;
  }
  if (!report.max_diff.empty()) {
    auto pairs = nlohmann::ordered_json::array();
    for (const auto& [a, b] : report.coincide)
      pairs.push_back({report.runs[a].label, report.runs[b].label});
    j["coinciding"] = pairs;
    auto md = nlohmann::ordered_json::array();
    for (const auto& row : report.max_diff) {
      auto jr = nlohmann::ordered_json::array();
      for (double d : row) jr.push_back(std::isnan(d) ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(d));
      md.push_back(jr);
    }
    j["max_abs_difference"] = md;
  }
  return j.dump(2) + '\n';
}

}  // namespace pcr
