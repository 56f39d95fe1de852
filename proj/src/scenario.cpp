#include "pcr/scenario.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace pcr {

namespace {

using json = nlohmann::json;

[[noreturn]] void fail(const std::string& name, const std::string& where, const std::string& msg) {
  throw ScenarioError(name + ": " + where + ": " + msg);
}

std::string line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

ModelPtr parse_model(const json& j, const Frame& frame, const std::string& name,
                     const std::string& where) {
  if (!j.is_object()) fail(name, where, "expected an object");
  const std::string kind = j.value("kind", "shafer");
  Model::Kind k;
  if (kind == "shafer")
    k = Model::Kind::Shafer;
  else if (kind == "free")
    k = Model::Kind::Free;
  else if (kind == "hybrid")
    k = Model::Kind::Hybrid;
  else
    fail(name, where + ".kind", "unknown model kind '" + kind + "'");

  const std::string world = j.value("world", "closed");
  if (world != "closed" && world != "open")
    fail(name, where + ".world", "expected 'closed' or 'open'");

  std::vector<Element> constraints;
  if (j.contains("empty")) {
    const auto& list = j.at("empty");
    if (!list.is_array()) fail(name, where + ".empty", "expected an array of expressions");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string at = where + ".empty[" + std::to_string(i) + "]";
      if (!list[i].is_string()) fail(name, at, "expected a string");
      try {
        constraints.push_back(free_form(parse_expr(list[i].get<std::string>(), frame)));
      } catch (const ParseError& e) {
        fail(name, at, e.what());
      }
    }
  }
  try {
    return std::make_shared<const Model>(frame, k, std::move(constraints),
                                         world == "open" ? Model::World::Open : Model::World::Closed,
                                         j.value("theta0", false));
  } catch (const ModelError& e) {
    fail(name, where, e.what());
  }
}

Bba parse_bba(const json& j, const ModelPtr& model, const std::string& name,
              const std::string& where) {
  if (!j.is_object()) fail(name, where, "expected an object of expression: mass pairs");
  std::vector<std::pair<std::string, double>> masses;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_number()) fail(name, where + "." + key, "mass must be a number");
    masses.emplace_back(key, value.get<double>());
  }
  try {
    return validate_bba(Bba::from_exprs(model, masses));
  } catch (const ParseError& e) {
    fail(name, where, e.what());
  } catch (const BbaError& e) {
    fail(name, where, e.what());
  }
}

}  // namespace

Scenario parse_scenario(const std::string& text, const std::string& name) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ScenarioError(name + ": " + line_col(text, e.byte) + ": invalid JSON");
  }
  if (!doc.is_object()) fail(name, "document", "expected a JSON object");

  Scenario sc;
  sc.name = name;
  try {
    if (!doc.contains("frame") || !doc.at("frame").is_array())
      fail(name, "frame", "expected an array of labels");
    std::vector<std::string> labels;
    for (const auto& l : doc.at("frame")) {
      if (!l.is_string()) fail(name, "frame", "labels must be strings");
      labels.push_back(l.get<std::string>());
    }
    Frame frame = [&] {
      try {
        return Frame(labels);
      } catch (const ModelError& e) {
        fail(name, "frame", e.what());
      }
    }();

    sc.model = parse_model(doc.value("model", json::object()), frame, name, "model");
    sc.source_model = doc.contains("source_model")
                          ? parse_model(doc.at("source_model"), frame, name, "source_model")
                          : sc.model;

    if (!doc.contains("sources") || !doc.at("sources").is_array() || doc.at("sources").empty())
      fail(name, "sources", "expected a non-empty array of mass tables");
    const auto& sources = doc.at("sources");
    for (std::size_t i = 0; i < sources.size(); ++i)
      sc.sources.push_back(
          parse_bba(sources[i], sc.source_model, name, "sources[" + std::to_string(i) + "]"));

    if (doc.contains("stream")) {
      const auto& stream = doc.at("stream");
      if (!stream.is_array()) fail(name, "stream", "expected an array of mass tables");
      for (std::size_t i = 0; i < stream.size(); ++i)
        sc.stream.push_back(
            parse_bba(stream[i], sc.source_model, name, "stream[" + std::to_string(i) + "]"));
    }

    if (doc.contains("rules")) {
      const auto& rules = doc.at("rules");
      if (!rules.is_array()) fail(name, "rules", "expected an array of rule names");
      for (const auto& r : rules) {
        if (!r.is_string()) fail(name, "rules", "rule names must be strings");
        auto id = rule_from_name(r.get<std::string>());
        if (!id) fail(name, "rules", "unknown rule '" + r.get<std::string>() + "'");
        sc.rules.push_back(*id);
      }
    }

    if (doc.contains("options")) {
      const auto& o = doc.at("options");
      const std::string minc = o.value("minc", "a");
      if (minc != "a" && minc != "b") fail(name, "options.minc", "expected 'a' or 'b'");
      sc.options.minc = minc == "a" ? MincVersion::A : MincVersion::B;
      const std::string wao = o.value("wao", "static");
      if (wao != "static" && wao != "dynamic")
        fail(name, "options.wao", "expected 'static' or 'dynamic'");
      sc.options.wao = wao == "static" ? WaoMode::Static : WaoMode::Dynamic;
      const std::string pcr5 = o.value("pcr5", "exact");
      if (pcr5 != "exact" && pcr5 != "approx")
        fail(name, "options.pcr5", "expected 'exact' or 'approx'");
      sc.options.pcr5 = pcr5 == "exact" ? Pcr5Variant::Exact : Pcr5Variant::Approximate;
      if (o.contains("order")) {
        for (const auto& i : o.at("order")) {
          if (!i.is_number_integer() || i.get<long>() < 1 ||
              i.get<std::size_t>() > sc.sources.size())
            fail(name, "options.order", "expected 1-based source indices");
          sc.options.order.push_back(i.get<std::size_t>() - 1);
        }
      }
    }
  } catch (const json::exception& e) {
    fail(name, "document", e.what());
  }
  return sc;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str(), path);
}

}  // namespace pcr
