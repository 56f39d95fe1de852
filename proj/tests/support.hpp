#pragma once

#include <cmath>
#include <initializer_list>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pcr/engine.hpp"

namespace pcr::test {

using Masses = std::vector<std::pair<std::string, double>>;

inline Frame frame_of(std::initializer_list<const char*> labels) {
  return Frame(std::vector<std::string>(labels.begin(), labels.end()));
}

inline ModelPtr shafer(std::initializer_list<const char*> labels,
                       std::initializer_list<const char*> empty = {}) {
  Frame f = frame_of(labels);
  std::vector<Element> c;
  for (const char* e : empty) c.push_back(free_form(parse_expr(e, f)));
  return std::make_shared<const Model>(f, Model::Kind::Shafer, c);
}

inline ModelPtr free_model(std::initializer_list<const char*> labels) {
  return std::make_shared<const Model>(frame_of(labels), Model::Kind::Free);
}

inline ModelPtr hybrid(std::initializer_list<const char*> labels,
                       std::initializer_list<const char*> empty) {
  Frame f = frame_of(labels);
  std::vector<Element> c;
  for (const char* e : empty) c.push_back(free_form(parse_expr(e, f)));
  return std::make_shared<const Model>(f, Model::Kind::Hybrid, c);
}

inline Element el(const Model& m, const std::string& text) { return parse_element(text, m); }

inline Bba bba(const ModelPtr& m, const Masses& masses) {
  return validate_bba(Bba::from_exprs(m, masses));
}

inline MassMatrix<double> matrix(const ModelPtr& m, std::initializer_list<Masses> sources,
                                 ModelPtr source_model = nullptr) {
  if (!source_model) source_model = m;
  std::vector<Bba> b;
  for (const auto& s : sources) b.push_back(bba(source_model, s));
  return make_matrix(b, m);
}

inline MassMatrix<Rational> exact(const MassMatrix<double>& m) {
  return convert_matrix<Rational>(m);
}

/// Canonical rational num/den (gmp compares only canonical values).
inline Rational ratio(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline double mass(const FusionResult<double>& r, const Model& m, const std::string& e) {
  return r.mass(el(m, e));
}

/// Random bba with masses on a grid of 1/1000, so the exact path applies.
class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  /// Focal elements drawn from the power set (single clauses) of the frame.
  std::map<Element, double> power_set_bba(const Model& model, int max_focal = 4) {
    const Mask full = model.frame().full_mask();
    const int focal = uniform(1, max_focal);
    std::vector<Element> picks;
    for (int i = 0; i < focal; ++i) picks.push_back(Element::clause(static_cast<Mask>(uniform(1, static_cast<int>(full)))));
    return spread(model, picks);
  }

  /// Focal elements drawn from the hyper-power set via random expressions.
  std::map<Element, double> hyper_bba(const Model& model, int max_focal = 4) {
    const int focal = uniform(1, max_focal);
    std::vector<Element> picks;
    for (int i = 0; i < focal; ++i) picks.push_back(random_element(static_cast<int>(model.frame().size()), 2));
    return spread(model, picks);
  }

  Element random_element(int n, int depth) {
    if (depth == 0 || uniform(0, 2) == 0) return Element::singleton(uniform(0, n - 1));
    Element a = random_element(n, depth - 1), b = random_element(n, depth - 1);
    return uniform(0, 1) ? free_meet(a, b) : free_join(a, b);
  }

 private:
  std::map<Element, double> spread(const Model& model, const std::vector<Element>& picks) {
    std::vector<Element> live;
    for (const auto& p : picks) {
      Element c = model.canonical(p);
      if (!c.empty()) live.push_back(c);
    }
    if (live.empty()) live.push_back(model.total_ignorance());
    // Split 1000 units among the picks, each getting at least one.
    std::vector<int> cuts{0, 1000};
    for (std::size_t i = 1; i < live.size(); ++i) cuts.push_back(uniform(1, 999));
    std::sort(cuts.begin(), cuts.end());
    std::map<Element, double> out;
    for (std::size_t i = 0; i < live.size(); ++i) {
      const int units = cuts[i + 1] - cuts[i];
      if (units > 0) out[live[i]] += units / 1000.0;
    }
    if (out.empty()) out[live[0]] = 1.0;
    return out;
  }

  std::mt19937_64 rng_;
};

inline MassMatrix<double> random_matrix(Generator& g, const ModelPtr& model, std::size_t s,
                                        bool hyper = false) {
  std::vector<std::map<Element, double>> rows;
  for (std::size_t i = 0; i < s; ++i)
    rows.push_back(hyper ? g.hyper_bba(*model) : g.power_set_bba(*model));
  return make_matrix<double>(model, rows);
}

inline double max_abs_diff(const std::map<Element, double>& a, const std::map<Element, double>& b) {
  double d = 0;
  for (const auto& [e, v] : a) {
    auto it = b.find(e);
    d = std::max(d, std::fabs(v - (it == b.end() ? 0.0 : it->second)));
  }
  for (const auto& [e, v] : b)
    if (!a.count(e)) d = std::max(d, std::fabs(v));
  return d;
}

/// Empty when every expected mass is within `tol` and nothing else carries
/// more than `tol`; otherwise a readable list of the differences.
inline std::string mismatch(const std::map<Element, double>& got, const Model& m,
                            const Masses& want, double tol) {
  std::ostringstream os;
  std::map<Element, double> expected;
  for (const auto& [text, v] : want) expected[el(m, text)] += v;
  for (const auto& [e, v] : expected) {
    auto it = got.find(e);
    const double g = it == got.end() ? 0.0 : it->second;
    if (std::fabs(g - v) > tol) os << to_string(e, m.frame()) << ": got " << g << " want " << v << "; ";
  }
  for (const auto& [e, v] : got)
    if (!expected.count(e) && std::fabs(v) > tol)
      os << to_string(e, m.frame()) << ": unexpected " << v << "; ";
  return os.str();
}

inline std::string mismatch(const FusionResult<double>& r, const Model& m, const Masses& want,
                            double tol) {
  return mismatch(r.masses, m, want, tol);
}

}  // namespace pcr::test
