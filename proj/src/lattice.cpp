#include "pcr/lattice.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <set>

namespace pcr {

namespace {

std::vector<Mask> absorb(std::vector<Mask> clauses) {
  std::sort(clauses.begin(), clauses.end());
  clauses.erase(std::unique(clauses.begin(), clauses.end()), clauses.end());
  std::vector<Mask> kept;
  kept.reserve(clauses.size());
  for (Mask c : clauses) {
    bool absorbed = std::any_of(clauses.begin(), clauses.end(),
                                [c](Mask d) { return d != c && (d & ~c) == 0; });
    if (!absorbed) kept.push_back(c);
  }
  return kept;
}

Mask clause_meet(const std::vector<Mask>& clauses) {
  Mask m = ~Mask{0};
  for (Mask c : clauses) m &= c;
  return m;
}

}  // namespace

Frame::Frame(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw ModelError("frame must contain at least one label");
  if (labels_.size() > static_cast<std::size_t>(kMaxPowerSetLabels))
    throw ModelError("frame has more than 16 labels");
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw ModelError("empty label");
    if (!seen.insert(l).second) throw ModelError("duplicate label '" + l + "'");
  }
}

int Frame::index_of(std::string_view label) const noexcept {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  return -1;
}

SetExpr SetExpr::join(SetExpr a, SetExpr b) {
  SetExpr e{Kind::Union, -1, {}};
  e.operands.push_back(std::move(a));
  e.operands.push_back(std::move(b));
  return e;
}

SetExpr SetExpr::meet(SetExpr a, SetExpr b) {
  SetExpr e{Kind::Intersection, -1, {}};
  e.operands.push_back(std::move(a));
  e.operands.push_back(std::move(b));
  return e;
}

Element::Element(std::vector<Mask> clauses) : clauses_(absorb(std::move(clauses))) {
  if (std::find(clauses_.begin(), clauses_.end(), Mask{0}) != clauses_.end())
    clauses_.clear();  // an empty clause makes the whole element void
}

Element Element::clause(Mask m) { return Element(std::vector<Mask>{m}); }

Element Element::closure() { return clause(kClosureBit); }

Mask Element::support() const noexcept {
  Mask m = 0;
  for (Mask c : clauses_) m |= c;
  return m;
}

Element free_meet(const Element& a, const Element& b) {
  if (a.is_void() || b.is_void()) return Element();
  if (a.is_closure() || b.is_closure())
    return a.is_closure() && b.is_closure() ? a : Element();
  std::vector<Mask> c = a.clauses();
  c.insert(c.end(), b.clauses().begin(), b.clauses().end());
  return Element(std::move(c));
}

Element free_join(const Element& a, const Element& b) {
  if (a.is_void()) return Element(b.clauses());
  if (b.is_void()) return Element(a.clauses());
  std::vector<Mask> c;
  c.reserve(a.clauses().size() * b.clauses().size());
  for (Mask x : a.clauses())
    for (Mask y : b.clauses()) c.push_back(x | y);
  return Element(std::move(c));
}

bool free_leq(const Element& a, const Element& b) {
  if (a.is_void()) return true;
  if (b.is_void()) return false;
  return std::all_of(b.clauses().begin(), b.clauses().end(), [&](Mask d) {
    return std::any_of(a.clauses().begin(), a.clauses().end(),
                       [d](Mask c) { return (c & ~d) == 0; });
  });
}

Element free_form(const SetExpr& expr) {
  switch (expr.kind) {
    case SetExpr::Kind::Label:
      return Element::singleton(expr.label);
    case SetExpr::Kind::Union: {
      Element acc = free_form(expr.operands.at(0));
      for (std::size_t i = 1; i < expr.operands.size(); ++i)
        acc = free_join(acc, free_form(expr.operands[i]));
      return acc;
    }
    case SetExpr::Kind::Intersection: {
      Element acc = free_form(expr.operands.at(0));
      for (std::size_t i = 1; i < expr.operands.size(); ++i)
        acc = free_meet(acc, free_form(expr.operands[i]));
      return acc;
    }
  }
  return Element();
}

Model::Model(Frame frame, Kind kind, std::vector<Element> constraints, World world,
             bool closure)
    : frame_(std::move(frame)),
      kind_(kind),
      world_(world),
      closure_(closure) {
  const int n = static_cast<int>(frame_.size());
  if (kind_ != Kind::Shafer && n > kMaxHyperPowerSetLabels)
    throw ModelError("hyper-power-set models support at most 6 labels");
  if (kind_ == Kind::Free && !constraints.empty())
    throw ModelError("the free model has no constraints");
  for (auto& c : constraints) {
    if (c.is_void() || c.is_closure() || (c.support() & ~frame_.full_mask()) != 0)
      throw ModelError("constraint is not an element of the frame");
    constraints_.push_back(Element(c.clauses()));
  }
  std::sort(constraints_.begin(), constraints_.end());
  constraints_.erase(std::unique(constraints_.begin(), constraints_.end()),
                     constraints_.end());

  if (kind_ == Kind::Shafer) {
    alive_ = frame_.full_mask();
    for (const auto& c : constraints_) alive_ &= ~clause_meet(c.clauses());
  } else {
    const std::uint64_t count = std::uint64_t{1} << n;
    admissible_ = (count == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1) &
                  ~std::uint64_t{1};
    for (const auto& c : constraints_) admissible_ &= ~regions_of(c);
  }
}

std::uint64_t Model::regions_of(const Element& e) const {
  if (e.is_void() || e.is_closure()) return 0;
  std::uint64_t bits = 0;
  const Mask count = Mask{1} << frame_.size();
  for (Mask r = 1; r < count; ++r) {
    bool inside = std::all_of(e.clauses().begin(), e.clauses().end(),
                              [r](Mask c) { return (c & r) != 0; });
    if (inside) bits |= std::uint64_t{1} << r;
  }
  return bits;
}

bool Model::is_empty(const Element& e) const {
  if (e.is_void()) return true;
  if (e.is_closure()) return false;
  if (kind_ == Kind::Shafer) return (clause_meet(e.clauses()) & alive_) == 0;
  return (regions_of(e) & admissible_) == 0;
}

Element Model::canonical(const Element& free_element) const {
  Element e(free_element.clauses());
  if (e.is_void() || e.is_closure()) return e;
  if (is_empty(e)) {
    e.empty_ = true;
    return e;
  }
  if (kind_ == Kind::Shafer) return Element::clause(clause_meet(e.clauses()) & alive_);
  if (kind_ == Kind::Free) return e;

  // Least element with the same admissible regions: the up-closure of the
  // admissible part, written back as its prime implicates.
  const int n = static_cast<int>(frame_.size());
  const Mask count = Mask{1} << n;
  std::uint64_t up = regions_of(e) & admissible_;
  for (int b = 0; b < n; ++b)
    for (Mask r = 1; r < count; ++r)
      if ((r >> b & 1) && (up >> (r ^ (Mask{1} << b)) & 1)) up |= std::uint64_t{1} << r;
  std::vector<Mask> clauses;
  for (Mask f = 0; f < count; ++f) {
    if (up >> f & 1) continue;
    bool maximal = true;
    for (int b = 0; b < n && maximal; ++b)
      if (!(f >> b & 1) && !(up >> (f | (Mask{1} << b)) & 1)) maximal = false;
    if (maximal) clauses.push_back(frame_.full_mask() & ~f);
  }
  return Element(std::move(clauses));
}

Element Model::fallback(Mask u) const {
  if (u != 0) {
    Element d = canonical(Element::clause(u));
    if (!d.empty()) return d;
  }
  Element it = total_ignorance();
  if (!it.empty()) return it;
  return void_target();
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Frame& frame) : text_(text), frame_(frame) {}

  SetExpr parse() {
    SetExpr e = parse_union();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return e;
  }

 private:
  static bool is_label_char(unsigned char c) {
    return std::isalnum(c) || c == '_' || c >= 0x80;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(ParseError::Kind::SyntaxError, pos_,
                     msg + " at offset " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  SetExpr parse_union() {
    SetExpr e = parse_intersection();
    while (accept('|')) e = SetExpr::join(std::move(e), parse_intersection());
    return e;
  }

  SetExpr parse_intersection() {
    SetExpr e = parse_primary();
    while (accept('&')) e = SetExpr::meet(std::move(e), parse_primary());
    return e;
  }

  SetExpr parse_primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    if (accept('(')) {
      SetExpr e = parse_union();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_label_char(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a label");
    std::string_view name = text_.substr(start, pos_ - start);
    int idx = frame_.index_of(name);
    if (idx < 0)
      throw ParseError(ParseError::Kind::UnknownLabel, start,
                       "unknown label '" + std::string(name) + "' at offset " +
                           std::to_string(start));
    return SetExpr::leaf(idx);
  }

  std::string_view text_;
  const Frame& frame_;
  std::size_t pos_ = 0;
};

std::string clause_string(Mask c, const Frame& frame) {
  std::string out;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    if (!(c >> i & 1)) continue;
    if (!out.empty()) out += '|';
    out += frame.label(i);
  }
  return out;
}

}  // namespace

SetExpr parse_expr(std::string_view text, const Frame& frame) {
  return Parser(text, frame).parse();
}

Element canonical_form(const SetExpr& expr, const Model& model) {
  return model.canonical(expr);
}

Element disjunctive_form(const SetExpr& expr) {
  return Element::clause(free_form(expr).support());
}

bool is_empty(const Element& e, const Model& model) { return model.is_empty(e); }

std::string to_string(const Element& e, const Frame& frame) {
  if (e.is_void()) return "∅";
  if (e.is_closure()) return "θ0";
  std::string out;
  const bool many = e.clauses().size() > 1;
  for (Mask c : e.clauses()) {
    if (!out.empty()) out += '&';
    const bool wrap = many && std::popcount(c) > 1;
    if (wrap) out += '(';
    out += clause_string(c, frame);
    if (wrap) out += ')';
  }
  return out;
}

std::string to_string(const SetExpr& e, const Frame& frame) {
  switch (e.kind) {
    case SetExpr::Kind::Label:
      return frame.label(static_cast<std::size_t>(e.label));
    case SetExpr::Kind::Union: {
      std::string out;
      for (const auto& o : e.operands) {
        if (!out.empty()) out += '|';
        out += to_string(o, frame);
      }
      return out;
    }
    case SetExpr::Kind::Intersection: {
      std::string out;
      for (const auto& o : e.operands) {
        if (!out.empty()) out += '&';
        const bool wrap = o.kind == SetExpr::Kind::Union;
        out += wrap ? "(" + to_string(o, frame) + ")" : to_string(o, frame);
      }
      return out;
    }
  }
  return {};
}

}  // namespace pcr
