#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pcr {

using Mask = std::uint32_t;

inline constexpr int kMaxPowerSetLabels = 16;
inline constexpr int kMaxHyperPowerSetLabels = 6;
// Reserved bit for the closure hypothesis theta0, outside any frame.
inline constexpr Mask kClosureBit = Mask{1} << 31;

class ModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
 public:
  enum class Kind { UnknownLabel, SyntaxError };
  ParseError(Kind kind, std::size_t offset, const std::string& what)
      : std::runtime_error(what), kind_(kind), offset_(offset) {}
  Kind kind() const noexcept { return kind_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  Kind kind_;
  std::size_t offset_;
};

class Frame {
 public:
  explicit Frame(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  /// Index of a label, or -1.
  int index_of(std::string_view label) const noexcept;
  Mask full_mask() const noexcept { return (Mask{1} << size()) - 1; }

  bool operator==(const Frame&) const = default;

 private:
  std::vector<std::string> labels_;
};

struct SetExpr {
  enum class Kind { Label, Union, Intersection };
  Kind kind = Kind::Label;
  int label = -1;
  std::vector<SetExpr> operands;

  static SetExpr leaf(int label) { return SetExpr{Kind::Label, label, {}}; }
  static SetExpr join(SetExpr a, SetExpr b);
  static SetExpr meet(SetExpr a, SetExpr b);
};

/// Lattice element in reduced conjunctive normal form: an intersection of
/// clauses, each clause a union of singletons given as a label mask.
/// Two special values live outside the frame lattice: the classical empty
/// set (no clauses) and the closure hypothesis theta0.
class Element {
 public:
  /// Classical empty set.
  Element() = default;
  /// Builds from arbitrary clauses; absorbs and sorts them.
  explicit Element(std::vector<Mask> clauses);

  static Element singleton(int label) { return clause(Mask{1} << label); }
  static Element clause(Mask m);
  static Element void_set() { return Element(); }
  static Element closure();

  const std::vector<Mask>& clauses() const noexcept { return clauses_; }
  bool is_void() const noexcept { return clauses_.empty(); }
  bool is_closure() const noexcept {
    return clauses_.size() == 1 && clauses_[0] == kClosureBit;
  }
  /// Union of all labels composing the element, u(X).
  Mask support() const noexcept;
  /// Empty under the model that produced this value.
  bool empty() const noexcept { return empty_ || is_void(); }

  bool operator==(const Element& o) const noexcept { return clauses_ == o.clauses_; }
  std::strong_ordering operator<=>(const Element& o) const noexcept {
    return clauses_ <=> o.clauses_;
  }

 private:
  friend class Model;
  std::vector<Mask> clauses_;
  bool empty_ = false;
};

/// Free-lattice operations (no constraints applied).
Element free_meet(const Element& a, const Element& b);
Element free_join(const Element& a, const Element& b);
/// a <= b in the free distributive lattice.
bool free_leq(const Element& a, const Element& b);
Element free_form(const SetExpr& expr);

class Model {
 public:
  enum class Kind { Free, Shafer, Hybrid };
  enum class World { Closed, Open };

  /// `constraints` are elements forced empty, given in free form.
  Model(Frame frame, Kind kind, std::vector<Element> constraints = {},
        World world = World::Closed, bool closure = false);

  static Model free(Frame f) { return Model(std::move(f), Kind::Free); }
  static Model shafer(Frame f) { return Model(std::move(f), Kind::Shafer); }

  const Frame& frame() const noexcept { return frame_; }
  Kind kind() const noexcept { return kind_; }
  World world() const noexcept { return world_; }
  bool closure() const noexcept { return closure_; }
  const std::vector<Element>& constraints() const noexcept { return constraints_; }

  /// Canonical form under this model: non-empty elements are reduced to the
  /// least free element with the same admissible regions; empty elements keep
  /// their free form and carry the empty flag.
  Element canonical(const Element& free_element) const;
  Element canonical(const SetExpr& expr) const { return canonical(free_form(expr)); }
  bool is_empty(const Element& e) const;

  Element meet(const Element& a, const Element& b) const { return canonical(free_meet(a, b)); }
  Element join(const Element& a, const Element& b) const { return canonical(free_join(a, b)); }
  Element total_ignorance() const { return canonical(Element::clause(frame_.full_mask())); }
  /// u(X) under the model.
  Element disjunctive(const Element& e) const { return canonical(Element::clause(e.support())); }
  /// Where mass goes when nothing in the frame can receive it.
  Element void_target() const { return closure_ ? Element::closure() : Element::void_set(); }
  /// First non-empty of: canonical(u), total ignorance, then void_target().
  Element fallback(Mask u) const;

 private:
  bool uses_regions() const noexcept { return kind_ != Kind::Shafer; }
  std::uint64_t regions_of(const Element& e) const;

  Frame frame_;
  Kind kind_;
  std::vector<Element> constraints_;
  World world_;
  bool closure_;
  Mask alive_ = 0;                 // Shafer: singletons not forced empty
  std::uint64_t admissible_ = 0;  // region mode: regions not forced empty
};

SetExpr parse_expr(std::string_view text, const Frame& frame);
Element canonical_form(const SetExpr& expr, const Model& model);
Element disjunctive_form(const SetExpr& expr);
bool is_empty(const Element& e, const Model& model);

std::string to_string(const Element& e, const Frame& frame);
std::string to_string(const SetExpr& e, const Frame& frame);

}  // namespace pcr
