#pragma once

#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "apa/generators.hpp"
#include "apa/ribbon_braid.hpp"

namespace apa {

class TangleExpr;
using ExprPtr = std::shared_ptr<const TangleExpr>;

/// Immutable typed expression tree over the generating tangles.
///
///   Gen(g)                 a generating tangle
///   Comp(outer, a, inner)  plug inner's output into input slot a of outer;
///                          inner's inputs are spliced in at slot a
///   Act(body, sigma)       ribbon braid acting on the anchor lines below
///                          body; input a of the result feeds body input
///                          pi_sigma(a)
///
/// Construction type-checks, so every ExprPtr in existence is well typed.
class TangleExpr {
 public:
  enum class Kind { Gen, Comp, Act };

  static ExprPtr gen(const Generator& g) {
    return std::shared_ptr<const TangleExpr>(new TangleExpr(g));
  }

  static ExprPtr comp(ExprPtr outer, int slot, ExprPtr inner) {
    const TangleType& ot = outer->type();
    if (slot < 1 || slot > static_cast<int>(ot.inputs.size()))
      throw Error("comp: slot " + std::to_string(slot) + " out of range for type " +
                  ot.to_string());
    if (inner->type().output != ot.inputs[slot - 1])
      throw Error("comp: inner output " + std::to_string(inner->type().output) +
                  " does not match slot size " + std::to_string(ot.inputs[slot - 1]));
    TangleType t;
    t.output = ot.output;
    const auto& ii = inner->type().inputs;
    t.inputs.insert(t.inputs.end(), ot.inputs.begin(), ot.inputs.begin() + (slot - 1));
    t.inputs.insert(t.inputs.end(), ii.begin(), ii.end());
    t.inputs.insert(t.inputs.end(), ot.inputs.begin() + slot, ot.inputs.end());
    return std::shared_ptr<const TangleExpr>(
        new TangleExpr(std::move(outer), slot, std::move(inner), std::move(t)));
  }

  static ExprPtr act(ExprPtr body, RibbonBraid braid) {
    const TangleType& bt = body->type();
    if (braid.strands() != static_cast<int>(bt.inputs.size()))
      throw Error("act: braid on " + std::to_string(braid.strands()) +
                  " strands applied to " + std::to_string(bt.inputs.size()) + " inputs");
    Permutation pi = braid.permutation();
    TangleType t;
    t.output = bt.output;
    t.inputs.resize(bt.inputs.size());
    for (size_t a = 1; a <= bt.inputs.size(); ++a)
      t.inputs[a - 1] = bt.inputs[pi(static_cast<int>(a)) - 1];
    return std::shared_ptr<const TangleExpr>(
        new TangleExpr(std::move(body), std::move(braid), std::move(t)));
  }

  Kind kind() const { return kind_; }
  const TangleType& type() const { return type_; }

  const Generator& generator() const { return gen_; }
  const ExprPtr& outer() const { return a_; }
  const ExprPtr& inner() const { return b_; }
  int slot() const { return slot_; }
  const ExprPtr& body() const { return a_; }
  const RibbonBraid& braid() const { return braid_; }

  /// Number of generator nodes, a rough size measure.
  int size() const {
    switch (kind_) {
      case Kind::Gen: return 1;
      case Kind::Comp: return a_->size() + b_->size();
      case Kind::Act: return a_->size();
    }
    return 0;
  }

 private:
  explicit TangleExpr(const Generator& g)
      : kind_(Kind::Gen), gen_(g), braid_(0), type_(g.type()) {}
  TangleExpr(ExprPtr outer, int slot, ExprPtr inner, TangleType t)
      : kind_(Kind::Comp),
        a_(std::move(outer)),
        b_(std::move(inner)),
        slot_(slot),
        braid_(0),
        type_(std::move(t)) {}
  TangleExpr(ExprPtr body, RibbonBraid braid, TangleType t)
      : kind_(Kind::Act), a_(std::move(body)), braid_(std::move(braid)), type_(std::move(t)) {}

  Kind kind_;
  Generator gen_;
  ExprPtr a_, b_;
  int slot_ = 0;
  RibbonBraid braid_;
  TangleType type_;
};

inline ExprPtr compose(ExprPtr outer, int slot, ExprPtr inner) {
  return TangleExpr::comp(std::move(outer), slot, std::move(inner));
}
inline ExprPtr act(ExprPtr body, RibbonBraid braid) {
  return TangleExpr::act(std::move(body), std::move(braid));
}

// --- DSL ---------------------------------------------------------------
//
// expr  := "u" | "(id N)" | "(cap I N)" | "(cup I N)" | "(p I J N)"
//        | "(comp SLOT expr expr)" | "(act expr BRAID)"
// BRAID := "rb(" N ")[" (("e"|"e'"|"t"|"t'") K)* "]"

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(const std::string& text) : text_(text) {}

  ExprPtr parse() {
    ExprPtr e = parse_expr("/");
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error("parse error at offset " + std::to_string(pos_) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  int read_int() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected integer");
    int v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      v = v * 10 + (text_[pos_++] - '0');
    return v;
  }

  std::string read_symbol() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '\''))
      ++pos_;
    if (pos_ == start) fail("expected symbol");
    return text_.substr(start, pos_ - start);
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  ExprPtr parse_expr(const std::string& path) {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected expression");
    if (text_[pos_] == 'u') {
      ++pos_;
      return TangleExpr::gen(Generator::unit());
    }
    expect('(');
    std::string head = read_symbol();
    size_t head_pos = pos_;
    try {
      if (head == "id") {
        int n = read_int();
        expect(')');
        return TangleExpr::gen(Generator::id(n));
      }
      if (head == "cap") {
        int i = read_int(), n = read_int();
        expect(')');
        return TangleExpr::gen(Generator::cap(i, n));
      }
      if (head == "cup") {
        int i = read_int(), n = read_int();
        expect(')');
        return TangleExpr::gen(Generator::cup(i, n));
      }
      if (head == "p") {
        int i = read_int(), j = read_int(), n = read_int();
        expect(')');
        return TangleExpr::gen(Generator::pin(i, j, n));
      }
      if (head == "comp") {
        int slot = read_int();
        ExprPtr outer = parse_expr(path + "comp.outer/");
        ExprPtr inner = parse_expr(path + "comp.inner/");
        expect(')');
        return TangleExpr::comp(std::move(outer), slot, std::move(inner));
      }
      if (head == "act") {
        ExprPtr body = parse_expr(path + "act.body/");
        skip_ws();
        RibbonBraid b = RibbonBraid::parse_prefix(text_, pos_);
        expect(')');
        return TangleExpr::act(std::move(body), std::move(b));
      }
    } catch (const Error& e) {
      std::string what = e.what();
      if (what.find("parse error") != std::string::npos || what.find("braid parse") == 0)
        throw;
      throw Error("arity error at node " + path + head + " (offset " +
                  std::to_string(head_pos) + "): " + what);
    }
    fail("unknown form '" + head + "'");
  }

  const std::string& text_;
  size_t pos_ = 0;
};

}  // namespace detail

inline ExprPtr parse_expr(const std::string& text) { return detail::ExprParser(text).parse(); }

inline std::string render_expr(const ExprPtr& e) {
  switch (e->kind()) {
    case TangleExpr::Kind::Gen:
      return e->generator().render();
    case TangleExpr::Kind::Comp:
      return "(comp " + std::to_string(e->slot()) + " " + render_expr(e->outer()) + " " +
             render_expr(e->inner()) + ")";
    case TangleExpr::Kind::Act:
      return "(act " + render_expr(e->body()) + " " + e->braid().render() + ")";
  }
  throw Error("unreachable");
}

}  // namespace apa
