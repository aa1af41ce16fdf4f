#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fracivp::expr {

/// Immutable expression tree over a fixed set of variable names.
/// Supported: numeric literals, pi, + - * / ^, unary minus, and the
/// functions exp, log, sin, cos, sqrt, abs, pow(a, b).
class Expr {
  public:
    Expr() = default;

    /// Evaluate with one value per variable, in the order the variables were
    /// declared at parse time. Throws DomainError on division by zero, log of
    /// a non-positive value, sqrt of a negative value, or a fractional power
    /// of a negative base; the message carries the offending subexpression.
    double eval(std::span<const double> values) const;

    /// Parenthesized textual form that re-parses to an equivalent expression.
    std::string serialize() const;

    const std::vector<std::string>& variables() const { return vars_; }
    bool empty() const { return root_ == nullptr; }

    struct Node;  // implementation detail, defined in expr.cpp

  private:
    friend Expr parse(std::string_view, std::span<const std::string>);
    std::shared_ptr<const Node> root_;
    std::vector<std::string> vars_;
};

inline const std::vector<std::string> kDefaultVariables = {"x", "w", "v"};

/// Parse `text` over the given variable names. Throws ParseError with the
/// byte offset on malformed input; unknown identifiers list the allowed names.
Expr parse(std::string_view text,
           std::span<const std::string> variables = kDefaultVariables);

/// Convenience for the canonical g(x, w, v) right-hand sides.
double eval_xwv(const Expr& e, double x, double w, double v);

}  // namespace fracivp::expr
