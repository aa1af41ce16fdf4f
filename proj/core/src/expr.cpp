#include "fracivp/expr.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>

#include "fracivp/errors.hpp"

namespace fracivp::expr {

namespace {
enum class Kind { Number, Variable, Binary, Unary };
enum class BinOp { Add, Sub, Mul, Div, Pow };
enum class Func { Neg, Exp, Log, Sin, Cos, Sqrt, Abs };
}  // namespace

struct Expr::Node {
    Kind kind;
    double number = 0.0;                   // Number
    std::size_t var_index = 0;             // Variable
    std::string var_name;                  // Variable
    BinOp op = BinOp::Add;                 // Binary
    Func func = Func::Neg;                 // Unary
    std::shared_ptr<const Node> lhs, rhs;  // Binary; Unary uses lhs only
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

NodePtr make_number(double v) {
    auto n = std::make_shared<Expr::Node>();
    n->kind = Kind::Number;
    n->number = v;
    return n;
}

NodePtr make_var(std::size_t index, std::string name) {
    auto n = std::make_shared<Expr::Node>();
    n->kind = Kind::Variable;
    n->var_index = index;
    n->var_name = std::move(name);
    return n;
}

NodePtr make_binary(BinOp op, NodePtr l, NodePtr r) {
    auto n = std::make_shared<Expr::Node>();
    n->kind = Kind::Binary;
    n->op = op;
    n->lhs = std::move(l);
    n->rhs = std::move(r);
    return n;
}

NodePtr make_unary(Func f, NodePtr a) {
    auto n = std::make_shared<Expr::Node>();
    n->kind = Kind::Unary;
    n->func = f;
    n->lhs = std::move(a);
    return n;
}

void write(const Expr::Node& node, std::ostream& os) {
    switch (node.kind) {
        case Kind::Number: {
            std::ostringstream tmp;
            tmp.precision(17);
            tmp << node.number;
            os << tmp.str();
            break;
        }
        case Kind::Variable:
            os << node.var_name;
            break;
        case Kind::Binary: {
            const char* op = nullptr;
            switch (node.op) {
                case BinOp::Add: op = "+"; break;
                case BinOp::Sub: op = "-"; break;
                case BinOp::Mul: op = "*"; break;
                case BinOp::Div: op = "/"; break;
                case BinOp::Pow: op = "^"; break;
            }
            os << '(';
            write(*node.lhs, os);
            os << op;
            write(*node.rhs, os);
            os << ')';
            break;
        }
        case Kind::Unary: {
            const char* name = nullptr;
            switch (node.func) {
                case Func::Neg: name = "-"; break;
                case Func::Exp: name = "exp"; break;
                case Func::Log: name = "log"; break;
                case Func::Sin: name = "sin"; break;
                case Func::Cos: name = "cos"; break;
                case Func::Sqrt: name = "sqrt"; break;
                case Func::Abs: name = "abs"; break;
            }
            if (node.func == Func::Neg) {
                os << "(-";
                write(*node.lhs, os);
                os << ')';
            } else {
                os << name << '(';
                write(*node.lhs, os);
                os << ')';
            }
            break;
        }
    }
}

std::string subexpr_text(const Expr::Node& node) {
    std::ostringstream os;
    write(node, os);
    return os.str();
}

[[noreturn]] void eval_fail(const Expr::Node& node, const std::string& what) {
    throw DomainError(what + " in '" + subexpr_text(node) + "'");
}

double eval_node(const Expr::Node& node, std::span<const double> values) {
    switch (node.kind) {
        case Kind::Number:
            return node.number;
        case Kind::Variable:
            return values[node.var_index];
        case Kind::Binary: {
            const double a = eval_node(*node.lhs, values);
            const double b = eval_node(*node.rhs, values);
            switch (node.op) {
                case BinOp::Add: return a + b;
                case BinOp::Sub: return a - b;
                case BinOp::Mul: return a * b;
                case BinOp::Div:
                    if (b == 0.0) eval_fail(node, "division by zero");
                    return a / b;
                case BinOp::Pow: {
                    if (a == 0.0 && b < 0.0) eval_fail(node, "zero raised to a negative power");
                    if (a < 0.0 && b != std::floor(b))
                        eval_fail(node, "fractional power of a negative base");
                    const double r = std::pow(a, b);
                    if (!std::isfinite(r)) eval_fail(node, "non-finite power");
                    return r;
                }
            }
            break;
        }
        case Kind::Unary: {
            const double a = eval_node(*node.lhs, values);
            switch (node.func) {
                case Func::Neg: return -a;
                case Func::Exp: {
                    const double r = std::exp(a);
                    if (!std::isfinite(r)) eval_fail(node, "exp overflow");
                    return r;
                }
                case Func::Log:
                    if (a <= 0.0) eval_fail(node, "log of a non-positive value");
                    return std::log(a);
                case Func::Sin: return std::sin(a);
                case Func::Cos: return std::cos(a);
                case Func::Sqrt:
                    if (a < 0.0) eval_fail(node, "sqrt of a negative value");
                    return std::sqrt(a);
                case Func::Abs: return std::abs(a);
            }
            break;
        }
    }
    eval_fail(node, "malformed node");
}

class Parser {
  public:
    Parser(std::string_view text, std::span<const std::string> variables)
        : text_(text), vars_(variables) {}

    NodePtr run() {
        NodePtr e = parse_sum();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError(pos_, "unexpected character '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

  private:
    std::string_view text_;
    std::span<const std::string> vars_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool consume(char c) {
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!consume(c))
            throw ParseError(pos_, std::string("expected '") + c + "'");
    }

    NodePtr parse_sum() {
        NodePtr e = parse_product();
        for (;;) {
            if (consume('+'))
                e = make_binary(BinOp::Add, e, parse_product());
            else if (consume('-'))
                e = make_binary(BinOp::Sub, e, parse_product());
            else
                return e;
        }
    }

    NodePtr parse_product() {
        NodePtr e = parse_unary();
        for (;;) {
            if (consume('*'))
                e = make_binary(BinOp::Mul, e, parse_unary());
            else if (consume('/'))
                e = make_binary(BinOp::Div, e, parse_unary());
            else
                return e;
        }
    }

    NodePtr parse_unary() {
        if (consume('-')) return make_unary(Func::Neg, parse_unary());
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_atom();
        if (consume('^')) {
            // right-associative; allow a signed exponent
            NodePtr exp = consume('-') ? make_unary(Func::Neg, parse_power_operand())
                                       : parse_power_operand();
            return make_binary(BinOp::Pow, base, exp);
        }
        return base;
    }

    NodePtr parse_power_operand() {
        NodePtr base = parse_atom();
        if (consume('^')) {
            NodePtr exp = consume('-') ? make_unary(Func::Neg, parse_power_operand())
                                       : parse_power_operand();
            return make_binary(BinOp::Pow, base, exp);
        }
        return base;
    }

    NodePtr parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of input");
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_identifier();
        if (c == '(') {
            ++pos_;
            NodePtr e = parse_sum();
            expect(')');
            return e;
        }
        throw ParseError(pos_, "unexpected character '" + std::string(1, c) + "'");
    }

    NodePtr parse_number() {
        const char* begin = text_.data() + pos_;
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin) throw ParseError(pos_, "malformed number");
        pos_ += static_cast<std::size_t>(end - begin);
        return make_number(v);
    }

    NodePtr parse_identifier() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        const std::string name(text_.substr(start, pos_ - start));

        if (name == "pi") return make_number(std::numbers::pi);

        static const std::pair<const char*, Func> kFuncs[] = {
            {"exp", Func::Exp}, {"log", Func::Log},   {"sin", Func::Sin},
            {"cos", Func::Cos}, {"sqrt", Func::Sqrt}, {"abs", Func::Abs}};
        for (const auto& [fname, func] : kFuncs) {
            if (name == fname) {
                expect('(');
                NodePtr arg = parse_sum();
                expect(')');
                return make_unary(func, arg);
            }
        }
        if (name == "pow") {
            expect('(');
            NodePtr base = parse_sum();
            expect(',');
            NodePtr exp = parse_sum();
            expect(')');
            return make_binary(BinOp::Pow, base, exp);
        }

        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return make_var(i, name);

        std::string allowed;
        for (const auto& v : vars_) {
            if (!allowed.empty()) allowed += ", ";
            allowed += v;
        }
        throw ParseError(start, "unknown identifier '" + name +
                                    "' (allowed variables: " + allowed +
                                    "; functions: exp log sin cos sqrt abs pow; constant pi)");
    }
};

}  // namespace

double Expr::eval(std::span<const double> values) const {
    if (!root_) throw DomainError("eval of an empty expression");
    if (values.size() != vars_.size())
        throw DomainError("eval: value count does not match variable count");
    return eval_node(*root_, values);
}

std::string Expr::serialize() const {
    if (!root_) return "";
    return subexpr_text(*root_);
}

Expr parse(std::string_view text, std::span<const std::string> variables) {
    Parser p(text, variables);
    Expr e;
    e.root_ = p.run();
    e.vars_.assign(variables.begin(), variables.end());
    return e;
}

double eval_xwv(const Expr& e, double x, double w, double v) {
    const double values[3] = {x, w, v};
    return e.eval(values);
}

}  // namespace fracivp::expr
