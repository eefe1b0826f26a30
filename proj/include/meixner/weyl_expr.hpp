#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "meixner/exact.hpp"

namespace meixner {

/// Syntax error with the byte offset of the offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, const std::string& what)
        : std::runtime_error("parse error at offset " + std::to_string(offset) + ": " + what),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// AST over the free algebra in the two generators U, V with (commuting)
/// complex rational scalars.
struct OperatorExpr {
    enum class Kind { GenU, GenV, Scalar, Sum, Product, Power };

    Kind kind;
    GaussRational scalar;                                   // Kind::Scalar
    unsigned exponent = 0;                                  // Kind::Power
    std::vector<std::shared_ptr<const OperatorExpr>> kids;  // Sum/Product/Power(1 kid)

    static std::shared_ptr<const OperatorExpr> u() {
        auto e = std::make_shared<OperatorExpr>();
        e->kind = Kind::GenU;
        return e;
    }
    static std::shared_ptr<const OperatorExpr> v() {
        auto e = std::make_shared<OperatorExpr>();
        e->kind = Kind::GenV;
        return e;
    }
    static std::shared_ptr<const OperatorExpr> lit(GaussRational s) {
        auto e = std::make_shared<OperatorExpr>();
        e->kind = Kind::Scalar;
        e->scalar = std::move(s);
        return e;
    }
    static std::shared_ptr<const OperatorExpr> sum(
        std::vector<std::shared_ptr<const OperatorExpr>> kids) {
        auto e = std::make_shared<OperatorExpr>();
        e->kind = Kind::Sum;
        e->kids = std::move(kids);
        return e;
    }
    static std::shared_ptr<const OperatorExpr> product(
        std::vector<std::shared_ptr<const OperatorExpr>> kids) {
        auto e = std::make_shared<OperatorExpr>();
        e->kind = Kind::Product;
        e->kids = std::move(kids);
        return e;
    }
    static std::shared_ptr<const OperatorExpr> power(std::shared_ptr<const OperatorExpr> base,
                                                     unsigned n) {
        auto e = std::make_shared<OperatorExpr>();
        e->kind = Kind::Power;
        e->exponent = n;
        e->kids = {std::move(base)};
        return e;
    }
};

using ExprPtr = std::shared_ptr<const OperatorExpr>;

namespace detail {

/// Recursive-descent parser for
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' nat)?
///   atom   := 'U' | 'V' | scalar | '(' expr ')'
///   scalar := rat 'i'? (('+'|'-') rat 'i')?      rat := nat ('/' nat)?
class ExprParser {
public:
    explicit ExprParser(std::string_view src) : src_(src) {}

    ExprPtr parse() {
        ExprPtr e = parse_expr();
        skip_ws();
        if (pos_ != src_.size()) throw ParseError(pos_, "unexpected input");
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t')) ++pos_;
    }
    int peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : -1;
    }

    ExprPtr parse_expr() {
        std::vector<ExprPtr> terms;
        terms.push_back(parse_term());
        while (true) {
            int c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            ExprPtr t = parse_term();
            if (c == '-') t = OperatorExpr::product({OperatorExpr::lit(GaussRational{-1}), t});
            terms.push_back(std::move(t));
        }
        if (terms.size() == 1) return terms[0];
        return OperatorExpr::sum(std::move(terms));
    }

    ExprPtr parse_term() {
        std::vector<ExprPtr> factors;
        factors.push_back(parse_factor());
        while (peek() == '*') {
            ++pos_;
            factors.push_back(parse_factor());
        }
        if (factors.size() == 1) return factors[0];
        return OperatorExpr::product(std::move(factors));
    }

    ExprPtr parse_factor() {
        ExprPtr base = parse_atom();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            if (pos_ >= src_.size() || src_[pos_] < '0' || src_[pos_] > '9')
                throw ParseError(pos_, "exponent must be a nonnegative integer");
            Int e;
            detail::parse_uint_digits(src_, pos_, e);
            if (e > 64) throw ParseError(pos_, "exponent too large");
            return OperatorExpr::power(std::move(base), static_cast<unsigned>(e));
        }
        return base;
    }

    ExprPtr parse_atom() {
        int c = peek();
        if (c == 'U') {
            ++pos_;
            return OperatorExpr::u();
        }
        if (c == 'V') {
            ++pos_;
            return OperatorExpr::v();
        }
        if (c == '(') {
            ++pos_;
            ExprPtr e = parse_expr();
            if (peek() != ')') throw ParseError(pos_, "expected ')'");
            ++pos_;
            return e;
        }
        if (c >= '0' && c <= '9') return OperatorExpr::lit(parse_scalar());
        throw ParseError(pos_ < src_.size() ? pos_ : src_.size(), "expected 'U', 'V', '(' or a scalar");
    }

    /// Scalar literal. After the real part, a following "+rat i" / "-rat i"
    /// is consumed greedily and rolled back if the trailing 'i' is missing,
    /// so that "2+3i" is one scalar while in "2+3*U" the '+' stays at
    /// expression level.
    GaussRational parse_scalar() {
        Rat first;
        if (!parse_unsigned_rat(src_, pos_, first)) throw ParseError(pos_, "expected number");
        if (pos_ < src_.size() && src_[pos_] == 'i') {
            ++pos_;
            return GaussRational{Rat(0), first};
        }
        std::size_t save = pos_;
        if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) {
            bool neg = (src_[pos_] == '-');
            ++pos_;
            Rat second;
            if (parse_unsigned_rat(src_, pos_, second) && pos_ < src_.size() && src_[pos_] == 'i') {
                ++pos_;
                return GaussRational{first, neg ? Rat(-second) : second};
            }
            pos_ = save;
        }
        return GaussRational{first};
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the operator-expression grammar documented in the CLI help.
inline ExprPtr parse_operator(std::string_view text) { return detail::ExprParser(text).parse(); }

}  // namespace meixner
