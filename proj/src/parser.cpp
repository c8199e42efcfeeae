#include "algred/parser.hpp"

#include <cctype>

#include "algred/error.hpp"

namespace algred {

namespace {

class PolyParser {
public:
    PolyParser(const std::string& text, VarTablePtr vars)
        : text_(text), vars_(std::move(vars)) {}

    Poly parse() {
        Poly p = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw parse_error("syntax error at position " + std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c) {
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly parse_expr() {
        Poly p = parse_term();
        for (;;) {
            if (accept('+')) {
                p += parse_term();
            } else if (accept('-')) {
                p -= parse_term();
            } else {
                return p;
            }
        }
    }

    Poly parse_term() {
        Poly p = parse_unary();
        for (;;) {
            if (accept('*')) {
                p *= parse_unary();
            } else if (accept('/')) {
                size_t at = pos_;
                Poly d = parse_unary();
                if (!d.is_constant())
                    throw parse_error("syntax error at position " + std::to_string(at) +
                                      ": division by a non-constant expression");
                Scalar c = d.constant_value();
                if (c.is_zero())
                    throw parse_error("syntax error at position " + std::to_string(at) +
                                      ": division by zero");
                if (!c.is_constant())
                    throw parse_error("syntax error at position " + std::to_string(at) +
                                      ": division by an hbar-dependent constant");
                p = p * Scalar(c.constant_part().inverse());
            } else {
                return p;
            }
        }
    }

    Poly parse_unary() {
        if (accept('-')) return -parse_unary();
        return parse_power();
    }

    Poly parse_power() {
        Poly base = parse_atom();
        if (accept('^')) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '-') fail("negative exponent");
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("exponent must be a nonnegative integer literal");
            unsigned long e = 0;
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                e = e * 10 + static_cast<unsigned long>(text_[pos_] - '0');
                if (pos_ - start > 6) fail("exponent too large");
                ++pos_;
            }
            Poly p(vars_, Scalar::one());
            for (unsigned long k = 0; k < e; ++k) p *= base;
            return p;
        }
        return base;
    }

    Poly parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Poly p = parse_expr();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                digits += text_[pos_++];
            Rational r(mpz_class(digits, 10));
            return Poly(vars_, Scalar(r));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            std::string ident;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ident += text_[pos_++];
            if (ident == "i") return Poly(vars_, Scalar::i());
            if (ident == "hbar") return Poly(vars_, Scalar::hbar());
            if (auto idx = vars_->index_of(ident)) return Poly::variable(vars_, *idx);
            pos_ = start;
            fail("unknown identifier '" + ident + "'");
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    const std::string& text_;
    VarTablePtr vars_;
    size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& text, const VarTablePtr& vars) {
    return PolyParser(text, vars).parse();
}

Scalar parse_scalar(const std::string& text) {
    static const VarTablePtr no_vars = make_vars({});
    Poly p = parse_poly(text, no_vars);
    return p.constant_value();
}

Gaussian parse_gaussian(const std::string& text) {
    Scalar s = parse_scalar(text);
    if (!s.is_constant()) throw parse_error("expected an hbar-free constant: " + text);
    return s.constant_part();
}

}  // namespace algred
