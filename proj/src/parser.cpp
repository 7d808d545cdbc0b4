#include "dcas/error.hpp"
#include "dcas/multipoly.hpp"

#include <cctype>

namespace dcas {

namespace {

class Parser {
public:
    Parser(const std::string& text, const VarList& vars) : s_(text), vars_(vars) {}

    RationalFunction run() {
        skip();
        if (at_end()) throw ParseError(Errc::Parse, 0, "empty expression");
        RationalFunction r = expr();
        skip();
        if (!at_end()) throw ParseError(Errc::Parse, pos_, std::string("unexpected '") + s_[pos_] + "'");
        return r;
    }

private:
    bool at_end() const { return pos_ >= s_.size(); }

    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    // Next significant character, or 0 at the end of input.
    char peek() {
        skip();
        return at_end() ? '\0' : s_[pos_];
    }

    void consume() {
        last_ = pos_;
        ++pos_;
    }

    // A missing operand at the end of input is blamed on the dangling token.
    [[noreturn]] void fail_operand() {
        if (at_end()) throw ParseError(Errc::Parse, last_, "unexpected end of input after operator");
        throw ParseError(Errc::Parse, pos_, std::string("unexpected '") + s_[pos_] + "'");
    }

    RationalFunction expr() {
        RationalFunction r = term();
        for (char c = peek(); c == '+' || c == '-'; c = peek()) {
            consume();
            RationalFunction t = term();
            r = c == '+' ? r + t : r - t;
        }
        return r;
    }

    RationalFunction term() {
        RationalFunction r = factor();
        for (char c = peek(); c == '*' || c == '/'; c = peek()) {
            consume();
            std::size_t at = last_;
            RationalFunction f = factor();
            if (c == '*') {
                r = r * f;
            } else {
                if (f.is_zero()) throw ParseError(Errc::ZeroDenominator, at, "division by zero");
                r = r / f;
            }
        }
        return r;
    }

    RationalFunction factor() {
        if (peek() == '-') {
            consume();
            return -factor();
        }
        RationalFunction b = base();
        if (peek() == '^') {
            consume();
            skip();
            std::size_t start = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail_operand();
            last_ = start;
            unsigned long e = std::stoul(s_.substr(start, pos_ - start));
            return pow(b, static_cast<unsigned>(e));
        }
        return b;
    }

    RationalFunction base() {
        char c = peek();
        if (c == '\0') fail_operand();
        if (c == '(') {
            std::size_t open = pos_;
            consume();
            RationalFunction r = expr();
            if (peek() != ')') {
                if (at_end()) throw ParseError(Errc::Parse, open, "unclosed '('");
                throw ParseError(Errc::Parse, pos_, std::string("expected ')' but found '") + s_[pos_] + "'");
            }
            consume();
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            last_ = start;
            Int v(s_.substr(start, pos_ - start), 10);
            return RationalFunction(MultiPoly::constant(vars_, Rat(v)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            last_ = start;
            std::string name = s_.substr(start, pos_ - start);
            bool known = false;
            for (const auto& v : vars_) known = known || v == name;
            if (!known) throw ParseError(Errc::UnknownIdentifier, start, "unknown identifier '" + name + "'");
            return RationalFunction(MultiPoly::variable(vars_, name));
        }
        fail_operand();
    }

    const std::string& s_;
    const VarList& vars_;
    std::size_t pos_ = 0;
    std::size_t last_ = 0;
};

}  // namespace

RationalFunction parse_expression(const std::string& text, const VarList& vars) {
    return Parser(text, vars).run();
}

MultiPoly parse_polynomial(const std::string& text, const VarList& vars) {
    RationalFunction r = parse_expression(text, vars);
    if (!r.is_polynomial()) throw Error(Errc::Parse, "expected a polynomial: '" + text + "'");
    return r.num();
}

UniRat parse_unirat(const std::string& text, const std::string& var) {
    return to_unirat(parse_expression(text, VarList{var}), var);
}

}  // namespace dcas
