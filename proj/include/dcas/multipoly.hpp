#pragma once

#include "dcas/rational.hpp"
#include "dcas/unipoly.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace dcas {

using Monomial = std::vector<int>;
using VarList = std::vector<std::string>;

// Graded lexicographic order: total degree first, then the first variable
// with a differing exponent decides.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class MultiPoly {
public:
    using Terms = std::map<Monomial, Rat, GrlexLess>;

    MultiPoly() = default;
    explicit MultiPoly(VarList vars) : vars_(std::move(vars)) {}
    static MultiPoly constant(VarList vars, const Rat& c);
    static MultiPoly variable(VarList vars, const std::string& name);
    static MultiPoly from_unipoly(VarList vars, const std::string& name, const UniPoly& p);

    const VarList& vars() const { return vars_; }
    const Terms& terms() const { return terms_; }
    std::size_t nvars() const { return vars_.size(); }
    int var_index(const std::string& name) const;  // -1 if absent

    void add_term(const Monomial& m, const Rat& c);
    Rat coeff(const Monomial& m) const;

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_term() const;
    int total_degree() const;
    int degree_in(int var) const;
    int min_degree_in(int var) const;
    bool depends_on(int var) const { return degree_in(var) > 0; }
    Rat leading_coeff() const;  // largest monomial in grlex

    // Coefficients with respect to one variable: deg -> coefficient (that
    // variable's exponent zeroed, ambient variables unchanged).
    std::map<int, MultiPoly> collect(int var) const;

    // Re-embed into another variable list containing every used variable.
    MultiPoly embed(const VarList& vars) const;

    // Integer content made 1 and positive leading coefficient.
    MultiPoly primitive() const;
    // Divides out the largest monomial dividing every term in the given variables.
    MultiPoly strip_monomial(const std::vector<int>& vars) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const Rat& s);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rat& s) { return a *= s; }
    friend MultiPoly operator*(const Rat& s, MultiPoly a) { return a *= s; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    MultiPoly shift(const Monomial& m) const;  // multiply by x^m
    std::string str() const;

private:
    void check_vars(const MultiPoly& o) const;
    VarList vars_;
    Terms terms_;
};

MultiPoly pow(const MultiPoly& p, unsigned n);

// Univariate view; throws VariableMismatch if p uses another variable.
UniPoly to_unipoly(const MultiPoly& p, const std::string& var);

// Quotient of MultiPolys, not reduced (no multivariate gcd). Normalized so
// that a constant denominator is 1, otherwise the denominator's leading
// coefficient is 1.
class RationalFunction {
public:
    RationalFunction() = default;
    RationalFunction(const MultiPoly& num);  // NOLINT
    RationalFunction(const MultiPoly& num, const MultiPoly& den);

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    const VarList& vars() const { return num_.vars(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RationalFunction embed(const VarList& vars) const;

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    // Structural equality (after normalization).
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string str() const;

private:
    void normalize();
    MultiPoly num_, den_;
};

RationalFunction pow(const RationalFunction& r, unsigned n);
// a.num * b.den == b.num * a.den
bool equivalent(const RationalFunction& a, const RationalFunction& b);
UniRat to_unirat(const RationalFunction& r, const std::string& var);

// expr := term (('+'|'-') term)*; term := factor (('*'|'/') factor)*;
// factor := '-' factor | base ('^' integer)?; base := integer | ident | '(' expr ')'.
RationalFunction parse_expression(const std::string& text, const VarList& vars);
MultiPoly parse_polynomial(const std::string& text, const VarList& vars);
UniRat parse_unirat(const std::string& text, const std::string& var);

// Simultaneous substitution. Every variable of r that is not bound must
// appear in target_vars (it maps to itself). Bindings live over target_vars.
RationalFunction substitute(const RationalFunction& r,
                            const std::map<std::string, RationalFunction>& bindings,
                            const VarList& target_vars);

// eliminated -> p / (product of the other variables), denominators cleared,
// integer content and pure monomial factors in the remaining variables removed.
// Result variables: the remaining ones in order, then p.
MultiPoly eliminate_to_curve(const MultiPoly& d, const std::string& eliminated, const std::string& p);

// Bivariate polynomial in (x, y) with coefficients in Q[p].
struct CurvePoly {
    std::string x = "x", y = "y", p = "p";
    std::map<std::pair<int, int>, UniPoly> coeffs;

    static CurvePoly from_multipoly(const MultiPoly& m, const std::string& x, const std::string& y,
                                    const std::string& p);
    MultiPoly to_multipoly() const;
    std::vector<std::pair<int, int>> support() const;
    bool is_constant() const;
};

CurvePoly to_curve(const MultiPoly& eliminated_output);

// m * q = rem + (quotient) * c with deg_y(rem) < 2; m is a power of lc_y(c).
struct CurveReduction {
    MultiPoly remainder;
    MultiPoly multiplier;
};
CurveReduction reduce_modulo_curve(const MultiPoly& q, const MultiPoly& c, const std::string& y);

// s = A v^2 + B v + C; the map v -> C / (A v).
struct Involution {
    std::string var;
    MultiPoly image_num;  // C
    MultiPoly image_den;  // A v
    MultiPoly cofactor_num;  // C
    MultiPoly cofactor_den;  // A v^2
};
Involution triquadratic_involution(const MultiPoly& s, const std::string& v);
RationalFunction apply_involution(const RationalFunction& r, const Involution& inv);
// s(inv(v)) == (C / (A v^2)) * s
bool involution_cofactor_holds(const MultiPoly& s, const Involution& inv);

}  // namespace dcas
