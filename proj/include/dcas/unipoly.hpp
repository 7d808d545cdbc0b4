#pragma once

#include "dcas/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace dcas {

// Dense univariate polynomial over Q, coefficients lowest degree first.
// The zero polynomial has an empty coefficient list.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs, std::string var = "x");
    UniPoly(std::initializer_list<long> coeffs, std::string var = "x");

    static UniPoly constant(const Rat& c, std::string var = "x");
    static UniPoly monomial(const Rat& c, int deg, std::string var = "x");

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    const std::string& var() const { return var_; }
    UniPoly with_var(std::string v) const;

    Rat coeff(int i) const;
    Rat lc() const;
    Rat eval(const Rat& t) const;
    UniPoly derivative() const;
    UniPoly monic() const;

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    UniPoly& operator*=(const Rat& s);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
    friend UniPoly operator*(UniPoly a, const Rat& s) { return a *= s; }
    friend UniPoly operator*(const Rat& s, UniPoly a) { return a *= s; }

    // Structural equality of coefficients; the variable name is cosmetic.
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    std::string str() const;

private:
    void trim();
    std::vector<Rat> c_;
    std::string var_ = "x";
};

UniPoly pow(const UniPoly& p, unsigned n);
UniPoly compose(const UniPoly& p, const UniPoly& q);  // p(q)

// Division with remainder over Q.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
// a / b, throws InexactDivision when b does not divide a.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);

// Rational content c with p = c * pp, pp integral, primitive, positive lc.
Rat content(const UniPoly& p);
UniPoly primitive_part(const UniPoly& p);

// Monic gcd, gcd(0, 0) = 0. Primitive-part Euclid over Z[x].
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);

// Reduced rational function num/den over Q.
// Canonical: gcd(num, den) = 1, den integral primitive with positive lc.
class UniRat {
public:
    UniRat() : num_(), den_(UniPoly::constant(1)) {}
    UniRat(const UniPoly& p);  // NOLINT: polynomials embed
    UniRat(const UniPoly& num, const UniPoly& den);
    static UniRat constant(const Rat& c, std::string var = "x");

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    const std::string& var() const { return num_.var(); }
    UniRat with_var(std::string v) const;
    bool is_zero() const { return num_.is_zero(); }

    Rat eval(const Rat& t) const;  // throws ZeroDenominator at a pole
    UniRat derivative() const;
    UniRat inverse() const;

    UniRat operator-() const;
    friend UniRat operator+(const UniRat& a, const UniRat& b);
    friend UniRat operator-(const UniRat& a, const UniRat& b);
    friend UniRat operator*(const UniRat& a, const UniRat& b);
    friend UniRat operator/(const UniRat& a, const UniRat& b);
    friend bool operator==(const UniRat& a, const UniRat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string str() const;

private:
    struct Raw {};
    UniRat(Raw, UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {}
    UniPoly num_, den_;
};

UniRat unirat_normalize(const UniPoly& num, const UniPoly& den);
bool unirat_equal(const UniRat& a, const UniRat& b);
UniRat pow(const UniRat& r, int n);
UniRat compose(const UniRat& r, const UniRat& s);  // r(s)

}  // namespace dcas
