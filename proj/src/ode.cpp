#include "dcas/ode.hpp"

#include "dcas/error.hpp"

#include <algorithm>

namespace dcas {

DiffOp::DiffOp(std::vector<UniPoly> coeffs, std::string var) : c_(std::move(coeffs)), var_(std::move(var)) {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    if (c_.empty()) throw Error(Errc::InvalidArgument, "zero differential operator");
    for (auto& c : c_) c = c.with_var(var_);
}

int DiffOp::degree() const {
    int d = 0;
    for (const auto& c : c_) d = std::max(d, c.degree());
    return d;
}

DiffOp DiffOp::canonical() const {
    Int l = 1, g = 0;
    for (const auto& p : c_)
        for (const auto& a : p.coeffs()) l = lcm(l, a.get_den());
    for (const auto& p : c_)
        for (const auto& a : p.coeffs()) g = gcd(g, a.get_num() * (l / a.get_den()));
    Rat s = make_rat(l, g);
    if (c_.back().lc() < 0) s = -s;
    std::vector<UniPoly> c = c_;
    for (auto& p : c) p *= s;
    return DiffOp(std::move(c), var_);
}

std::string DiffOp::str() const {
    std::string s;
    for (int i = 0; i <= order(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + c_[i].str() + ")";
        if (i == 1) s += "*D";
        else if (i > 1) s += "*D^" + std::to_string(i);
    }
    return s;
}

PowerSeries apply(const DiffOp& op, const PowerSeries& s) {
    const int r = op.order();
    const int n = s.order() - r;
    if (n < 0) throw Error(Errc::SeriesTooShort, "series shorter than the operator order");
    PowerSeries out(n, s.var());
    PowerSeries d = s;
    for (int i = 0; i <= r; ++i) {
        if (i > 0) d = d.derivative();
        const UniPoly& c = op.coeffs()[i];
        for (int j = 0; j <= c.degree(); ++j) {
            if (c.coeff(j) == 0) continue;
            for (int m = 0; m + j <= n; ++m) out[m + j] += c.coeff(j) * d[m];
        }
    }
    return out;
}

bool annihilates(const DiffOp& op, const PowerSeries& s) {
    if (s.order() <= op.order() + 5)
        throw Error(Errc::SeriesTooShort, "need order > " + std::to_string(op.order() + 5) + " to check annihilation");
    return apply(op, s).is_zero();
}

namespace {

// One nonzero kernel vector of a rational matrix, if any (first free column).
std::optional<std::vector<Rat>> kernel_vector(std::vector<std::vector<Rat>> a, std::size_t cols) {
    std::vector<int> pivot_col;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
        std::size_t p = row;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[row]);
        const Rat inv = 1 / a[row][c];
        for (std::size_t j = c; j < cols; ++j) a[row][j] *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == row || a[i][c] == 0) continue;
            const Rat f = a[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (a[row][j] != 0) a[i][j] -= f * a[row][j];
        }
        pivot_col.push_back(static_cast<int>(c));
        ++row;
    }
    if (pivot_col.size() == cols) return std::nullopt;
    std::size_t free = 0;
    for (std::size_t k = 0; free < cols; ++free) {
        if (k < pivot_col.size() && pivot_col[k] == static_cast<int>(free)) ++k;
        else break;
    }
    std::vector<Rat> v(cols);
    v[free] = 1;
    for (std::size_t k = 0; k < pivot_col.size(); ++k) v[pivot_col[k]] = -a[k][free];
    return v;
}

}  // namespace

std::optional<DiffOp> guess_ode(const PowerSeries& s, int max_order, int max_degree, int margin) {
    if (max_order < 0 || max_degree < 0 || margin < 0) throw Error(Errc::InvalidArgument, "negative guessing bound");
    const int N = s.order();
    const int need = (max_order + 1) * (max_degree + 1) + max_order + margin;
    if (N < need)
        throw Error(Errc::InsufficientTerms, "order " + std::to_string(N) + " < required " + std::to_string(need));
    // Derivative tables: deriv[i][m] = coefficient of x^m in s^(i).
    std::vector<std::vector<Rat>> deriv(max_order + 1);
    for (int i = 0; i <= max_order; ++i) {
        deriv[i].resize(N - i + 1);
        for (int m = 0; m + i <= N; ++m) {
            Rat f = s[m + i];
            for (int t = 1; t <= i; ++t) f *= m + t;
            deriv[i][m] = f;
        }
    }
    for (int r = 0; r <= max_order; ++r) {
        for (int d = 0; d <= max_degree; ++d) {
            const std::size_t cols = static_cast<std::size_t>((r + 1) * (d + 1));
            std::vector<std::vector<Rat>> a(N - r + 1, std::vector<Rat>(cols));
            for (int n = 0; n <= N - r; ++n)
                for (int i = 0; i <= r; ++i)
                    for (int j = 0; j <= d && j <= n; ++j) a[n][i * (d + 1) + j] = deriv[i][n - j];
            auto v = kernel_vector(std::move(a), cols);
            if (!v) continue;
            std::vector<UniPoly> c;
            for (int i = 0; i <= r; ++i)
                c.emplace_back(std::vector<Rat>(v->begin() + i * (d + 1), v->begin() + (i + 1) * (d + 1)), s.var());
            DiffOp op = DiffOp(std::move(c), s.var()).canonical();
            if (!apply(op, s).is_zero()) throw Error(Errc::InvalidArgument, "guessed operator failed the annihilation check");
            return op;
        }
    }
    return std::nullopt;
}

DiffOp symmetric_square(const DiffOp& op) {
    if (op.order() != 2) throw Error(Errc::WrongOrder, "symmetric square needs an order-2 operator");
    const UniPoly& c0 = op.coeffs()[0];
    const UniPoly& c1 = op.coeffs()[1];
    const UniPoly& c2 = op.coeffs()[2];
    // y'' + p y' + q y with p = c1/c2, q = c0/c2, multiplied through by c2^2.
    std::vector<UniPoly> r(4);
    r[3] = c2 * c2;
    r[2] = Rat(3) * c1 * c2;
    r[1] = Rat(2) * c1 * c1 + (c1.derivative() * c2 - c1 * c2.derivative()) + Rat(4) * c0 * c2;
    r[0] = Rat(4) * c1 * c0 + Rat(2) * (c0.derivative() * c2 - c0 * c2.derivative());
    UniPoly g({}, op.var());
    for (const auto& p : r) g = poly_gcd(g, p);
    for (auto& p : r) p = exact_div(p, g);
    return DiffOp(std::move(r), op.var()).canonical();
}

namespace {

// S2[i][k]: Stirling numbers of the second kind; S1[k][i]: signed, first kind.
std::vector<std::vector<Int>> stirling2(int n) {
    std::vector<std::vector<Int>> S(n + 1, std::vector<Int>(n + 1, 0));
    S[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= i; ++k) S[i][k] = S[i - 1][k - 1] + k * S[i - 1][k];
    return S;
}

std::vector<std::vector<Int>> stirling1(int n) {
    std::vector<std::vector<Int>> S(n + 1, std::vector<Int>(n + 1, 0));
    S[0][0] = 1;
    for (int k = 1; k <= n; ++k)
        for (int i = 1; i <= k; ++i) S[k][i] = S[k - 1][i - 1] - (k - 1) * S[k - 1][i];
    return S;
}

}  // namespace

DiffOp from_theta(const std::vector<UniPoly>& t, const std::string& var) {
    const int r = static_cast<int>(t.size()) - 1;
    auto S = stirling2(r);
    std::vector<UniPoly> c(r + 1, UniPoly({}, var));
    for (int i = 0; i <= r; ++i)
        for (int k = 0; k <= i; ++k)
            if (S[i][k] != 0) c[k] += Rat(S[i][k]) * t[i] * UniPoly::monomial(1, k, var);
    return DiffOp(std::move(c), var);
}

std::vector<UniPoly> to_theta(const DiffOp& op) {
    const int r = op.order();
    auto S = stirling1(r);
    std::vector<UniPoly> t(r + 1, UniPoly({}, op.var()));
    for (int k = 0; k <= r; ++k) {
        const UniPoly& c = op.coeffs()[k];
        for (int j = 0; j < k && j <= c.degree(); ++j)
            if (c.coeff(j) != 0)
                throw Error(Errc::InvalidArgument, "coefficient of D^" + std::to_string(k) + " not divisible by x^" + std::to_string(k));
        std::vector<Rat> q(c.coeffs().begin() + std::min(k, c.degree() + 1), c.coeffs().end());
        UniPoly qk(std::move(q), op.var());
        for (int i = 0; i <= k; ++i)
            if (S[k][i] != 0) t[i] += Rat(S[k][i]) * qk;
    }
    while (!t.empty() && t.back().is_zero()) t.pop_back();
    return t;
}

}  // namespace dcas
