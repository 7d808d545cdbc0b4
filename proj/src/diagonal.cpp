#include "dcas/diagonal.hpp"

#include "dcas/error.hpp"

#include <algorithm>
#include <numeric>

namespace dcas {

namespace {

struct SparseTerm {
    Monomial e;
    long offset;
    Rat c;
};

}  // namespace

PowerSeries diagonal(const RationalFunction& r, int N, bool force) {
    if (N < 0) throw Error(Errc::InvalidArgument, "negative order");
    const int k = static_cast<int>(r.vars().size());
    if (k == 0) throw Error(Errc::InvalidArgument, "diagonal of a constant");
    if (k >= 4 && k * N > kDiagonalDegreeGuard && !force)
        throw Error(Errc::TooLarge, "total degree " + std::to_string(k * N) + " exceeds " +
                                        std::to_string(kDiagonalDegreeGuard) + " for " + std::to_string(k) +
                                        " variables; pass force to override");
    const Rat den0 = r.den().constant_term();
    if (den0 == 0) throw Error(Errc::NotExpandable, "denominator vanishes at the origin");

    // Exponents above N in any variable never feed a diagonal coefficient,
    // since every term of Den has nonnegative exponents. Keep the box [0, N]^k.
    const long side = N + 1;
    long size = 1;
    for (int i = 0; i < k; ++i) {
        if (size > 200'000'000L / side) throw Error(Errc::TooLarge, "expansion box too large");
        size *= side;
    }
    std::vector<long> stride(k);
    for (int i = 0, s = 1; i < k; ++i, s *= side) stride[i] = s;
    auto offset_of = [&](const Monomial& m) {
        long o = 0;
        for (int i = 0; i < k; ++i) o += m[i] * stride[i];
        return o;
    };
    auto in_box = [&](const Monomial& m) { return std::all_of(m.begin(), m.end(), [&](int e) { return e <= N; }); };

    std::vector<SparseTerm> den;
    for (const auto& [m, c] : r.den().terms())
        if (in_box(m) && std::any_of(m.begin(), m.end(), [](int e) { return e > 0; }))
            den.push_back({m, offset_of(m), c});
    std::vector<Rat> T(size);
    for (const auto& [m, c] : r.num().terms())
        if (in_box(m)) T[offset_of(m)] = c;

    // T = Num / Den by the graded recurrence
    //   T_m = (Num_m - sum_{e != 0} Den_e T_{m-e}) / Den_0.
    // Each T_{m-e} has a smaller linear index than T_m, so a linear sweep of
    // the box visits the total degrees in a valid order.
    const Rat inv0 = 1 / den0;
    Monomial cur(k, 0);
    Rat acc;
    for (long idx = 0; idx < size; ++idx) {
        acc = T[idx];
        for (const auto& t : den) {
            bool fits = true;
            for (int i = 0; i < k && fits; ++i) fits = t.e[i] <= cur[i];
            if (!fits) continue;
            const Rat& prev = T[idx - t.offset];
            if (prev != 0) acc -= t.c * prev;
        }
        T[idx] = acc * inv0;
        for (int i = 0; i < k; ++i) {
            if (++cur[i] < side) break;
            cur[i] = 0;
        }
    }

    const long diag_step = std::accumulate(stride.begin(), stride.end(), 0L);
    PowerSeries s(N, r.vars()[0]);
    for (int m = 0; m <= N; ++m) s[m] = T[m * diag_step];
    return s;
}

MonomialMap MonomialMap::from_columns(const std::vector<std::vector<int>>& columns) {
    MonomialMap map;
    const std::size_t k = columns.size();
    map.m.assign(k, std::vector<int>(k, 0));
    for (std::size_t j = 0; j < k; ++j) {
        if (columns[j].size() != k) throw Error(Errc::InvalidMap, "monomial map must be square");
        for (std::size_t i = 0; i < k; ++i) map.m[i][j] = columns[j][i];
    }
    return map;
}

static Int determinant(std::vector<std::vector<Int>> a) {
    // Bareiss fraction-free elimination.
    const std::size_t n = a.size();
    Int prev = 1, sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            sign = -sign;
        }
        for (std::size_t i = c + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < n; ++j) {
                a[i][j] = a[i][j] * a[c][c] - a[i][c] * a[c][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a[c][c];
    }
    return sign * a[n - 1][n - 1];
}

int MonomialMap::check() const {
    const std::size_t k = m.size();
    std::vector<std::string> problems;
    std::vector<std::vector<Int>> a(k, std::vector<Int>(k));
    for (std::size_t i = 0; i < k; ++i) {
        if (m[i].size() != k) throw Error(Errc::InvalidMap, "monomial map must be square");
        for (std::size_t j = 0; j < k; ++j) {
            if (m[i][j] < 0) problems.push_back("negative exponent");
            a[i][j] = m[i][j];
        }
    }
    if (k > 0 && determinant(a) == 0) problems.push_back("determinant is zero");
    int n = 0;
    for (std::size_t i = 0; i < k; ++i) {
        int s = std::accumulate(m[i].begin(), m[i].end(), 0);
        if (i == 0) n = s;
        else if (s != n) {
            problems.push_back("exponent sums differ (" + std::to_string(n) + " vs " + std::to_string(s) +
                               " for variable " + std::to_string(i) + ")");
            break;
        }
    }
    if (n < 1) problems.push_back("exponent sum must be at least 1");
    for (std::size_t j = 0; j < k && k > 1; ++j) {
        bool all_equal = true;
        for (std::size_t i = 1; i < k; ++i) all_equal = all_equal && m[i][j] == m[0][j];
        if (all_equal) problems.push_back("image " + std::to_string(j) + " is a power of the product");
    }
    if (!problems.empty()) {
        std::string msg;
        for (const auto& p : problems) msg += (msg.empty() ? "" : "; ") + p;
        throw Error(Errc::InvalidMap, msg);
    }
    return n;
}

static MultiPoly map_exponents(const MultiPoly& p, const std::vector<std::vector<int>>& m) {
    MultiPoly out(p.vars());
    const std::size_t k = p.nvars();
    for (const auto& [a, c] : p.terms()) {
        Monomial b(k, 0);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) b[i] += m[i][j] * a[j];
        out.add_term(b, c);
    }
    return out;
}

RationalFunction monomial_transform(const RationalFunction& r, const MonomialMap& map) {
    if (map.size() != r.vars().size()) throw Error(Errc::InvalidMap, "map size does not match variable count");
    map.check();
    return RationalFunction(map_exponents(r.num(), map.m), map_exponents(r.den(), map.m));
}

RationalFunction power_substitution(const RationalFunction& r, int n) {
    if (n < 1) throw Error(Errc::InvalidArgument, "power substitution needs n >= 1");
    const std::size_t k = r.vars().size();
    std::vector<std::vector<int>> m(k, std::vector<int>(k, 0));
    for (std::size_t i = 0; i < k; ++i) m[i][i] = n;
    return RationalFunction(map_exponents(r.num(), m), map_exponents(r.den(), m));
}

}  // namespace dcas
