#pragma once
// Shared helpers for the unit and property tests. The oracles here are
// deliberately naive and share no code with the library algorithms.

#include "dcas/multipoly.hpp"
#include "dcas/series.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace dcas::test {

// Seed given with --seed=N on the test command line, or the fixed default.
std::uint64_t seed();

// Naive multivariate Taylor expansion of num/den: den = c - M with c != 0,
// 1/den = sum_k M^k / c^(k+1), truncated to exponents <= N in every variable.
// Returns the diagonal coefficients a_{m,...,m}, m = 0..N.
inline std::vector<Rat> brute_diagonal(const MultiPoly& num, const MultiPoly& den, int N) {
    using Box = std::map<std::vector<int>, Rat>;
    const std::size_t k = den.nvars();
    auto clip = [&](const Box& b) {
        Box out;
        for (const auto& [m, c] : b) {
            bool ok = true;
            for (int e : m) ok = ok && e <= N;
            if (ok && c != 0) out[m] = c;
        }
        return out;
    };
    auto mul = [&](const Box& a, const Box& b) {
        Box out;
        for (const auto& [ma, ca] : a)
            for (const auto& [mb, cb] : b) {
                std::vector<int> m(k);
                bool ok = true;
                for (std::size_t i = 0; i < k; ++i) {
                    m[i] = ma[i] + mb[i];
                    ok = ok && m[i] <= N;
                }
                if (ok) out[m] += ca * cb;
            }
        return clip(out);
    };
    Rat c = den.constant_term();
    Box M, nb;
    for (const auto& [m, v] : den.terms())
        if (m != std::vector<int>(k, 0)) M[m] = -v / c;
    for (const auto& [m, v] : num.terms()) nb[m] = v / c;
    M = clip(M);
    // Every monomial of M has total degree >= 1, so k*N + 1 powers suffice.
    Box sum, term = clip(nb);
    for (int it = 0; it <= static_cast<int>(k) * N && !term.empty(); ++it) {
        for (const auto& [m, v] : term) sum[m] += v;
        term = mul(term, M);
    }
    std::vector<Rat> out(N + 1);
    for (int m = 0; m <= N; ++m) {
        auto it = sum.find(std::vector<int>(k, m));
        if (it != sum.end()) out[m] = it->second;
    }
    return out;
}

inline Int factorial(unsigned n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int binomial(unsigned n, unsigned k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// (q choose k) for rational q.
inline Rat rat_binomial(const Rat& q, unsigned k) {
    Rat r = 1;
    for (unsigned i = 0; i < k; ++i) r = r * (q - i) / (i + 1);
    return r;
}

// Term-by-term Pochhammer products, no ratio recurrence.
inline Rat hypergeom_term(const std::vector<Rat>& upper, const std::vector<Rat>& lower, unsigned n) {
    auto poch = [](const Rat& a, unsigned n) {
        Rat r = 1;
        for (unsigned i = 0; i < n; ++i) r *= a + i;
        return r;
    };
    Rat num = 1, den = factorial(n);
    for (const auto& a : upper) num *= poch(a, n);
    for (const auto& b : lower) den *= poch(b, n);
    return num / den;
}

inline std::vector<Rat> ints(std::initializer_list<const char*> v) {
    std::vector<Rat> out;
    for (const char* s : v) out.emplace_back(Rat(s));
    return out;
}

}  // namespace dcas::test
