#include "dcas/rational.hpp"

#include "dcas/error.hpp"

#include <cctype>

namespace dcas {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::ZeroDenominator: return "ZeroDenominator";
        case Errc::InexactDivision: return "InexactDivision";
        case Errc::Parse: return "ParseError";
        case Errc::UnknownIdentifier: return "UnknownIdentifier";
        case Errc::VariableMismatch: return "VariableMismatch";
        case Errc::NotDependent: return "NotDependent";
        case Errc::NotQuadratic: return "NotQuadratic";
        case Errc::NonzeroConstantPullback: return "NonzeroConstantPullback";
        case Errc::ConstantTerm: return "ConstantTerm";
        case Errc::IrrationalConstant: return "IrrationalConstant";
        case Errc::InvalidParameter: return "InvalidParameter";
        case Errc::NotExpandable: return "NotExpandable";
        case Errc::TooLarge: return "TooLarge";
        case Errc::InvalidMap: return "InvalidMap";
        case Errc::DiscriminantDegreeTooHigh: return "DiscriminantDegreeTooHigh";
        case Errc::DegenerateCurve: return "DegenerateCurve";
        case Errc::InsufficientTerms: return "InsufficientTerms";
        case Errc::WrongOrder: return "WrongOrder";
        case Errc::SeriesTooShort: return "SeriesTooShort";
        case Errc::UnknownCase: return "UnknownCase";
        case Errc::Registry: return "RegistryError";
        case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Error";
}

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw Error(Errc::ZeroDenominator, "rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Int& z) { return z.get_str(); }

std::string to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

static bool parse_int(const std::string& s, Int& out) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (std::size_t k = i; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    std::string t = s[0] == '+' ? s.substr(1) : s;
    return out.set_str(t, 10) == 0;
}

Rat parse_rat(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    auto slash = s.find('/');
    Int n, d = 1;
    bool ok = slash == std::string::npos ? parse_int(s, n)
                                         : parse_int(s.substr(0, slash), n) &&
                                               parse_int(s.substr(slash + 1), d);
    if (!ok) throw Error(Errc::Parse, "not a rational: '" + raw + "'");
    return make_rat(n, d);
}

Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

bool exact_root(const Int& a, unsigned long k, Int& out) {
    if (a < 0) return false;
    return mpz_root(out.get_mpz_t(), a.get_mpz_t(), k) != 0;
}

}  // namespace dcas
