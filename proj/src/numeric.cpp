#include "apval/numeric.hpp"

#include "apval/errors.hpp"
#include "apval/limits.hpp"

#include <cctype>

namespace apval {

Limits& limits() {
    static Limits instance;
    return instance;
}

Rational normalize(const Int& num, const Int& den) {
    if (den == 0)
        throw domain_error("normalize: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(std::string_view text) {
    const auto bad = [&] {
        return domain_error("not a rational: '" + std::string(text) + "'");
    };
    if (text.empty())
        throw bad();
    for (char c : text)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+'))
            throw bad();
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos)
            return Rational(Int(std::string(text)));
        Int num(std::string(text.substr(0, slash)));
        Int den(std::string(text.substr(slash + 1)));
        return normalize(num, den);
    } catch (const std::invalid_argument&) {
        throw bad();
    }
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

std::string to_decimal_string(const Rational& q, int digits) {
    if (digits < 0)
        throw domain_error("to_decimal_string: negative digit count");
    const bool negative = q < 0;
    Rational a = abs(q);
    // round(|q|·10^d) via floor(2·num·10^d + den) / (2·den)
    Int scale = pow_int(10, static_cast<unsigned long>(digits));
    Int scaled = 2 * a.get_num() * scale + a.get_den();
    Int units = scaled / (2 * a.get_den());
    Int whole = units / scale;
    Int frac = units % scale;
    std::string out = negative && units != 0 ? "-" : "";
    out += whole.get_str();
    if (digits > 0) {
        std::string f = frac.get_str();
        out += "." + std::string(static_cast<std::size_t>(digits) - f.size(), '0') + f;
    }
    return out;
}

Int pow_int(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Rational pow_rational(const Int& base, long exp) {
    if (base == 0)
        throw domain_error("pow_rational: zero base");
    Int p = pow_int(base, static_cast<unsigned long>(exp < 0 ? -exp : exp));
    return exp < 0 ? normalize(1, p) : Rational(p);
}

Rational abs(const Rational& q) {
    return q < 0 ? Rational(-q) : q;
}

Int iroot(const Int& n, unsigned long k) {
    if (n < 0 || k == 0)
        throw domain_error("iroot: need n >= 0 and k >= 1");
    Int r;
    mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

bool perfect_root(const Int& n, unsigned long k, Int& root) {
    if (n < 0 || k == 0)
        throw domain_error("perfect_root: need n >= 0 and k >= 1");
    Int r;
    const bool exact = mpz_root(r.get_mpz_t(), n.get_mpz_t(), k) != 0;
    if (exact)
        root = r;
    return exact;
}

} // namespace apval
