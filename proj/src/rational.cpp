#include "ctx/rational.hpp"

#include "ctx/errors.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

namespace ctx {

std::string rational_to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ValidationError("empty rational literal");
    auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            BigInt num(text.substr(0, slash));
            BigInt den(text.substr(slash + 1));
            if (den == 0) throw ValidationError("zero denominator in '" + text + "'");
            return Rational(num, den);
        }
        auto dot = text.find('.');
        if (dot == std::string::npos) return Rational(BigInt(text));
        // Decimal literal: shift the point and divide by the matching power of ten.
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        std::size_t frac_len = text.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+")
            throw ValidationError("malformed rational literal '" + text + "'");
        BigInt den = 1;
        for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
        return Rational(BigInt(digits), den);
    } catch (const std::runtime_error& e) {
        throw ValidationError("malformed rational literal '" + text + "': " + e.what());
    }
}

Rational rationalize(double x, std::uint64_t max_denominator) {
    if (!std::isfinite(x)) throw ValidationError("cannot rationalize non-finite value");
    if (max_denominator == 0) throw ValidationError("denominator cap must be positive");
    const bool negative = x < 0;
    double t = std::fabs(x);
    const BigInt cap = max_denominator;

    // Continued-fraction convergents h/k; stop when the denominator would
    // exceed the cap and fall back to the best semiconvergent.
    BigInt h0 = 0, k0 = 1;  // previous convergent
    BigInt h1 = 1, k1 = 0;  // current convergent
    double rem = t;
    for (int step = 0; step < 64; ++step) {
        double a_floor = std::floor(rem);
        if (a_floor > 1e18) break;  // next convergent already past any sane cap
        BigInt a(static_cast<long long>(a_floor));
        BigInt h2 = a * h1 + h0;
        BigInt k2 = a * k1 + k0;
        if (k2 > cap) {
            // Largest admissible semiconvergent coefficient.
            BigInt a_lim = (cap - k0) / k1;
            if (a_lim > 0) {
                BigInt hs = a_lim * h1 + h0;
                BigInt ks = a_lim * k1 + k0;
                double conv = k1 == 0 ? std::numeric_limits<double>::infinity()
                                      : to_double(Rational(h1, k1));
                double semi = to_double(Rational(hs, ks));
                if (std::fabs(semi - t) < std::fabs(conv - t)) {
                    h1 = hs;
                    k1 = ks;
                }
            }
            break;
        }
        h0 = h1; k0 = k1;
        h1 = h2; k1 = k2;
        double frac = rem - a_floor;
        if (frac < 1e-18) break;  // exact (within double resolution)
        rem = 1.0 / frac;
    }
    if (k1 == 0) return Rational(0);
    Rational result(h1, k1);
    return negative ? Rational(-result) : result;
}

double to_double(const Rational& r) {
    return r.convert_to<double>();
}

Rational rational_sum(const std::vector<Rational>& values) {
    Rational total = 0;
    for (const auto& v : values) total += v;
    return total;
}

}  // namespace ctx
