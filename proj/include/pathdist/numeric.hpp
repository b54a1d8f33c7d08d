#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace pathdist {

// Counts are exact integers of unbounded size; expectations are exact
// rationals. Floating point appears only when rendering output.
using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw ValidationError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Fixed-point decimal rendering with round-half-to-even ties.
inline std::string decimal_string(const Rational& value, int frac_digits = 6) {
    if (frac_digits < 0) throw ValidationError("frac_digits must be >= 0");
    BigInt num = value.get_num();
    const BigInt& den = value.get_den(); // canonical, > 0
    const bool negative = num < 0;
    if (negative) num = -num;

    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(frac_digits));
    const BigInt shifted = num * scale;
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), shifted.get_mpz_t(), den.get_mpz_t());
    const BigInt twice_r = 2 * r;
    const int cmp = mpz_cmp(twice_r.get_mpz_t(), den.get_mpz_t());
    if (cmp > 0 || (cmp == 0 && mpz_odd_p(q.get_mpz_t())))
        q += 1;

    const BigInt int_part = q / scale;
    const BigInt frac_part = q % scale;
    std::string out;
    if (negative && q != 0) out += '-';
    out += int_part.get_str();
    if (frac_digits > 0) {
        const std::string frac = frac_part.get_str();
        out += '.';
        out.append(static_cast<std::size_t>(frac_digits) - frac.size(), '0');
        out += frac;
    }
    return out;
}

// Canonical "num/den"; integral values render without the "/1".
inline std::string fraction_string(const Rational& value) {
    return value.get_str();
}

namespace detail {

inline BigInt pow10(long e) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e));
    return p;
}

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace detail

// Exact parse of "3", "-0.25", "1e-6", "2.5e3" or "num/den".
inline Rational parse_rational(std::string_view text) {
    const std::string s(text);
    const auto fail = [&] { throw ValidationError("cannot parse rational '" + s + "'"); };

    if (s.find('/') != std::string::npos) {
        Rational r;
        if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0) fail();
        if (r.get_den() == 0) fail();
        r.canonicalize();
        return r;
    }

    std::string mantissa = s;
    long exp10 = 0;
    if (const auto epos = s.find_first_of("eE"); epos != std::string::npos) {
        mantissa = s.substr(0, epos);
        const std::string exp_text = s.substr(epos + 1);
        try {
            std::size_t used = 0;
            exp10 = std::stol(exp_text, &used);
            if (used != exp_text.size()) fail();
        } catch (const std::exception&) {
            fail();
        }
    }

    bool negative = false;
    if (!mantissa.empty() && (mantissa.front() == '+' || mantissa.front() == '-')) {
        negative = mantissa.front() == '-';
        mantissa.erase(mantissa.begin());
    }

    std::string digits = mantissa;
    long frac_len = 0;
    if (const auto dot = mantissa.find('.'); dot != std::string::npos) {
        digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
        frac_len = static_cast<long>(mantissa.size() - dot - 1);
    }
    if (!detail::all_digits(digits)) fail();

    BigInt num(digits, 10);
    BigInt den = 1;
    const long net = exp10 - frac_len;
    if (net >= 0)
        num *= detail::pow10(net);
    else
        den = detail::pow10(-net);
    if (negative) num = -num;
    return make_rational(num, den);
}

} // namespace pathdist
