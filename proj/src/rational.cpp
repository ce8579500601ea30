#include "mclimb/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace mclimb {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

[[noreturn]] void bad_rational(std::string_view text) {
    throw std::invalid_argument("not an exact rational: '" + std::string(text) + "'");
}

Rational parse_decimal(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_part = s.substr(e + 1);
        bool exp_negative = false;
        if (!exp_part.empty() && (exp_part.front() == '-' || exp_part.front() == '+')) {
            exp_negative = exp_part.front() == '-';
            exp_part.remove_prefix(1);
        }
        if (!all_digits(exp_part) || exp_part.size() > 6) bad_rational(text);
        exponent = std::stol(std::string(exp_part));
        if (exp_negative) exponent = -exponent;
        s = s.substr(0, e);
    }
    std::string digits;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = s.substr(0, dot);
        std::string_view frac_part = s.substr(dot + 1);
        if (int_part.empty() && frac_part.empty()) bad_rational(text);
        if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)))
            bad_rational(text);
        digits = std::string(int_part) + std::string(frac_part);
        exponent -= static_cast<long>(frac_part.size());
    } else {
        if (!all_digits(s)) bad_rational(text);
        digits = std::string(s);
    }
    BigInt mantissa(digits, 10);
    if (negative) mantissa = -mantissa;
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
    Rational result = exponent >= 0 ? Rational(mantissa * scale) : Rational(mantissa, scale);
    result.canonicalize();
    return result;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) bad_rational(text);
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return parse_decimal(text);
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    std::string_view num_digits = num;
    if (!num_digits.empty() && (num_digits.front() == '-' || num_digits.front() == '+')) num_digits.remove_prefix(1);
    if (!all_digits(num_digits) || !all_digits(den)) bad_rational(text);
    BigInt d(std::string(den), 10);
    if (d == 0) bad_rational(text);
    BigInt p(std::string(num_digits), 10);
    if (num.front() == '-') p = -p;
    Rational result(p, d);
    result.canonicalize();
    return result;
}

std::string to_string(const Rational& q) {
    Rational r = q;
    r.canonicalize();
    return r.get_str(10);
}

long double to_long_double(const Rational& q) {
    if (q == 0) return 0.0L;
    long num_exp = 0;
    long den_exp = 0;
    double num = mpz_get_d_2exp(&num_exp, q.get_num_mpz_t());
    double den = mpz_get_d_2exp(&den_exp, q.get_den_mpz_t());
    return std::ldexp(static_cast<long double>(num) / static_cast<long double>(den),
                      static_cast<int>(num_exp - den_exp));
}

long double log2(const BigInt& x) {
    if (x <= 0) throw std::domain_error("log2 of a non-positive integer");
    long exp = 0;
    double mantissa = mpz_get_d_2exp(&exp, x.get_mpz_t());
    return static_cast<long double>(exp) + std::log2(static_cast<long double>(mantissa));
}

long double log2(const Rational& q) {
    if (q <= 0) throw std::domain_error("log2 of a non-positive rational");
    return log2(BigInt(q.get_num())) - log2(BigInt(q.get_den()));
}

BigInt binomial(std::uint64_t m, std::uint64_t r) {
    if (r > m) return 0;
    BigInt result;
    mpz_bin_uiui(result.get_mpz_t(), m, r);
    return result;
}

std::uint64_t ceil_log2(const BigInt& x) {
    if (x < 1) throw std::domain_error("ceil_log2 requires x >= 1");
    if (x == 1) return 0;
    BigInt below = x - 1;
    return mpz_sizeinbase(below.get_mpz_t(), 2);
}

BigInt ceil(const Rational& q) {
    BigInt result;
    mpz_cdiv_q(result.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return result;
}

BigInt floor(const Rational& q) {
    BigInt result;
    mpz_fdiv_q(result.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return result;
}

}  // namespace mclimb
