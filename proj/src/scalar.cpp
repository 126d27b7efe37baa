/*
   Copyright 2026 The polydet Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "polydet/scalar.hpp"

#include <array>
#include <ostream>

namespace polydet {

namespace {

mpz_class parse_integer(std::string_view text) {
    std::string s(text);
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size()) throw Error(ErrorCode::Parse, "empty integer in \"" + s + "\"");
    for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') throw Error(ErrorCode::Parse, "bad integer \"" + s + "\"");
    if (s[0] == '+') s.erase(0, 1);
    return mpz_class(s, 10);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t acc = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1U) acc = mul_mod(acc, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1U;
    }
    return acc;
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(const mpq_class& q) : q_(q) {
    if (q_.get_den() == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
    q_.canonicalize();
}

Rational Rational::inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of 0");
    return Rational(mpq_class(1) / q_);
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw Error(ErrorCode::DivisionByZero, to_string() + " / 0");
    q_ /= rhs.q_;
    return *this;
}

std::string Rational::to_string() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

ModP ModP::inverse() const {
    if (v_ == 0) throw Error(ErrorCode::DivisionByZero, "inverse of 0 in F_" + std::to_string(p_));
    // extended Euclid on (v, p); coefficients stay below p in magnitude
    __int128 r0 = p_, r1 = v_, t0 = 0, t1 = 1;
    while (r1 != 0) {
        const __int128 q = r0 / r1;
        const __int128 r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        const __int128 t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (t0 < 0) t0 += p_;
    return ModP(static_cast<std::uint64_t>(t0), p_);
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }
std::ostream& operator<<(std::ostream& os, const ModP& x) { return os << x.value(); }

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    constexpr std::array<std::uint64_t, 12> bases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (auto b : bases) {
        if (n % b == 0) return n == b;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (auto b : bases) {
        std::uint64_t x = pow_mod(b, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

mpz_class binomial(unsigned long k, unsigned long i) {
    if (i > k) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), k, i);
    return out;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p >= kMaxModulus) throw Error(ErrorCode::NotPrime, std::to_string(p) + " exceeds 2^62");
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
}

ModP PrimeField::from_int(long long v) const {
    const auto p = static_cast<long long>(p_);
    long long r = v % p;
    if (r < 0) r += p;
    return ModP(static_cast<std::uint64_t>(r), p_);
}

ModP PrimeField::from_mpz(const mpz_class& v) const {
    return ModP(mpz_fdiv_ui(v.get_mpz_t(), p_), p_);
}

ModP PrimeField::parse(std::string_view text) const {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return from_mpz(parse_integer(text));
    return from_mpz(parse_integer(text.substr(0, slash))) /
           from_mpz(parse_integer(text.substr(slash + 1)));
}

ScalarDomain ScalarDomain::parse(std::string_view text) {
    if (text == "rational") return {};
    if (text.starts_with("fp:")) {
        const mpz_class p = parse_integer(text.substr(3));
        if (p < 2 || p >= mpz_class(std::to_string(PrimeField::kMaxModulus)))
            throw Error(ErrorCode::NotPrime, "modulus " + p.get_str() + " out of range");
        const auto modulus = static_cast<std::uint64_t>(mpz_get_ui(p.get_mpz_t()));
        if (!is_prime(modulus)) throw Error(ErrorCode::NotPrime, p.get_str() + " is not prime");
        return {Kind::PrimeField, modulus};
    }
    throw Error(ErrorCode::Parse, "domain must be \"rational\" or \"fp:<p>\", got \"" +
                                      std::string(text) + "\"");
}

std::string ScalarDomain::to_string() const {
    return kind == Kind::Rational ? "rational" : "fp:" + std::to_string(modulus);
}

}  // namespace polydet
