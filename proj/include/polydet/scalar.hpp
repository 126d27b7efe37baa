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

#ifndef POLYDET_SCALAR_HPP
#define POLYDET_SCALAR_HPP

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "polydet/error.hpp"

namespace polydet {

/// Exact rational number in lowest terms with a positive denominator.
class Rational {
   public:
    Rational() = default;
    explicit Rational(long value) : q_(value) {}
    explicit Rational(const mpz_class& value) : q_(value) {}
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpq_class& q);

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    const mpq_class& raw() const noexcept { return q_; }

    bool is_zero() const noexcept { return sgn(q_) == 0; }
    int sign() const noexcept { return sgn(q_); }
    Rational inverse() const;

    Rational& operator+=(const Rational& rhs) { q_ += rhs.q_; return *this; }
    Rational& operator-=(const Rational& rhs) { q_ -= rhs.q_; return *this; }
    Rational& operator*=(const Rational& rhs) { q_ *= rhs.q_; return *this; }
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    friend Rational operator-(const Rational& x) { return Rational(mpq_class(-x.q_)); }
    friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.q_ == rhs.q_; }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        const int c = cmp(lhs.q_, rhs.q_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    /// "num/den", or "num" when den = 1.
    std::string to_string() const;
    /// Accepts "num", "num/den" with optional sign; the result is reduced.
    static Rational parse(std::string_view text);

   private:
    mpq_class q_;
};

/// Element of the prime field F_p. The modulus travels with the value so that
/// mixing elements of different fields is detected at run time.
class ModP {
   public:
    ModP() = default;
    /// `value` must already be reduced into [0, modulus).
    ModP(std::uint64_t value, std::uint64_t modulus) : v_(value), p_(modulus) {}

    std::uint64_t value() const noexcept { return v_; }
    std::uint64_t modulus() const noexcept { return p_; }

    bool is_zero() const noexcept { return v_ == 0; }
    ModP inverse() const;

    ModP& operator+=(const ModP& rhs) {
        check(rhs);
        v_ += rhs.v_;
        if (v_ >= p_) v_ -= p_;
        return *this;
    }
    ModP& operator-=(const ModP& rhs) {
        check(rhs);
        v_ = v_ >= rhs.v_ ? v_ - rhs.v_ : v_ + p_ - rhs.v_;
        return *this;
    }
    ModP& operator*=(const ModP& rhs) {
        check(rhs);
        v_ = static_cast<std::uint64_t>(static_cast<unsigned __int128>(v_) * rhs.v_ % p_);
        return *this;
    }
    ModP& operator/=(const ModP& rhs) { return *this *= rhs.inverse(); }

    friend ModP operator+(ModP lhs, const ModP& rhs) { return lhs += rhs; }
    friend ModP operator-(ModP lhs, const ModP& rhs) { return lhs -= rhs; }
    friend ModP operator*(ModP lhs, const ModP& rhs) { return lhs *= rhs; }
    friend ModP operator/(ModP lhs, const ModP& rhs) { return lhs /= rhs; }
    friend ModP operator-(const ModP& x) { return ModP(x.v_ == 0 ? 0 : x.p_ - x.v_, x.p_); }
    friend bool operator==(const ModP& lhs, const ModP& rhs) {
        lhs.check(rhs);
        return lhs.v_ == rhs.v_;
    }

    std::string to_string() const { return std::to_string(v_); }

   private:
    void check(const ModP& rhs) const {
        if (p_ != rhs.p_ || p_ == 0)
            throw Error(ErrorCode::DomainMismatch,
                        "F_" + std::to_string(p_) + " vs F_" + std::to_string(rhs.p_));
    }

    std::uint64_t v_ = 0;
    std::uint64_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Rational& x);
std::ostream& operator<<(std::ostream& os, const ModP& x);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n) noexcept;

/// C(k, i); zero when i > k.
mpz_class binomial(unsigned long k, unsigned long i);

struct RationalField {
    using value_type = Rational;

    Rational zero() const { return Rational(); }
    Rational one() const { return Rational(1L); }
    Rational from_int(long long v) const { return Rational(static_cast<long>(v)); }
    Rational from_mpz(const mpz_class& v) const { return Rational(v); }
    Rational parse(std::string_view text) const { return Rational::parse(text); }
    std::string name() const { return "rational"; }

    bool operator==(const RationalField&) const = default;
};

class PrimeField {
   public:
    using value_type = ModP;

    static constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

    /// Throws NOT_PRIME unless `p` is a prime below 2^62.
    explicit PrimeField(std::uint64_t p);

    std::uint64_t modulus() const noexcept { return p_; }

    ModP zero() const { return ModP(0, p_); }
    ModP one() const { return ModP(1, p_); }
    ModP from_int(long long v) const;
    ModP from_u64(std::uint64_t v) const { return ModP(v % p_, p_); }
    ModP from_mpz(const mpz_class& v) const;
    /// Integers and "num/den" fractions, reduced mod p.
    ModP parse(std::string_view text) const;
    std::string name() const { return "fp:" + std::to_string(p_); }

    bool operator==(const PrimeField&) const = default;

   private:
    std::uint64_t p_;
};

template <class F>
concept ExactField = requires(const F& f, const typename F::value_type& x, long long i,
                              const mpz_class& z, std::string_view s) {
    { f.zero() } -> std::same_as<typename F::value_type>;
    { f.one() } -> std::same_as<typename F::value_type>;
    { f.from_int(i) } -> std::same_as<typename F::value_type>;
    { f.from_mpz(z) } -> std::same_as<typename F::value_type>;
    { f.parse(s) } -> std::same_as<typename F::value_type>;
    { f.name() } -> std::convertible_to<std::string>;
    { x + x } -> std::same_as<typename F::value_type>;
    { x - x } -> std::same_as<typename F::value_type>;
    { x * x } -> std::same_as<typename F::value_type>;
    { x / x } -> std::same_as<typename F::value_type>;
    { -x } -> std::same_as<typename F::value_type>;
    { x == x } -> std::convertible_to<bool>;
    { x.is_zero() } -> std::convertible_to<bool>;
    { x.to_string() } -> std::convertible_to<std::string>;
};

template <ExactField F>
using scalar_t = typename F::value_type;

template <ExactField F>
scalar_t<F> power(const F& field, scalar_t<F> base, std::uint64_t exp) {
    scalar_t<F> acc = field.one();
    while (exp != 0) {
        if (exp & 1U) acc *= base;
        exp >>= 1U;
        if (exp != 0) base *= base;
    }
    return acc;
}

/// (-1)^e as a ring element.
template <ExactField F>
scalar_t<F> sign_power(const F& field, std::uint64_t e) {
    return (e % 2 == 0) ? field.one() : -field.one();
}

/// Coefficient domain selector used by the file formats and the CLI.
struct ScalarDomain {
    enum class Kind { Rational, PrimeField };

    Kind kind = Kind::Rational;
    std::uint64_t modulus = 0;

    /// "rational" or "fp:<p>"; the modulus must be prime.
    static ScalarDomain parse(std::string_view text);
    std::string to_string() const;

    bool operator==(const ScalarDomain&) const = default;
};

}  // namespace polydet

#endif
