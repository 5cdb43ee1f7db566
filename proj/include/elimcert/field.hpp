/*
   Copyright 2026 The elimcert authors

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

#ifndef ELIMCERT_FIELD_HPP
#define ELIMCERT_FIELD_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "elimcert/errors.hpp"

namespace elimcert {

// Smallest modulus accepted by default for prime fields. Small characteristics
// make the randomized genericity draws unreliable, so we refuse them unless the
// caller lowers the floor explicitly.
inline constexpr std::uint64_t kDefaultModulusFloor = std::uint64_t{1} << 20;

// Moduli must fit in 62 bits so that a+b and the __int128 products stay exact.
inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

bool is_prime_u64(std::uint64_t n);

enum class FieldKind { Rationals, PrimeField };

// Runtime descriptor of the coefficient field. Polynomials carry one of these
// so that even the zero polynomial knows which field it lives in.
struct FieldDesc {
    FieldKind kind = FieldKind::Rationals;
    std::uint64_t modulus = 0; // prime-field case only

    static FieldDesc rationals() { return FieldDesc{FieldKind::Rationals, 0}; }

    static FieldDesc prime_field(std::uint64_t p, std::uint64_t modulus_floor = kDefaultModulusFloor) {
        if (p >= kMaxModulus)
            throw StructuralError("prime-field modulus too large (must be < 2^62)");
        if (p < modulus_floor)
            throw StructuralError("prime-field modulus " + std::to_string(p) + " below the floor " +
                                  std::to_string(modulus_floor));
        if (!is_prime_u64(p))
            throw StructuralError("prime-field modulus " + std::to_string(p) + " is not prime");
        return FieldDesc{FieldKind::PrimeField, p};
    }

    bool operator==(const FieldDesc& o) const { return kind == o.kind && modulus == o.modulus; }
    bool operator!=(const FieldDesc& o) const { return !(*this == o); }

    std::string str() const {
        return kind == FieldKind::Rationals ? std::string("q") : "fp " + std::to_string(modulus);
    }
};

// Exact rational coefficient. Always reduced, denominator positive.
class Rational {
  public:
    Rational() : v_(0) {}
    explicit Rational(long n) : v_(n) {}
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
        if (den == 0)
            throw StructuralError("rational with zero denominator");
        v_.canonicalize();
    }
    static Rational from_mpq(mpq_class q) {
        q.canonicalize();
        Rational r;
        r.v_ = std::move(q);
        return r;
    }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_negative() const { return v_ < 0; }

    Rational zero_like() const { return Rational(); }
    Rational one_like() const { return Rational(1); }

    Rational operator-() const { return from_mpq(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return from_mpq(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return from_mpq(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return from_mpq(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero())
            throw StructuralError("division by zero");
        return from_mpq(mpq_class(v_ / o.v_));
    }
    Rational& operator+=(const Rational& o) {
        v_ += o.v_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        v_ -= o.v_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        v_ *= o.v_;
        return *this;
    }

    Rational inverse() const {
        if (is_zero())
            throw StructuralError("inverse of zero");
        return from_mpq(mpq_class(1 / v_));
    }

    Rational abs() const { return is_negative() ? -*this : *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }

    std::string str() const { return v_.get_str(); }

    const mpq_class& value() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

  private:
    mpq_class v_;
};

// Prime-field coefficient. Each element carries its modulus; mixing moduli is a
// structural error.
class Fp {
  public:
    Fp() : v_(0), p_(0) {}
    Fp(std::uint64_t v, std::uint64_t p) : v_(v % p), p_(p) {}

    static Fp from_int(long long x, std::uint64_t p) {
        long long r = x % static_cast<long long>(p);
        if (r < 0)
            r += static_cast<long long>(p);
        return Fp(static_cast<std::uint64_t>(r), p);
    }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_negative() const { return false; } // canonical residues render without signs

    Fp zero_like() const { return Fp(0, p_); }
    Fp one_like() const { return Fp(1, p_); }

    Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }
    Fp operator+(const Fp& o) const {
        check(o);
        std::uint64_t s = v_ + o.v_;
        if (s >= p_)
            s -= p_;
        return Fp(s, p_);
    }
    Fp operator-(const Fp& o) const {
        check(o);
        return *this + (-o);
    }
    Fp operator*(const Fp& o) const {
        check(o);
        return Fp(static_cast<std::uint64_t>((static_cast<unsigned __int128>(v_) * o.v_) % p_), p_);
    }
    Fp operator/(const Fp& o) const { return *this * o.inverse(); }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    Fp inverse() const;

    Fp abs() const { return *this; }

    bool operator==(const Fp& o) const { return v_ == o.v_ && p_ == o.p_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    std::string str() const { return std::to_string(v_); }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }

  private:
    void check(const Fp& o) const {
        if (p_ != o.p_)
            throw StructuralError("prime-field modulus mismatch");
    }
    std::uint64_t v_;
    std::uint64_t p_;
};

// Builds a field element from a machine integer and a field descriptor.
template <class K>
K scalar_from_int(long long x, const FieldDesc& desc);

template <>
inline Rational scalar_from_int<Rational>(long long x, const FieldDesc&) {
    return Rational(static_cast<long>(x));
}

template <>
inline Fp scalar_from_int<Fp>(long long x, const FieldDesc& desc) {
    if (desc.kind != FieldKind::PrimeField)
        throw StructuralError("prime-field scalar requested from a non prime-field descriptor");
    return Fp::from_int(x, desc.modulus);
}

} // namespace elimcert

#endif
