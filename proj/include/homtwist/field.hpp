#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace homtwist {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// Scalar domain: the rationals, or a prime field of odd size p < 2^31.
class Field {
public:
    static Field rationals() { return Field(0); }
    static Field prime(std::int64_t p);

    bool isRationals() const { return p_ == 0; }
    bool isPrime() const { return p_ != 0; }
    std::int64_t characteristic() const { return p_; }

    bool operator==(const Field& o) const { return p_ == o.p_; }
    bool operator!=(const Field& o) const { return p_ != o.p_; }

    std::string describe() const;

private:
    explicit Field(std::int64_t p) : p_(p) {}
    std::int64_t p_;
};

/// Exact field element. Rationals are kept in lowest terms with positive
/// denominator (GMP canonical form); prime-field residues live in [0, p).
class FieldScalar {
public:
    FieldScalar() : p_(0) {}  // zero over the rationals

    static FieldScalar zero(const Field& f);
    static FieldScalar one(const Field& f);
    static FieldScalar ofInt(const Field& f, long long v);
    static FieldScalar ofRational(const Field& f, const BigInt& num, const BigInt& den);
    /// Accepts "n" or "n/d" with optional leading '-'.
    static FieldScalar parse(const Field& f, const std::string& text);

    Field field() const { return p_ == 0 ? Field::rationals() : Field::prime(p_); }

    bool isZero() const;
    bool isOne() const;

    FieldScalar operator-() const;
    FieldScalar& operator+=(const FieldScalar& o);
    FieldScalar& operator-=(const FieldScalar& o);
    FieldScalar& operator*=(const FieldScalar& o);
    FieldScalar& operator/=(const FieldScalar& o);
    FieldScalar inverse() const;

    friend FieldScalar operator+(FieldScalar a, const FieldScalar& b) { return a += b; }
    friend FieldScalar operator-(FieldScalar a, const FieldScalar& b) { return a -= b; }
    friend FieldScalar operator*(FieldScalar a, const FieldScalar& b) { return a *= b; }
    friend FieldScalar operator/(FieldScalar a, const FieldScalar& b) { return a /= b; }

    bool operator==(const FieldScalar& o) const;
    bool operator!=(const FieldScalar& o) const { return !(*this == o); }

    /// "n" or "n/d", lowest terms; prime-field residues print as integers.
    std::string str() const;
    /// (numerator, denominator) as decimal strings; denominator "1" over F_p.
    std::pair<std::string, std::string> numeratorDenominator() const;

    const Rational& asRational() const;
    std::int64_t residue() const;

private:
    void requireSameField(const FieldScalar& o) const;

    Rational rat_;          // value when p_ == 0
    std::int64_t res_ = 0;  // residue in [0, p_) when p_ != 0
    std::int64_t p_ = 0;    // 0 means rationals
};

}  // namespace homtwist
