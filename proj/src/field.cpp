#include "homtwist/field.hpp"

namespace homtwist {

namespace {

bool isPrimeInt(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::int64_t modReduce(std::int64_t v, std::int64_t p) {
    std::int64_t r = v % p;
    return r < 0 ? r + p : r;
}

// Extended Euclid; assumes 0 < a < p, gcd(a, p) = 1.
std::int64_t modInverse(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, newT = 1, r = p, newR = a;
    while (newR != 0) {
        std::int64_t q = r / newR;
        std::int64_t tmp = t - q * newT;
        t = newT;
        newT = tmp;
        tmp = r - q * newR;
        r = newR;
        newR = tmp;
    }
    if (r != 1) throw std::logic_error("modInverse: not invertible");
    return modReduce(t, p);
}

std::int64_t mpzMod(const BigInt& v, std::int64_t p) {
    BigInt r = v % p;
    std::int64_t s = static_cast<std::int64_t>(r);
    return s < 0 ? s + p : s;
}

}  // namespace

Field Field::prime(std::int64_t p) {
    if (p < 2 || p >= (std::int64_t(1) << 31))
        throw std::invalid_argument("Field::prime: p must satisfy 2 <= p < 2^31");
    if (!isPrimeInt(p))
        throw std::invalid_argument("Field::prime: " + std::to_string(p) + " is not prime");
    return Field(p);
}

std::string Field::describe() const {
    return p_ == 0 ? "Q" : "F_" + std::to_string(p_);
}

FieldScalar FieldScalar::zero(const Field& f) {
    FieldScalar s;
    s.p_ = f.characteristic();
    return s;
}

FieldScalar FieldScalar::one(const Field& f) {
    return ofInt(f, 1);
}

FieldScalar FieldScalar::ofInt(const Field& f, long long v) {
    FieldScalar s;
    s.p_ = f.characteristic();
    if (s.p_ == 0)
        s.rat_ = Rational(BigInt(v));
    else
        s.res_ = modReduce(v, s.p_);
    return s;
}

FieldScalar FieldScalar::ofRational(const Field& f, const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("FieldScalar: zero denominator");
    FieldScalar s;
    s.p_ = f.characteristic();
    if (s.p_ == 0) {
        // Division of mpz-backed rationals canonicalizes (lowest terms,
        // positive denominator); the raw (num, den) constructor does not.
        s.rat_ = Rational(num) / Rational(den);
    } else {
        std::int64_t n = mpzMod(num, s.p_);
        std::int64_t d = mpzMod(den, s.p_);
        if (d == 0) throw std::invalid_argument("FieldScalar: denominator divisible by p");
        s.res_ = (n * modInverse(d, s.p_)) % s.p_;
    }
    return s;
}

FieldScalar FieldScalar::parse(const Field& f, const std::string& text) {
    if (text.empty()) throw std::invalid_argument("FieldScalar::parse: empty string");
    auto slash = text.find('/');
    auto checkInt = [&](const std::string& t) {
        if (t.empty()) throw std::invalid_argument("FieldScalar::parse: bad integer in '" + text + "'");
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) throw std::invalid_argument("FieldScalar::parse: bad integer in '" + text + "'");
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i])))
                throw std::invalid_argument("FieldScalar::parse: bad integer in '" + text + "'");
    };
    if (slash == std::string::npos) {
        checkInt(text);
        return ofRational(f, BigInt(text), BigInt(1));
    }
    std::string ns = text.substr(0, slash), ds = text.substr(slash + 1);
    checkInt(ns);
    checkInt(ds);
    return ofRational(f, BigInt(ns), BigInt(ds));
}

bool FieldScalar::isZero() const {
    return p_ == 0 ? rat_.is_zero() : res_ == 0;
}

bool FieldScalar::isOne() const {
    return p_ == 0 ? rat_ == 1 : res_ == 1;
}

FieldScalar FieldScalar::operator-() const {
    FieldScalar s(*this);
    if (p_ == 0)
        s.rat_ = -s.rat_;
    else
        s.res_ = s.res_ == 0 ? 0 : p_ - s.res_;
    return s;
}

void FieldScalar::requireSameField(const FieldScalar& o) const {
    if (p_ != o.p_)
        throw std::logic_error("FieldScalar: mixed-field arithmetic (" +
                               field().describe() + " vs " + o.field().describe() + ")");
}

FieldScalar& FieldScalar::operator+=(const FieldScalar& o) {
    requireSameField(o);
    if (p_ == 0)
        rat_ += o.rat_;
    else
        res_ = (res_ + o.res_) % p_;
    return *this;
}

FieldScalar& FieldScalar::operator-=(const FieldScalar& o) {
    requireSameField(o);
    if (p_ == 0)
        rat_ -= o.rat_;
    else
        res_ = modReduce(res_ - o.res_, p_);
    return *this;
}

FieldScalar& FieldScalar::operator*=(const FieldScalar& o) {
    requireSameField(o);
    if (p_ == 0)
        rat_ *= o.rat_;
    else
        res_ = (res_ * o.res_) % p_;
    return *this;
}

FieldScalar& FieldScalar::operator/=(const FieldScalar& o) {
    requireSameField(o);
    if (o.isZero()) throw std::domain_error("FieldScalar: division by zero");
    if (p_ == 0)
        rat_ /= o.rat_;
    else
        res_ = (res_ * modInverse(o.res_, p_)) % p_;
    return *this;
}

FieldScalar FieldScalar::inverse() const {
    if (isZero()) throw std::domain_error("FieldScalar: inverse of zero");
    FieldScalar s = one(field());
    s /= *this;
    return s;
}

bool FieldScalar::operator==(const FieldScalar& o) const {
    if (p_ != o.p_) return false;
    return p_ == 0 ? rat_ == o.rat_ : res_ == o.res_;
}

std::string FieldScalar::str() const {
    if (p_ != 0) return std::to_string(res_);
    return rat_.str();
}

std::pair<std::string, std::string> FieldScalar::numeratorDenominator() const {
    if (p_ != 0) return {std::to_string(res_), "1"};
    return {numerator(rat_).str(), denominator(rat_).str()};
}

const Rational& FieldScalar::asRational() const {
    if (p_ != 0) throw std::logic_error("FieldScalar::asRational on prime-field scalar");
    return rat_;
}

std::int64_t FieldScalar::residue() const {
    if (p_ == 0) throw std::logic_error("FieldScalar::residue on rational scalar");
    return res_;
}

}  // namespace homtwist
