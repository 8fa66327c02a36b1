#include "srg/quadratic.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace srg {

std::pair<BigInt, BigInt> split_square_factor(const BigInt& d) {
    if (sgn(d) <= 0) {
        throw std::domain_error("split_square_factor needs a positive integer");
    }
    BigInt t = 1;
    BigInt e = 1;
    BigInt rest = d;
    for (BigInt p = 2; p * p <= rest; ++p) {
        if (is_perfect_square(rest)) {
            break;
        }
        unsigned long exponent = 0;
        while (rest % p == 0) {
            rest /= p;
            ++exponent;
        }
        if (exponent >= 2) {
            t *= pow(p, exponent / 2);
        }
        if (exponent % 2 == 1) {
            e *= p;
        }
    }
    // rest is either 1, a prime, or a perfect square at this point.
    if (is_perfect_square(rest)) {
        t *= isqrt(rest);
    } else {
        e *= rest;
    }
    return {t, e};
}

QuadraticNumber::QuadraticNumber(BigInt a, BigInt b, BigInt d, BigInt den)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)), den_(std::move(den)) {
    if (sgn(d_) < 0) {
        throw std::domain_error("negative radicand");
    }
    if (den_ == 0) {
        throw std::domain_error("zero denominator");
    }
    canonicalize();
}

QuadraticNumber QuadraticNumber::integer(BigInt v) {
    return QuadraticNumber(std::move(v), 0, 0, 1);
}

void QuadraticNumber::canonicalize() {
    if (b_ != 0 && d_ != 0) {
        auto [t, e] = split_square_factor(d_);
        b_ *= t;
        d_ = e;
        if (d_ == 1) {
            a_ += b_;
            b_ = 0;
        }
    }
    if (b_ == 0 || d_ == 0) {
        b_ = 0;
        d_ = 0;
    }
    if (sgn(den_) < 0) {
        a_ = -a_;
        b_ = -b_;
        den_ = -den_;
    }
    BigInt g = gcd(gcd(a_, b_), den_);
    if (g > 1) {
        a_ /= g;
        b_ /= g;
        den_ /= g;
    }
}

BigInt QuadraticNumber::to_integer() const {
    if (!is_integer()) {
        throw std::domain_error("not an integer: " + to_string());
    }
    return a_;
}

int QuadraticNumber::sign() const {
    const int sa = sgn(a_);
    const int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // Opposite signs: the larger magnitude wins. a^2 == b^2 d is impossible
    // for square-free d > 1.
    return (a_ * a_ > b_ * b_ * d_) ? sa : sb;
}

std::string QuadraticNumber::to_string() const {
    if (b_ == 0) {
        if (den_ == 1) return a_.get_str();
        return a_.get_str() + "/" + den_.get_str();
    }
    std::string body;
    if (a_ != 0) {
        body = a_.get_str();
    }
    BigInt mag = abs(b_);
    if (sgn(b_) < 0) {
        body += "-";
    } else if (!body.empty()) {
        body += "+";
    }
    if (mag != 1) {
        body += mag.get_str() + "*";
    }
    body += "sqrt(" + d_.get_str() + ")";
    if (den_ == 1) return body;
    if (a_ == 0) return body + "/" + den_.get_str();
    return "(" + body + ")/" + den_.get_str();
}

double QuadraticNumber::approx() const {
    return (a_.get_d() + b_.get_d() * std::sqrt(d_.get_d())) / den_.get_d();
}

QuadraticNumber QuadraticNumber::operator-() const {
    QuadraticNumber out = *this;
    out.a_ = -out.a_;
    out.b_ = -out.b_;
    return out;
}

namespace {

BigInt common_radicand(const QuadraticNumber& x, const QuadraticNumber& y) {
    if (x.is_rational()) return y.d();
    if (y.is_rational() || x.d() == y.d()) return x.d();
    throw std::domain_error("radicands differ: " + x.to_string() + " and " + y.to_string());
}

}  // namespace

QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y) {
    BigInt d = common_radicand(x, y);
    return QuadraticNumber(x.a_ * y.den_ + y.a_ * x.den_, x.b_ * y.den_ + y.b_ * x.den_,
                           std::move(d), x.den_ * y.den_);
}

QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y) { return x + (-y); }

QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y) {
    BigInt d = common_radicand(x, y);
    BigInt a = x.a_ * y.a_ + x.b_ * y.b_ * d;
    BigInt b = x.a_ * y.b_ + x.b_ * y.a_;
    return QuadraticNumber(std::move(a), std::move(b), std::move(d), x.den_ * y.den_);
}

bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_ && x.den_ == y.den_;
}

std::strong_ordering operator<=>(const QuadraticNumber& x, const QuadraticNumber& y) {
    const int s = (x - y).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

QuadraticNumber pow(const QuadraticNumber& base, unsigned long exponent) {
    QuadraticNumber result = QuadraticNumber::integer(1);
    QuadraticNumber square = base;
    while (exponent > 0) {
        if (exponent & 1UL) result = result * square;
        exponent >>= 1;
        if (exponent > 0) square = square * square;
    }
    return result;
}

}  // namespace srg
