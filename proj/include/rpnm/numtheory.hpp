#pragma once

// Exact arithmetic substrate: unbounded integers, rationals in lowest terms,
// Gaussian integers and Gaussian rationals, and nearest-integer distances.
//
// Everything here is pure and value-semantic; all operations are safe for
// unrestricted concurrent use.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "rpnm/errors.hpp"

namespace rpnm {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

// Exact conversion; every finite double is a dyadic rational.
inline Rational rational_from_double(double x)
{
    if (!std::isfinite(x)) throw std::domain_error("rational_from_double: non-finite input");
    return Rational(x);
}

inline BigInt floor_div(const BigInt& a, const BigInt& b)
{
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline BigInt rational_floor(const Rational& x)
{
    return floor_div(numerator(x), denominator(x));
}

// Distance from x to the nearest integer, in [0, 1/2]. The float path uses
// IEEE remainder (round-half-to-even); the exact path uses floor arithmetic.
inline double nearest_int_dist(double x)
{
    if (!std::isfinite(x)) throw std::domain_error("nearest_int_dist: non-finite input");
    return std::fabs(std::remainder(x, 1.0));
}

inline Rational nearest_int_dist(const Rational& x)
{
    Rational frac = x - Rational(rational_floor(x));
    Rational comp = 1 - frac;
    return frac <= comp ? frac : comp;
}

inline BigInt abs_big(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

// z = re + im*i with unbounded integer components.
struct GaussianInt {
    BigInt re{0};
    BigInt im{0};

    GaussianInt() = default;
    GaussianInt(BigInt r, BigInt i) : re(std::move(r)), im(std::move(i)) {}
    explicit GaussianInt(long long r, long long i = 0) : re(r), im(i) {}

    bool is_zero() const { return re == 0 && im == 0; }

    GaussianInt conj() const { return {re, BigInt(-im)}; }

    friend GaussianInt operator+(const GaussianInt& a, const GaussianInt& b)
    {
        return {BigInt(a.re + b.re), BigInt(a.im + b.im)};
    }
    friend GaussianInt operator-(const GaussianInt& a, const GaussianInt& b)
    {
        return {BigInt(a.re - b.re), BigInt(a.im - b.im)};
    }
    friend GaussianInt operator-(const GaussianInt& a) { return {BigInt(-a.re), BigInt(-a.im)}; }
    friend GaussianInt operator*(const GaussianInt& a, const GaussianInt& b)
    {
        return {BigInt(a.re * b.re - a.im * b.im), BigInt(a.re * b.im + a.im * b.re)};
    }
    friend bool operator==(const GaussianInt& a, const GaussianInt& b)
    {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianInt& a, const GaussianInt& b) { return !(a == b); }

    // |z|^2 = re^2 + im^2, exact.
    BigInt norm() const { return re * re + im * im; }

    std::string str() const
    {
        return re.str() + (im < 0 ? "" : "+") + im.str() + "i";
    }
};

// |z|_inf = max(|re z|, |im z|).
inline BigInt gaussian_linf(const GaussianInt& z)
{
    BigInt a = abs_big(z.re), b = abs_big(z.im);
    return a >= b ? a : b;
}

inline GaussianInt gaussian_pow(GaussianInt base, unsigned e)
{
    GaussianInt acc(1, 0);
    for (unsigned k = 0; k < e; ++k) acc = acc * base;
    return acc;
}

// Element of Q(i): exact complex rational arithmetic.
struct ComplexRational {
    Rational re{0};
    Rational im{0};

    ComplexRational() = default;
    ComplexRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    explicit ComplexRational(const GaussianInt& z) : re(z.re), im(z.im) {}

    bool is_zero() const { return re == 0 && im == 0; }
    ComplexRational conj() const { return {re, Rational(-im)}; }

    friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b)
    {
        return {Rational(a.re + b.re), Rational(a.im + b.im)};
    }
    friend ComplexRational operator-(const ComplexRational& a, const ComplexRational& b)
    {
        return {Rational(a.re - b.re), Rational(a.im - b.im)};
    }
    friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b)
    {
        return {Rational(a.re * b.re - a.im * b.im), Rational(a.re * b.im + a.im * b.re)};
    }
    friend ComplexRational operator/(const ComplexRational& a, const ComplexRational& b)
    {
        if (b.is_zero()) throw std::domain_error("ComplexRational: division by zero");
        Rational n = b.re * b.re + b.im * b.im;
        return {Rational((a.re * b.re + a.im * b.im) / n),
                Rational((a.im * b.re - a.re * b.im) / n)};
    }
    friend bool operator==(const ComplexRational& a, const ComplexRational& b)
    {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const ComplexRational& a, const ComplexRational& b) { return !(a == b); }

    bool is_gaussian_integer() const
    {
        return denominator(re) == 1 && denominator(im) == 1;
    }
};

// Exact a/q over Q(i); throws on q = 0. Satisfies gaussian_div(a,q) * q == a.
inline ComplexRational gaussian_div(const GaussianInt& a, const GaussianInt& q)
{
    if (q.is_zero()) throw std::domain_error("gaussian_div: zero denominator");
    BigInt n = q.norm();
    return {Rational(a.re * q.re + a.im * q.im, n), Rational(a.im * q.re - a.re * q.im, n)};
}

} // namespace rpnm
