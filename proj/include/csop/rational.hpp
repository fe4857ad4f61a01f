#pragma once

#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>

namespace csop {

// Arbitrary-precision rational. mpq_class keeps values canonical
// (positive denominator, lowest terms) as long as inputs are canonical.
using Rational = mpq_class;

inline Rational rational_from(long num, long den = 1) {
    if (den == 0) {
        throw std::domain_error("rational_from: zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Complex number with rational real and imaginary parts.
struct GaussianRational {
    Rational re{0};
    Rational im{0};

    GaussianRational() = default;
    GaussianRational(long n) : re(n), im(0) {}
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational from_fractions(long re_num, long re_den,
                                           long im_num = 0, long im_den = 1) {
        return {rational_from(re_num, re_den), rational_from(im_num, im_den)};
    }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }

    // |z|^2, exact.
    Rational norm() const { return re * re + im * im; }

    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

    GaussianRational operator-() const { return {-re, -im}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        Rational n = o.norm();
        if (n == 0) {
            throw std::domain_error("GaussianRational: division by zero");
        }
        Rational r = (re * o.re + im * o.im) / n;
        Rational i = (im * o.re - re * o.im) / n;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) {
        return a += b;
    }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) {
        return a -= b;
    }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) {
        return a *= b;
    }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) {
        return a /= b;
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
        return !(a == b);
    }
};

inline GaussianRational conjugate(const GaussianRational& z) { return z.conj(); }
inline bool scalar_is_zero(const GaussianRational& z) { return z.is_zero(); }

inline std::complex<double> conjugate(const std::complex<double>& z) { return std::conj(z); }
inline bool scalar_is_zero(const std::complex<double>& z) { return z == 0.0; }

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline std::string to_string(const GaussianRational& z) {
    if (z.im == 0) {
        return z.re.get_str();
    }
    Rational mag = z.im < 0 ? Rational(-z.im) : z.im;
    return z.re.get_str() + (z.im < 0 ? "-" : "+") + mag.get_str() + "i";
}

/// Decides sqrt(p) + sqrt(q) <= bound exactly, for rationals p, q >= 0.
/// Squaring twice reduces the comparison to rational inequalities:
///   sqrt(p)+sqrt(q) <= r  <=>  t := r^2-p-q >= 0  and  4pq <= t^2.
inline bool sqrt_sum_within(const Rational& p, const Rational& q, const Rational& bound) {
    if (p < 0 || q < 0) {
        throw std::domain_error("sqrt_sum_within: negative radicand");
    }
    if (bound < 0) {
        return false;
    }
    Rational t = bound * bound - p - q;
    if (t < 0) {
        return false;
    }
    return 4 * p * q <= t * t;
}

}  // namespace csop
