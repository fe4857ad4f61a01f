#pragma once

#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "csop/rational.hpp"

namespace csop {

/// Polynomial over the Gaussian rationals, coefficients lowest-degree first.
/// Normal form: trailing zero coefficients stripped, so the zero polynomial
/// has an empty coefficient vector and degree() == -1.
class RationalPoly {
public:
    RationalPoly() = default;
    RationalPoly(std::initializer_list<GaussianRational> coeffs) : c_(coeffs) { strip(); }
    explicit RationalPoly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) {
        strip();
    }

    static RationalPoly constant(GaussianRational v) { return RationalPoly{std::move(v)}; }
    // c0 + c1 z
    static RationalPoly linear(GaussianRational c0, GaussianRational c1) {
        return RationalPoly{std::move(c0), std::move(c1)};
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    GaussianRational coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) {
            return GaussianRational{};
        }
        return c_[static_cast<size_t>(k)];
    }

    GaussianRational eval(const GaussianRational& z) const {
        GaussianRational acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = acc * z + *it;
        }
        return acc;
    }

    RationalPoly conj_coeffs() const {
        std::vector<GaussianRational> out;
        out.reserve(c_.size());
        for (const auto& x : c_) {
            out.push_back(x.conj());
        }
        return RationalPoly(std::move(out));
    }

    RationalPoly pow(unsigned e) const {
        RationalPoly acc = constant(GaussianRational(1));
        for (unsigned i = 0; i < e; ++i) {
            acc = acc * *this;
        }
        return acc;
    }

    friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
        std::vector<GaussianRational> out(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < out.size(); ++i) {
            out[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        }
        return RationalPoly(std::move(out));
    }
    friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) {
        std::vector<GaussianRational> out(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < out.size(); ++i) {
            out[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
        }
        return RationalPoly(std::move(out));
    }
    friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
        if (a.is_zero() || b.is_zero()) {
            return RationalPoly{};
        }
        std::vector<GaussianRational> out(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            for (size_t j = 0; j < b.c_.size(); ++j) {
                out[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return RationalPoly(std::move(out));
    }
    friend RationalPoly operator*(const GaussianRational& s, const RationalPoly& p) {
        std::vector<GaussianRational> out;
        out.reserve(p.c_.size());
        for (const auto& x : p.c_) {
            out.push_back(s * x);
        }
        return RationalPoly(std::move(out));
    }
    friend bool operator==(const RationalPoly& a, const RationalPoly& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const RationalPoly& a, const RationalPoly& b) {
        return !(a == b);
    }

private:
    void strip() {
        while (!c_.empty() && c_.back().is_zero()) {
            c_.pop_back();
        }
    }

    std::vector<GaussianRational> c_;
};

/// Rational function s^p * num(z)/den(z) where s is a formal positive square
/// root with rational square s^2 = surd_sq (in practice s = sqrt(1-b^2)).
///
/// The surd exponent is kept canonical in {0, 1}: even powers fold into the
/// numerator via s^2 = surd_sq, and s^-1 rewrites as s/surd_sq. Functions
/// with different surd squares cannot be combined (except through a
/// surd-free operand) and compare unequal unless both are zero.
class SurdRatFunc {
public:
    SurdRatFunc(RationalPoly num, RationalPoly den, int surd_power = 0,
                Rational surd_sq = 1)
        : num_(std::move(num)), den_(std::move(den)), pow_(surd_power),
          sq_(std::move(surd_sq)) {
        if (den_.is_zero()) {
            throw std::domain_error("SurdRatFunc: zero denominator");
        }
        if (sq_ <= 0) {
            throw std::domain_error("SurdRatFunc: surd square must be positive");
        }
        canonicalize();
    }

    static SurdRatFunc one() {
        return SurdRatFunc(RationalPoly::constant(GaussianRational(1)),
                           RationalPoly::constant(GaussianRational(1)));
    }
    static SurdRatFunc from_poly(RationalPoly p) {
        return SurdRatFunc(std::move(p), RationalPoly::constant(GaussianRational(1)));
    }

    const RationalPoly& num() const { return num_; }
    const RationalPoly& den() const { return den_; }
    int surd_power() const { return pow_; }
    const Rational& surd_sq() const { return sq_; }
    bool is_zero() const { return num_.is_zero(); }

    /// Coefficient conjugation, i.e. z |-> conj(f(conj z)). The surd stays
    /// fixed: s is real and positive.
    SurdRatFunc conj_coeffs() const {
        return SurdRatFunc(num_.conj_coeffs(), den_.conj_coeffs(), pow_, sq_);
    }

    friend SurdRatFunc operator*(const SurdRatFunc& a, const SurdRatFunc& b) {
        return SurdRatFunc(a.num_ * b.num_, a.den_ * b.den_, a.pow_ + b.pow_,
                           merged_sq(a, b));
    }
    friend SurdRatFunc operator/(const SurdRatFunc& a, const SurdRatFunc& b) {
        if (b.is_zero()) {
            throw std::domain_error("SurdRatFunc: division by zero function");
        }
        return SurdRatFunc(a.num_ * b.den_, a.den_ * b.num_, a.pow_ - b.pow_,
                           merged_sq(a, b));
    }

private:
    static Rational merged_sq(const SurdRatFunc& a, const SurdRatFunc& b) {
        if (a.pow_ != 0 && b.pow_ != 0 && a.sq_ != b.sq_) {
            throw std::invalid_argument("SurdRatFunc: mismatched surd squares");
        }
        return a.pow_ != 0 ? a.sq_ : b.sq_;
    }

    void canonicalize() {
        const RationalPoly sq_poly = RationalPoly::constant(GaussianRational(sq_));
        while (pow_ >= 2) {
            num_ = sq_poly * num_;
            pow_ -= 2;
        }
        while (pow_ < 0) {
            den_ = sq_poly * den_;
            pow_ += 2;
        }
        if (num_.is_zero()) {
            pow_ = 0;
        }
    }

    RationalPoly num_;
    RationalPoly den_;
    int pow_;
    Rational sq_;
};

/// Equality as functions: cross-multiplication of the rational parts. Surd
/// powers are canonical, so equal functions must carry equal powers, and for
/// power 1 the same surd square.
inline bool ratfunc_equal(const SurdRatFunc& a, const SurdRatFunc& b) {
    if (a.is_zero() || b.is_zero()) {
        return a.is_zero() && b.is_zero();
    }
    if (a.surd_power() != b.surd_power()) {
        return false;
    }
    if (a.surd_power() != 0 && a.surd_sq() != b.surd_sq()) {
        return false;
    }
    return a.num() * b.den() == b.num() * a.den();
}

}  // namespace csop
