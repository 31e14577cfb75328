#pragma once

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace minorb {

// Exact element a + bi of Q(i).
class Gauss {
public:
    Gauss() = default;
    Gauss(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
    Gauss(mpq_class re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    Gauss(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

    static Gauss i() { return Gauss(mpq_class(0), mpq_class(1)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    Gauss conj() const { return Gauss(re_, -im_); }
    mpq_class norm2() const { return re_ * re_ + im_ * im_; }

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }
    // |re| + |im| as a double; cheap magnitude for residual reporting.
    double abs_l1() const { return std::abs(re_.get_d()) + std::abs(im_.get_d()); }

    std::string str() const;

    Gauss operator-() const { return Gauss(-re_, -im_); }

    Gauss& operator+=(const Gauss& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Gauss& operator-=(const Gauss& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    Gauss& operator*=(const Gauss& o) {
        mpq_class r = re_ * o.re_ - im_ * o.im_;
        mpq_class s = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(s);
        return *this;
    }
    Gauss& operator/=(const Gauss& o) {
        mpq_class n = o.norm2();
        if (sgn(n) == 0) throw std::domain_error("Gauss: division by zero");
        *this *= o.conj();
        re_ /= n;
        im_ /= n;
        return *this;
    }

    friend Gauss operator+(Gauss a, const Gauss& b) { return a += b; }
    friend Gauss operator-(Gauss a, const Gauss& b) { return a -= b; }
    friend Gauss operator*(Gauss a, const Gauss& b) { return a *= b; }
    friend Gauss operator/(Gauss a, const Gauss& b) { return a /= b; }
    friend bool operator==(const Gauss& a, const Gauss& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const Gauss& a, const Gauss& b) { return !(a == b); }

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

// Exact square root of a nonnegative rational, if it is a perfect square.
bool exact_sqrt(const mpq_class& q, mpq_class& root);

}  // namespace minorb
