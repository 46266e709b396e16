#pragma once

#include <gmpxx.h>

#include <string>

namespace qmb {

using Rat = mpq_class;

/// Gaussian rational a + b*i with exact arithmetic.
struct GaussRat {
    Rat re;
    Rat im;

    GaussRat() : re(0), im(0) {}
    GaussRat(long r) : re(r), im(0) {}
    GaussRat(const Rat& r) : re(r), im(0) {}
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRat unit_i() { return GaussRat(Rat(0), Rat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussRat conj() const { return GaussRat(re, -im); }

    Rat norm() const { return re * re + im * im; }

    GaussRat operator-() const { return GaussRat(-re, -im); }

    GaussRat& operator+=(const GaussRat& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussRat& operator-=(const GaussRat& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }

    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return GaussRat(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    GaussRat& operator*=(const GaussRat& o) { return *this = *this * o; }

    GaussRat inverse() const {
        Rat n = norm();
        return GaussRat(re / n, -im / n);
    }

    friend GaussRat operator/(const GaussRat& a, const GaussRat& b) { return a * b.inverse(); }
    GaussRat& operator/=(const GaussRat& o) { return *this = *this * o.inverse(); }

    friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    std::string str() const;
};

std::string rat_str(const Rat& r);

}  // namespace qmb
