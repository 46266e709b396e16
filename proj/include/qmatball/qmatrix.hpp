#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qmatball/scalar.hpp"

namespace qmb {

/// Row-major index of the generator z_a^b, a,b in 1..n.
inline int zgen_index(int n, int a, int b) { return (a - 1) * n + (b - 1); }
inline int zgen_row(int n, int g) { return g / n + 1; }
inline int zgen_col(int n, int g) { return g % n + 1; }

/// A normal monomial: product of generators in non-decreasing row-major
/// order, stored as an exponent vector over the n^2 generators.
struct Monom {
    std::vector<std::uint16_t> e;

    explicit Monom(int n2 = 0) : e(n2, 0) {}

    int degree() const {
        int d = 0;
        for (auto x : e) d += x;
        return d;
    }
    friend bool operator==(const Monom& a, const Monom& b) { return a.e == b.e; }
    friend bool operator<(const Monom& a, const Monom& b) {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.e < b.e;
    }

    std::vector<std::uint8_t> word() const;  // expanded generator sequence
};

/// Element of C[Mat_n]_q in the normal-monomial basis.
class QPolynomial {
  public:
    using Map = std::map<Monom, Scalar>;

    QPolynomial() = default;
    static QPolynomial constant(int n, const Scalar& c);
    static QPolynomial generator(int n, int a, int b);
    static QPolynomial from_monom(Monom m, Scalar c) {
        QPolynomial p;
        p.add(std::move(m), std::move(c));
        return p;
    }

    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add(Monom m, Scalar c);

    QPolynomial operator-() const;
    QPolynomial& operator+=(const QPolynomial& o);
    QPolynomial& operator-=(const QPolynomial& o);
    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }

    QPolynomial scaled(const Scalar& c) const;

    friend bool operator==(const QPolynomial& a, const QPolynomial& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const QPolynomial& a, const QPolynomial& b) { return !(a == b); }

    /// Set of total degrees present.
    std::set<int> degrees() const;

    std::string str(int n) const;

  private:
    Map terms_;
};

/// Strategy for picking which descent to rewrite next (position index into
/// the list of descents); the default (always 0) is leftmost-first.
using ReduceStrategy = std::function<std::size_t(std::size_t)>;

/// Normalize a product of generators given as an arbitrary word.
QPolynomial normalize_word(int n, const std::vector<std::uint8_t>& word, const Scalar& coef,
                           const ReduceStrategy& pick = {});

/// Product of two elements, closed over the normal form.
QPolynomial qmul(int n, const QPolynomial& x, const QPolynomial& y);

/// q-minor over strictly increasing row/column index sets (1-based).
QPolynomial q_minor(int n, const std::vector<int>& rows, const std::vector<int>& cols);

/// det_q z = q_minor({1..n},{1..n}); cached.
const QPolynomial& qdet(int n);
/// Leading principal k-minor z^{wedge k}; cached.
const QPolynomial& leading_minor(int n, int k);

/// Element of the localization V = C[Mat_n]_{q, det_q z}: poly * det^{-dpow}.
struct LocalizedVector {
    int n{0};
    QPolynomial poly;
    int dpow{0};

    LocalizedVector() = default;
    LocalizedVector(int n_, QPolynomial p, int d = 0) : n(n_), poly(std::move(p)), dpow(d) {}
    static LocalizedVector unit(int n) { return LocalizedVector(n, QPolynomial::constant(n, Scalar::one()), 0); }
    static LocalizedVector zero(int n) { return LocalizedVector(n, QPolynomial(), 0); }

    bool is_zero() const { return poly.is_zero(); }

    LocalizedVector scaled(const Scalar& c) const { return LocalizedVector(n, poly.scaled(c), dpow); }
    /// Representative with det power raised to d >= dpow.
    LocalizedVector raised(int d) const;
    /// Divide out det factors common to every term, if possible (display only).
    LocalizedVector reduced() const;

    LocalizedVector operator-() const { return LocalizedVector(n, -poly, dpow); }
    friend LocalizedVector operator+(const LocalizedVector& a, const LocalizedVector& b);
    friend LocalizedVector operator-(const LocalizedVector& a, const LocalizedVector& b) { return a + (-b); }
    friend LocalizedVector operator*(const LocalizedVector& a, const LocalizedVector& b);

    std::string str() const;
};

/// Equality in V via cross-multiplication (no zero divisors, det central).
bool loc_equal(const LocalizedVector& x, const LocalizedVector& y);

/// Total-degree grading: z-degree minus n * det power, per K_0.
std::set<int> grade(const LocalizedVector& x);

/// Exact division p = r * det (nullopt if not divisible).
std::optional<QPolynomial> divide_by_det(int n, const QPolynomial& p);

}  // namespace qmb
