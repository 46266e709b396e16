#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <variant>

#include "qmatball/poly.hpp"

namespace qmb {

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("scalar: division by zero") {}
};

struct PoleAtSpecialization : std::domain_error {
    PoleAtSpecialization() : std::domain_error("scalar: denominator vanishes at the sample point") {}
};

/// Element of the fraction field Q(i)(s,u,v), kept in a canonical form:
/// gcd(num, den) is a unit, den is an ordinary polynomial with no monomial
/// content and leading coefficient 1 (graded-lex), num may be Laurent.
/// Equality is then a syntactic check.
class Scalar {
  public:
    Scalar() = default;
    Scalar(long n) : num_(GaussRat(n)) {}
    explicit Scalar(const GaussRat& c) : num_(c) {}
    Scalar(TriPoly num, TriPoly den) { assign(std::move(num), std::move(den)); }

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(1); }
    static Scalar i() { return Scalar(GaussRat::unit_i()); }
    static Scalar from_poly(TriPoly p) { return Scalar(std::move(p), TriPoly(GaussRat(1))); }

    /// c * s^es * u^eu * v^ev
    static Scalar monomial(const GaussRat& c, int es, int eu = 0, int ev = 0) {
        return from_poly(TriPoly::monomial(c, es, eu, ev));
    }
    /// q^{c + a*alpha + b*beta} = s^{2c} u^a v^b  (integer c).
    static Scalar q_power(int c, int a = 0, int b = 0) { return monomial(GaussRat(1), 2 * c, a, b); }
    /// s^k = q^{k/2}.
    static Scalar s_power(int k) { return monomial(GaussRat(1), k); }

    /// [x]_q with x = a*alpha + b*beta + c:  (q^x - q^{-x}) / (q - q^{-1}).
    static Scalar qint(int a, int b, int c);
    /// [m]_q for a plain integer m (a Laurent polynomial in s).
    static Scalar qint(int m) { return qint(0, 0, m); }

    const TriPoly& num() const { return num_; }
    const TriPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);

    Scalar inverse() const;
    Scalar pow(int k) const;

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Complex conjugation of coefficients; u,v optionally flip sign (see
    /// TwistMode reality conventions).
    Scalar conjugated(bool negate_u = false, bool negate_v = false) const;

    /// Substitute v = u s^{-2d}.
    Scalar tied(int d) const;

    bool depends_on_u() const { return num_.depends_on(1) || den_.depends_on(1); }
    bool depends_on_v() const { return num_.depends_on(2) || den_.depends_on(2); }

    std::string str() const;

  private:
    void assign(TriPoly num, TriPoly den);

    TriPoly num_;                       // zero polynomial => the scalar 0
    TriPoly den_{TriPoly(GaussRat(1))};
};

/// A parameter value alpha with q^alpha = zeta * q^re, zeta = e^{-i*pi/2*im_units},
/// im_units in {0,1} (imaginary part in units of pi/h).
struct ParameterPoint {
    Rat re{0};
    int im_units{0};

    ParameterPoint() = default;
    ParameterPoint(Rat r, int iu = 0) : re(std::move(r)), im_units(iu) {
        if (im_units != 0 && im_units != 1) throw std::invalid_argument("ParameterPoint: im_units must be 0 or 1");
    }
    static ParameterPoint integer(long k) { return ParameterPoint(Rat(k)); }

    bool is_integer() const { return im_units == 0 && re.get_den() == 1; }
    bool is_real() const { return im_units == 0; }

    ParameterPoint plus(const Rat& r) const { return ParameterPoint(re + r, im_units); }

    friend bool operator==(const ParameterPoint& a, const ParameterPoint& b) {
        return a.re == b.re && a.im_units == b.im_units;
    }

    std::string str() const;
};

/// Zero test of [re + c]_q-type brackets at a parameter point:
/// [p + c]_q = 0 iff the point is real and re + c = 0 exactly.
bool qint_vanishes(const ParameterPoint& p, long c);

/// Specialization result: exact Gaussian rational when every exponent lands
/// in Z, otherwise a double-precision complex value.
struct SpecValue {
    bool exact{true};
    GaussRat ex;
    std::complex<double> fl;

    std::complex<double> as_complex() const;
    bool is_zero() const { return exact ? ex.is_zero() : std::abs(fl) == 0.0; }
};

/// Evaluate at s = s0 (rational in (0,1)), u = q^alpha, v = q^beta.
/// Exact whenever 2*re(alpha) and 2*re(beta) are integers.
SpecValue specialize(const Scalar& e, const Rat& s0, const ParameterPoint& alpha, const ParameterPoint& beta);

/// Symbolic vs concrete handling of the twist parameters.
struct SymbolicTwist {
    int d{0};  // d = alpha - beta
};
struct ConcreteTwist {
    ParameterPoint alpha, beta;
};
using TwistMode = std::variant<SymbolicTwist, ConcreteTwist>;

}  // namespace qmb
