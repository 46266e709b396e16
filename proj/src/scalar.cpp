#include "qmatball/scalar.hpp"

#include <cmath>

namespace qmb {

void Scalar::assign(TriPoly num, TriPoly den) {
    if (den.is_zero()) throw DivisionByZero();
    if (num.is_zero()) {
        num_ = TriPoly();
        den_ = TriPoly(GaussRat(1));
        return;
    }
    // Fold any monomial factor of den into num.
    Mono shift;
    for (int v = 0; v < kNumVars; ++v) shift.e[v] = -den.min_exp(v);
    if (!(shift == Mono{})) {
        den = den.shifted(shift);
        num = num.shifted(shift);
    }
    if (!den.is_monomial()) {
        TriPoly g = poly_gcd(num, den);
        if (!g.is_one()) {
            // num may be Laurent; divide its ordinary part.
            Mono nsh;
            for (int v = 0; v < kNumVars; ++v) nsh.e[v] = -num.min_exp(v);
            TriPoly nord = num.shifted(nsh);
            auto qn = poly_divide(nord, g);
            auto qd = poly_divide(den, g);
            if (qn && qd) {
                Mono back;
                for (int v = 0; v < kNumVars; ++v) back.e[v] = -nsh.e[v];
                num = qn->shifted(back);
                den = std::move(*qd);
            }
        }
    }
    // den may have become a monomial after reduction; fold again and make monic.
    for (int v = 0; v < kNumVars; ++v) shift.e[v] = -den.min_exp(v);
    if (!(shift == Mono{})) {
        den = den.shifted(shift);
        num = num.shifted(shift);
    }
    GaussRat lc = den.leading().second;
    if (!(lc == GaussRat(1))) {
        GaussRat inv = lc.inverse();
        den = den.scaled(inv);
        num = num.scaled(inv);
    }
    num_ = std::move(num);
    den_ = std::move(den);
}

Scalar Scalar::qint(int a, int b, int c) {
    // (q^x - q^{-x}) / (q - q^{-1}),  q^x = s^{2c} u^a v^b.
    TriPoly num = TriPoly::monomial(GaussRat(1), 2 * c, a, b) - TriPoly::monomial(GaussRat(1), -2 * c, -a, -b);
    TriPoly den = TriPoly::monomial(GaussRat(1), 2, 0, 0) - TriPoly::monomial(GaussRat(1), -2, 0, 0);
    return Scalar(std::move(num), std::move(den));
}

Scalar Scalar::operator-() const {
    Scalar r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return Scalar(a.num_ + b.num_, a.den_);
    return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return Scalar(a.num_ - b.num_, a.den_);
    return Scalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return Scalar();
    return Scalar(a.num_ * b.num_, a.den_ * b.den_);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.is_zero()) return Scalar();
    return Scalar(a.num_ * b.den_, a.den_ * b.num_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return Scalar(den_, num_);
}

Scalar Scalar::pow(int k) const {
    if (k == 0) return Scalar::one();
    Scalar base = k > 0 ? *this : inverse();
    int kk = k > 0 ? k : -k;
    Scalar r = Scalar::one();
    for (int i = 0; i < kk; ++i) r *= base;
    return r;
}

Scalar Scalar::conjugated(bool negate_u, bool negate_v) const {
    return Scalar(num_.conjugated(negate_u, negate_v), den_.conjugated(negate_u, negate_v));
}

Scalar Scalar::tied(int d) const { return Scalar(num_.tie_v_to_u(d), den_.tie_v_to_u(d)); }

std::string Scalar::str() const {
    if (den_.is_one()) return num_.str();
    std::string n = num_.str();
    if (num_.size() > 1) n = "(" + n + ")";
    return n + "/(" + den_.str() + ")";
}

std::string ParameterPoint::str() const {
    std::string s = rat_str(re);
    if (im_units) s += "+i*pi/h";
    return s;
}

bool qint_vanishes(const ParameterPoint& p, long c) { return p.im_units == 0 && p.re + c == 0; }

std::complex<double> SpecValue::as_complex() const {
    if (!exact) return fl;
    return {ex.re.get_d(), ex.im.get_d()};
}

namespace {

GaussRat zeta_of(int im_units) {
    // e^{-i*pi/2 * im_units}: 1 or -i.
    return im_units ? GaussRat(Rat(0), Rat(-1)) : GaussRat(1);
}

GaussRat gauss_pow(const GaussRat& g, long k) {
    GaussRat base = k >= 0 ? g : g.inverse();
    long kk = k >= 0 ? k : -k;
    GaussRat r(1);
    for (long i = 0; i < kk; ++i) r *= base;
    return r;
}

Rat rat_pow(const Rat& x, long k) {
    Rat base = k >= 0 ? x : Rat(1) / x;
    long kk = k >= 0 ? k : -k;
    Rat r(1);
    for (long i = 0; i < kk; ++i) r *= base;
    return r;
}

}  // namespace

SpecValue specialize(const Scalar& e, const Rat& s0, const ParameterPoint& alpha, const ParameterPoint& beta) {
    if (!(s0 > 0 && s0 < 1)) throw std::invalid_argument("specialize: s0 must lie in (0,1)");
    Rat ta = 2 * alpha.re, tb = 2 * beta.re;
    bool exact = (ta.get_den() == 1) && (tb.get_den() == 1);
    SpecValue out;
    out.exact = exact;
    if (exact) {
        // u = zeta_a * s0^{2 re(alpha)}, v = zeta_b * s0^{2 re(beta)}.
        GaussRat uval = zeta_of(alpha.im_units) * GaussRat(rat_pow(s0, ta.get_num().get_si()));
        GaussRat vval = zeta_of(beta.im_units) * GaussRat(rat_pow(s0, tb.get_num().get_si()));
        auto eval = [&](const TriPoly& p) {
            GaussRat acc(0);
            for (const auto& [m, c] : p.terms())
                acc += c * GaussRat(rat_pow(s0, m.e[0])) * gauss_pow(uval, m.e[1]) * gauss_pow(vval, m.e[2]);
            return acc;
        };
        GaussRat d = eval(e.den());
        if (d.is_zero()) throw PoleAtSpecialization();
        out.ex = eval(e.num()) / d;
        return out;
    }
    double sd = s0.get_d();
    auto cpow = [](std::complex<double> b, double x) { return std::pow(b, x); };
    std::complex<double> uval =
        std::polar(1.0, -M_PI / 2.0 * alpha.im_units) * std::pow(sd, 2.0 * alpha.re.get_d());
    std::complex<double> vval = std::polar(1.0, -M_PI / 2.0 * beta.im_units) * std::pow(sd, 2.0 * beta.re.get_d());
    auto evalf = [&](const TriPoly& p) {
        std::complex<double> acc = 0;
        for (const auto& [m, c] : p.terms()) {
            std::complex<double> t(c.re.get_d(), c.im.get_d());
            t *= std::pow(sd, m.e[0]);
            t *= cpow(uval, m.e[1]);
            t *= cpow(vval, m.e[2]);
            acc += t;
        }
        return acc;
    };
    std::complex<double> d = evalf(e.den());
    if (std::abs(d) < 1e-300) throw PoleAtSpecialization();
    out.fl = evalf(e.num()) / d;
    return out;
}

}  // namespace qmb
