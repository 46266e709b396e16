#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qmatball/gaussian.hpp"

namespace qmb {

// Variable order: x0 = s (= q^{1/2}), x1 = u (= q^alpha), x2 = v (= q^beta).
constexpr int kNumVars = 3;

/// Exponent triple of a Laurent monomial in (s, u, v), graded-lex ordered.
struct Mono {
    std::array<int, kNumVars> e{0, 0, 0};

    int total() const { return e[0] + e[1] + e[2]; }

    friend bool operator==(const Mono& a, const Mono& b) { return a.e == b.e; }
    friend bool operator<(const Mono& a, const Mono& b) {
        int ta = a.total(), tb = b.total();
        if (ta != tb) return ta < tb;
        return a.e < b.e;
    }

    Mono operator+(const Mono& o) const {
        Mono r;
        for (int i = 0; i < kNumVars; ++i) r.e[i] = e[i] + o.e[i];
        return r;
    }
    Mono operator-(const Mono& o) const {
        Mono r;
        for (int i = 0; i < kNumVars; ++i) r.e[i] = e[i] - o.e[i];
        return r;
    }
};

/// Sparse Laurent polynomial in (s, u, v) over the Gaussian rationals.
class TriPoly {
  public:
    using Map = std::map<Mono, GaussRat>;

    TriPoly() = default;
    explicit TriPoly(const GaussRat& c) {
        if (!c.is_zero()) terms_[Mono{}] = c;
    }
    static TriPoly monomial(const GaussRat& c, int es, int eu, int ev) {
        TriPoly p;
        if (!c.is_zero()) p.terms_[Mono{{es, eu, ev}}] = c;
        return p;
    }

    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono{}); }
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t size() const { return terms_.size(); }

    /// Leading term under graded-lex (largest key).
    const std::pair<const Mono, GaussRat>& leading() const { return *terms_.rbegin(); }

    int min_exp(int var) const;
    int max_exp(int var) const;
    int degree(int var) const { return max_exp(var); }
    bool depends_on(int var) const { return min_exp(var) != 0 || max_exp(var) != 0; }

    void add_term(const Mono& m, const GaussRat& c);

    TriPoly operator-() const;
    TriPoly& operator+=(const TriPoly& o);
    TriPoly& operator-=(const TriPoly& o);
    friend TriPoly operator+(TriPoly a, const TriPoly& b) { return a += b; }
    friend TriPoly operator-(TriPoly a, const TriPoly& b) { return a -= b; }
    friend TriPoly operator*(const TriPoly& a, const TriPoly& b);
    TriPoly& operator*=(const TriPoly& o) { return *this = *this * o; }

    TriPoly scaled(const GaussRat& c) const;
    TriPoly shifted(const Mono& m) const;  // multiply by the monomial x^m

    friend bool operator==(const TriPoly& a, const TriPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const TriPoly& a, const TriPoly& b) { return !(a == b); }

    /// Coefficient-wise complex conjugation; optionally u -> -u, v -> -v
    /// (the sign a 4th root of unity picks up under conjugation).
    TriPoly conjugated(bool negate_u, bool negate_v) const;

    /// Substitute v = u * s^{-2d}.
    TriPoly tie_v_to_u(int d) const;

    /// Substitute u -> value (a Laurent monomial in s times a Gaussian unit).
    TriPoly substitute_var(int var, const GaussRat& coef, int s_exp) const;

    std::string str() const;

  private:
    Map terms_;
};

/// gcd of Laurent polynomials up to monomial factors; result is an ordinary
/// polynomial, content-free in each variable, with leading coefficient 1.
TriPoly poly_gcd(const TriPoly& a, const TriPoly& b);

/// Exact division a / b; nullopt if b does not divide a.
std::optional<TriPoly> poly_divide(const TriPoly& a, const TriPoly& b);

}  // namespace qmb
