#include "qmatball/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qmb {

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string GaussRat::str() const {
    if (im == 0) return rat_str(re);
    if (re == 0) return rat_str(im) + "*i";
    std::string s = rat_str(re);
    if (im > 0)
        s += "+" + rat_str(im) + "*i";
    else
        s += "-" + rat_str(Rat(-im)) + "*i";
    return "(" + s + ")";
}

bool TriPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Mono{} && terms_.begin()->second == GaussRat(1);
}

int TriPoly::min_exp(int var) const {
    int m = 0;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        if (first || mono.e[var] < m) m = mono.e[var];
        first = false;
    }
    return m;
}

int TriPoly::max_exp(int var) const {
    int m = 0;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        if (first || mono.e[var] > m) m = mono.e[var];
        first = false;
    }
    return m;
}

void TriPoly::add_term(const Mono& m, const GaussRat& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TriPoly TriPoly::operator-() const {
    TriPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

TriPoly& TriPoly::operator+=(const TriPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

TriPoly& TriPoly::operator-=(const TriPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

TriPoly operator*(const TriPoly& a, const TriPoly& b) {
    TriPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma + mb, ca * cb);
    return r;
}

TriPoly TriPoly::scaled(const GaussRat& c) const {
    TriPoly r;
    if (c.is_zero()) return r;
    for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
    return r;
}

TriPoly TriPoly::shifted(const Mono& shift) const {
    TriPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m + shift, c);
    return r;
}

TriPoly TriPoly::conjugated(bool negate_u, bool negate_v) const {
    TriPoly r;
    for (const auto& [m, c] : terms_) {
        GaussRat cc = c.conj();
        if (negate_u && (m.e[1] % 2 != 0)) cc = -cc;
        if (negate_v && (m.e[2] % 2 != 0)) cc = -cc;
        r.terms_.emplace(m, cc);
    }
    return r;
}

TriPoly TriPoly::tie_v_to_u(int d) const {
    TriPoly r;
    for (const auto& [m, c] : terms_) {
        Mono t;
        t.e[0] = m.e[0] - 2 * d * m.e[2];
        t.e[1] = m.e[1] + m.e[2];
        t.e[2] = 0;
        r.add_term(t, c);
    }
    return r;
}

TriPoly TriPoly::substitute_var(int var, const GaussRat& coef, int s_exp) const {
    TriPoly r;
    for (const auto& [m, c] : terms_) {
        int k = m.e[var];
        Mono t = m;
        t.e[var] = 0;
        t.e[0] += s_exp * k;
        GaussRat f(1);
        GaussRat base = coef;
        int kk = k;
        if (kk < 0) {
            base = coef.inverse();
            kk = -kk;
        }
        for (int i = 0; i < kk; ++i) f *= base;
        r.add_term(t, c * f);
    }
    return r;
}

std::string TriPoly::str() const {
    if (terms_.empty()) return "0";
    static const char* names[3] = {"s", "u", "v"};
    std::ostringstream os;
    bool first = true;
    // print highest terms first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Mono& m = it->first;
        GaussRat c = it->second;
        std::string sign = "+";
        if (c.im == 0 && c.re < 0) {
            sign = "-";
            c = -c;
        }
        if (first) {
            if (sign == "-") os << "-";
        } else {
            os << " " << sign << " ";
        }
        first = false;
        std::vector<std::string> factors;
        bool trivial_coef = (c == GaussRat(1));
        bool pure_i = (c.re == 0 && c.im == 1);
        if (!trivial_coef && !pure_i) factors.push_back(c.str());
        if (pure_i) factors.push_back("i");
        for (int v = 0; v < kNumVars; ++v) {
            if (m.e[v] == 0) continue;
            std::string f = names[v];
            if (m.e[v] != 1) f += "^" + std::to_string(m.e[v]);
            factors.push_back(f);
        }
        if (factors.empty()) factors.push_back(c.str());
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) os << "*";
            os << factors[i];
        }
    }
    return os.str();
}

namespace {

// ---- multivariate gcd over Q(i), primitive PRS ----------------------------

// A polynomial viewed as univariate in `var` with TriPoly coefficients
// (which do not involve `var`).
using Univ = std::map<int, TriPoly>;

Univ to_univ(const TriPoly& p, int var) {
    Univ u;
    for (const auto& [m, c] : p.terms()) {
        Mono rest = m;
        int k = rest.e[var];
        rest.e[var] = 0;
        u[k].add_term(rest, c);
    }
    for (auto it = u.begin(); it != u.end();) {
        if (it->second.is_zero())
            it = u.erase(it);
        else
            ++it;
    }
    return u;
}

TriPoly from_univ(const Univ& u, int var) {
    TriPoly p;
    for (const auto& [k, coef] : u) {
        Mono shift;
        shift.e[var] = k;
        p += coef.shifted(shift);
    }
    return p;
}

int univ_deg(const Univ& u) { return u.empty() ? -1 : u.rbegin()->first; }

Univ univ_scale(const Univ& u, const TriPoly& f) {
    Univ r;
    for (const auto& [k, c] : u) {
        TriPoly t = c * f;
        if (!t.is_zero()) r[k] = std::move(t);
    }
    return r;
}

Univ univ_sub(Univ a, const Univ& b) {
    for (const auto& [k, c] : b) {
        auto it = a.find(k);
        if (it == a.end()) {
            a[k] = -c;
        } else {
            it->second -= c;
            if (it->second.is_zero()) a.erase(it);
        }
    }
    return a;
}

Univ univ_shift(const Univ& u, int k) {
    Univ r;
    for (const auto& [d, c] : u) r[d + k] = c;
    return r;
}

bool has_var(const TriPoly& p, int var) { return p.min_exp(var) != 0 || p.max_exp(var) != 0; }

int main_var(const TriPoly& a, const TriPoly& b) {
    for (int v = kNumVars - 1; v >= 0; --v)
        if (has_var(a, v) || has_var(b, v)) return v;
    return -1;
}

TriPoly normalize_lead(const TriPoly& p) {
    if (p.is_zero()) return p;
    return p.scaled(p.leading().second.inverse());
}

TriPoly gcd_impl(TriPoly a, TriPoly b);

TriPoly content_of(const Univ& u) {
    TriPoly g;
    for (const auto& [k, c] : u) {
        g = gcd_impl(g, c);
        if (g.is_one()) break;
    }
    return g;
}

Univ univ_divide_coeffs(const Univ& u, const TriPoly& d) {
    Univ r;
    for (const auto& [k, c] : u) {
        auto q = poly_divide(c, d);
        if (!q) throw std::logic_error("poly: content division failed");
        r[k] = std::move(*q);
    }
    return r;
}

// Pseudo-remainder of a by b in R[x].
Univ univ_prem(Univ a, const Univ& b) {
    int db = univ_deg(b);
    const TriPoly& lb = b.rbegin()->second;
    while (univ_deg(a) >= db) {
        int da = univ_deg(a);
        TriPoly la = a.rbegin()->second;
        a = univ_scale(a, lb);
        a = univ_sub(a, univ_shift(univ_scale(b, la), da - db));
        if (univ_deg(a) == da) throw std::logic_error("poly: prem failed to reduce degree");
    }
    return a;
}

// gcd of ordinary (non-Laurent) polynomials; result monic, content-free.
TriPoly gcd_impl(TriPoly a, TriPoly b) {
    if (a.is_zero()) return normalize_lead(b);
    if (b.is_zero()) return normalize_lead(a);
    int var = main_var(a, b);
    if (var < 0) return TriPoly(GaussRat(1));

    Univ ua = to_univ(a, var), ub = to_univ(b, var);
    TriPoly ca = content_of(ua), cb = content_of(ub);
    TriPoly d = gcd_impl(ca, cb);
    ua = univ_divide_coeffs(ua, ca);
    ub = univ_divide_coeffs(ub, cb);
    if (univ_deg(ua) < univ_deg(ub)) std::swap(ua, ub);
    while (true) {
        Univ r = univ_prem(ua, ub);
        if (r.empty()) break;
        TriPoly cr = content_of(r);
        ua = std::move(ub);
        ub = univ_divide_coeffs(r, cr);
        if (univ_deg(ub) == 0) {
            ub.clear();
            ub[0] = TriPoly(GaussRat(1));
            break;
        }
    }
    TriPoly g = from_univ(ub, var) * d;
    return normalize_lead(g);
}

}  // namespace

TriPoly poly_gcd(const TriPoly& a, const TriPoly& b) {
    // Strip monomial content so the recursion sees ordinary polynomials.
    auto strip = [](const TriPoly& p) {
        Mono sh;
        for (int v = 0; v < kNumVars; ++v) sh.e[v] = -p.min_exp(v);
        return p.shifted(sh);
    };
    if (a.is_zero()) return normalize_lead(strip(b));
    if (b.is_zero()) return normalize_lead(strip(a));
    TriPoly sa = strip(a), sb = strip(b);
    if (sa.is_monomial() || sb.is_monomial()) return TriPoly(GaussRat(1));
    return gcd_impl(sa, sb);
}

std::optional<TriPoly> poly_divide(const TriPoly& a, const TriPoly& b) {
    if (b.is_zero()) return std::nullopt;
    TriPoly rem = a, quot;
    const auto& [lbm, lbc] = b.leading();
    GaussRat lbc_inv = lbc.inverse();
    while (!rem.is_zero()) {
        const auto& [lam, lac] = rem.leading();
        Mono d = lam - lbm;
        TriPoly t = TriPoly::monomial(lac * lbc_inv, d.e[0], d.e[1], d.e[2]);
        quot += t;
        rem -= t * b;
        if (!rem.is_zero() && !(rem.leading().first < lam)) return std::nullopt;
    }
    return quot;
}

}  // namespace qmb
