#include "qmatball/action.hpp"

namespace qmb {

int RepContext::d() const {
    if (!is_symbolic()) throw std::logic_error("RepContext: d() requires symbolic twist mode");
    return std::get<SymbolicTwist>(twist).d;
}

Scalar RepContext::settle(Scalar c) const {
    if (is_symbolic()) return c.tied(std::get<SymbolicTwist>(twist).d);
    return c;
}

namespace {

// Exponent of q in K_j z_a^b.
int k_exponent(int n, int j, int a, int b) {
    if (j == n) {
        if (a == n && b == n) return 2;
        if (a == n || b == n) return 1;
        return 0;
    }
    if (j < n) {
        if (a == j) return 1;
        if (a == j + 1) return -1;
        return 0;
    }
    if (b == 2 * n - j) return 1;
    if (b == 2 * n - j + 1) return -1;
    return 0;
}

// E_j z_a^b and F_j z_a^b as words (nullopt = 0); the scalar multiplies them.
struct Replacement {
    Scalar c;
    std::vector<std::uint8_t> w;
};

std::optional<Replacement> e_replacement(int n, int j, int a, int b) {
    if (j == n) {
        Scalar c = -Scalar::s_power(1);
        if (a != n && b != n) {
            c *= Scalar::s_power(-2);
            return Replacement{c, {(std::uint8_t)zgen_index(n, a, n), (std::uint8_t)zgen_index(n, n, b)}};
        }
        if (a == n && b == n)
            return Replacement{c, {(std::uint8_t)zgen_index(n, n, n), (std::uint8_t)zgen_index(n, n, n)}};
        return Replacement{c, {(std::uint8_t)zgen_index(n, n, n), (std::uint8_t)zgen_index(n, a, b)}};
    }
    if (j < n) {
        if (a == j + 1) return Replacement{Scalar::s_power(-1), {(std::uint8_t)zgen_index(n, a - 1, b)}};
        return std::nullopt;
    }
    if (b == 2 * n - j + 1) return Replacement{Scalar::s_power(-1), {(std::uint8_t)zgen_index(n, a, b - 1)}};
    return std::nullopt;
}

std::optional<Replacement> f_replacement(int n, int j, int a, int b) {
    if (j == n) {
        if (a == n && b == n) return Replacement{Scalar::s_power(1), {}};
        return std::nullopt;
    }
    if (j < n) {
        if (a == j) return Replacement{Scalar::s_power(1), {(std::uint8_t)zgen_index(n, a + 1, b)}};
        return std::nullopt;
    }
    if (b == 2 * n - j) return Replacement{Scalar::s_power(1), {(std::uint8_t)zgen_index(n, a, b + 1)}};
    return std::nullopt;
}

// (1 - q^{2m}) / (1 - q^2) as an exact scalar, m integer.
Scalar ratio_1m_q2(int m) {
    Scalar num = Scalar::one() - Scalar::s_power(4 * m);
    Scalar den = Scalar::one() - Scalar::s_power(4);
    return num / den;
}

// E_j on a polynomial (no det part): module-algebra rule through the coproduct.
QPolynomial e_on_poly(int n, int j, const QPolynomial& p) {
    QPolynomial out;
    for (const auto& [m, c] : p.terms()) {
        auto w = m.word();
        int pref = 0;  // accumulated K_j-exponent of the prefix
        for (std::size_t i = 0; i < w.size(); ++i) {
            int a = zgen_row(n, w[i]), b = zgen_col(n, w[i]);
            auto rep = e_replacement(n, j, a, b);
            if (rep) {
                std::vector<std::uint8_t> full(w.begin(), w.begin() + i);
                full.insert(full.end(), rep->w.begin(), rep->w.end());
                full.insert(full.end(), w.begin() + i + 1, w.end());
                out += normalize_word(n, full, c * rep->c * Scalar::s_power(2 * pref));
            }
            pref += k_exponent(n, j, a, b);
        }
    }
    return out;
}

QPolynomial f_on_poly(int n, int j, const QPolynomial& p) {
    QPolynomial out;
    for (const auto& [m, c] : p.terms()) {
        auto w = m.word();
        std::vector<int> suff(w.size() + 1, 0);  // K_j^{-1}-exponent of the suffix
        for (std::size_t i = w.size(); i-- > 0;)
            suff[i] = suff[i + 1] - k_exponent(n, j, zgen_row(n, w[i]), zgen_col(n, w[i]));
        for (std::size_t i = 0; i < w.size(); ++i) {
            int a = zgen_row(n, w[i]), b = zgen_col(n, w[i]);
            auto rep = f_replacement(n, j, a, b);
            if (!rep) continue;
            std::vector<std::uint8_t> full(w.begin(), w.begin() + i);
            full.insert(full.end(), rep->w.begin(), rep->w.end());
            full.insert(full.end(), w.begin() + i + 1, w.end());
            out += normalize_word(n, full, c * rep->c * Scalar::s_power(2 * suff[i + 1]));
        }
    }
    return out;
}

QPolynomial k_on_poly(int n, int j, int sign, const QPolynomial& p) {
    QPolynomial out;
    for (const auto& [m, c] : p.terms()) {
        int e = 0;
        for (std::size_t g = 0; g < m.e.size(); ++g)
            if (m.e[g])
                e += m.e[g] * k_exponent(n, j, zgen_row(n, (int)g), zgen_col(n, (int)g));
        out.add(m, c * Scalar::s_power(2 * sign * e));
    }
    return out;
}

// Untwisted action on x = poly * det^{-d}.
LocalizedVector act_untwisted(int n, const UGen& g, const LocalizedVector& x) {
    const int d = x.dpow;
    switch (g.kind) {
        case GenKind::K:
        case GenKind::Kinv: {
            int sign = g.kind == GenKind::K ? 1 : -1;
            QPolynomial p = k_on_poly(n, g.i, sign, x.poly);
            if (g.i == n && d != 0) p = p.scaled(Scalar::s_power(sign * -4 * d));
            return LocalizedVector(n, std::move(p), d);
        }
        case GenKind::E: {
            QPolynomial p = e_on_poly(n, g.i, x.poly);
            LocalizedVector out(n, std::move(p), d);
            if (g.i == n && d != 0) {
                // + K_n(poly) * E_n(det^{-d}),  E_n(det^{l}) = -q^{1/2} (1-q^{2l})/(1-q^2) z_n^n det^{l}
                Scalar c = -Scalar::s_power(1) * ratio_1m_q2(-d);
                QPolynomial kp = k_on_poly(n, n, 1, x.poly).scaled(Scalar::s_power(-4 * d) * c);
                QPolynomial znn = QPolynomial::generator(n, n, n);
                out = out + LocalizedVector(n, qmul(n, kp, znn), d);
            }
            return out;
        }
        case GenKind::F: {
            QPolynomial p = f_on_poly(n, g.i, x.poly);
            if (g.i != n) return LocalizedVector(n, std::move(p), d);
            // F_n(poly * det^{-d}) = F_n(poly) K_n^{-1}(det^{-d}) + poly * F_n(det^{-d})
            LocalizedVector out(n, p.scaled(Scalar::s_power(4 * d)), d);
            if (d != 0) {
                // F_n(det^{l}) = q^{1/2} (1-q^{-2l})/(1-q^{-2}) z^{^(n-1)} det^{l-1}
                //              = q^{1/2} * q^2 (1-q^{2d})/(q^2-1) ... computed exactly:
                Scalar num = Scalar::one() - Scalar::s_power(4 * d);
                Scalar den = Scalar::one() - Scalar::s_power(-4);
                Scalar c = Scalar::s_power(1) * (num / den);
                if (n == 1) {
                    out = out + LocalizedVector(n, x.poly.scaled(c), d + 1);
                } else {
                    out = out + LocalizedVector(n, qmul(n, x.poly, leading_minor(n, n - 1)).scaled(c), d + 1);
                }
            }
            return out;
        }
    }
    return LocalizedVector::zero(n);
}

}  // namespace

LocalizedVector act_gen(const RepContext& ctx, const UGen& g, const LocalizedVector& x) {
    const int n = ctx.n;
    if (x.is_zero()) return LocalizedVector::zero(n);
    if (!ctx.twisted || g.i != n) return act_untwisted(n, g, x);

    // pi_{alpha,beta} differs from the untwisted action only at index n.
    switch (g.kind) {
        case GenKind::K:
            return act_untwisted(n, g, x).scaled(ctx.settle(Scalar::q_power(0, 1, -1)));
        case GenKind::Kinv:
            return act_untwisted(n, g, x).scaled(ctx.settle(Scalar::q_power(0, -1, 1)));
        case GenKind::E: {
            // pi(E_n) x = E_n(x) + q^{-beta-1/2} [beta]_q K_n(x) z_n^n
            Scalar ce = ctx.settle(Scalar::monomial(GaussRat(1), -1, 0, -1) * Scalar::qint(0, 1, 0));
            LocalizedVector kx = act_untwisted(n, UGen{GenKind::K, n}, x);
            LocalizedVector tw(n, qmul(n, kx.poly, QPolynomial::generator(n, n, n)), kx.dpow);
            return act_untwisted(n, g, x) + tw.scaled(ce);
        }
        case GenKind::F: {
            // pi(F_n) x = q^{beta-alpha} F_n(x) + q^{beta+3/2} [alpha]_q x z^{^(n-1)} det^{-1}
            Scalar shift = ctx.settle(Scalar::q_power(0, -1, 1));
            Scalar cf = ctx.settle(Scalar::monomial(GaussRat(1), 3, 0, 1) * Scalar::qint(1, 0, 0));
            LocalizedVector base = act_untwisted(n, g, x).scaled(shift);
            QPolynomial xm = (n == 1) ? x.poly : qmul(n, x.poly, leading_minor(n, n - 1));
            return base + LocalizedVector(n, xm.scaled(cf), x.dpow + 1);
        }
    }
    return LocalizedVector::zero(n);
}

LocalizedVector act_word(const RepContext& ctx, const UWord& w, const LocalizedVector& x) {
    LocalizedVector out = LocalizedVector::zero(ctx.n);
    for (const auto& [word, coef] : w.terms()) {
        LocalizedVector y = x;
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            y = act_gen(ctx, *it, y);
            if (y.is_zero()) break;
        }
        out = out + y.scaled(ctx.settle(coef));
    }
    return out;
}

std::vector<int> monom_weight(int n, const Monom& m, int dpow) {
    std::vector<int> w(2 * n - 1, 0);
    for (int j = 1; j <= 2 * n - 1; ++j) {
        int e = 0;
        for (std::size_t g = 0; g < m.e.size(); ++g)
            if (m.e[g]) e += m.e[g] * k_exponent(n, j, zgen_row(n, (int)g), zgen_col(n, (int)g));
        w[j - 1] = e;
    }
    w[n - 1] -= 2 * dpow;
    return w;
}

std::vector<int> weight_of(const RepContext& ctx, const LocalizedVector& x) {
    if (x.is_zero()) throw NotWeightVector();
    std::optional<std::vector<int>> w;
    for (const auto& [m, c] : x.poly.terms()) {
        auto mw = monom_weight(ctx.n, m, x.dpow);
        if (!w)
            w = mw;
        else if (*w != mw)
            throw NotWeightVector();
    }
    if (ctx.is_symbolic()) (*w)[ctx.n - 1] += ctx.d();
    return *w;
}

int k0_eigenvalue(const LocalizedVector& x) {
    auto g = grade(x);
    if (g.size() != 1) throw std::domain_error("k0_eigenvalue: input not homogeneous");
    return *g.begin();
}

LocalizedVector twisted_oracle(const RepContext& ctx, const UGen& g, const LocalizedVector& x) {
    const int n = ctx.n;
    if (g.i != n || !ctx.twisted) return act_gen(ctx, g, x);
    Scalar u2 = Scalar::q_power(0, 2, 0);   // q^{2 alpha}
    Scalar uv = Scalar::q_power(0, 1, 1);   // q^{alpha+beta}
    switch (g.kind) {
        case GenKind::K:
        case GenKind::Kinv: {
            // K_n^{+-1}(x w) = K_n^{+-1}(x) q^{+-2a} q^{-+(a+b)} w
            int sign = g.kind == GenKind::K ? 1 : -1;
            Scalar c = ctx.settle(Scalar::q_power(0, sign, -sign));
            return act_untwisted(n, g, x).scaled(c);
        }
        case GenKind::E: {
            // E_n(x w) = E_n(x) w + K_n(x) E_n(w),
            // E_n(w) = [E_n(det^a) + K_n(det^a) E_n(t^{a+b}) factor] z_n^n w.
            Scalar cE1 = -Scalar::s_power(1) * ((Scalar::one() - u2) / (Scalar::one() - Scalar::s_power(4)));
            Scalar cE2 = Scalar::s_power(-3) *
                         ((Scalar::one() - (uv * uv).inverse()) / (Scalar::one() - Scalar::s_power(-4)));
            Scalar c = ctx.settle(cE1 + u2 * cE2);
            LocalizedVector kx = act_untwisted(n, UGen{GenKind::K, n}, x);
            LocalizedVector tw(n, qmul(n, kx.poly, QPolynomial::generator(n, n, n)), kx.dpow);
            return act_untwisted(n, g, x) + tw.scaled(c);
        }
        case GenKind::F: {
            // F_n(x w) = F_n(x) K_n^{-1}(w) + x F_n(w),
            // K_n^{-1}(w) = q^{b-a} w,
            // F_n(w) = q^{a+b} q^{1/2} (1-q^{-2a})/(1-q^{-2}) z^{^(n-1)} det^{-1} w.
            Scalar shift = ctx.settle(Scalar::q_power(0, -1, 1));
            Scalar cf = ctx.settle(
                uv * Scalar::s_power(1) *
                ((Scalar::one() - u2.inverse()) / (Scalar::one() - Scalar::s_power(-4))));
            LocalizedVector base = act_untwisted(n, g, x).scaled(shift);
            QPolynomial xm = (n == 1) ? x.poly : qmul(n, x.poly, leading_minor(n, n - 1));
            return base + LocalizedVector(n, xm.scaled(cf), x.dpow + 1);
        }
    }
    return LocalizedVector::zero(n);
}

}  // namespace qmb
