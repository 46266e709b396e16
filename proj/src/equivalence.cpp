#include "qmatball/equivalence.hpp"

#include <functional>

namespace qmb {

CanonicalParams canonicalize(const ParameterPoint& alpha, const ParameterPoint& beta) {
    if (alpha.im_units != beta.im_units || (alpha.re - beta.re).get_den() != 1)
        throw std::invalid_argument("canonicalize: alpha - beta must be an integer");
    mpz_class d = (alpha.re - beta.re).get_num();
    mpz_class m;
    mpz_fdiv_q_ui(m.get_mpz_t(), d.get_mpz_t(), 2);
    CanonicalParams out;
    out.shift = m.get_si();
    out.alpha = ParameterPoint(alpha.re - Rat(m), alpha.im_units);
    out.beta = ParameterPoint(beta.re + Rat(m), beta.im_units);
    return out;
}

EquivalenceClass partner_class(int n, const ParameterPoint& alpha, const ParameterPoint& beta) {
    EquivalenceClass out;
    out.integral = alpha.is_integer() && beta.is_integer();
    out.points.emplace_back(alpha, beta);
    if (!out.integral) {
        ParameterPoint pa(Rat(-n) - beta.re, beta.im_units);
        ParameterPoint pb(Rat(-n) - alpha.re, alpha.im_units);
        if (!(pa == alpha && pb == beta)) out.points.emplace_back(pa, pb);
    }
    return out;
}

namespace {

// 1 - q^{2(alpha+c)} and 1 - q^{2(-beta+c)} as scalars.
Scalar alpha_factor(int c) { return Scalar::one() - Scalar::monomial(GaussRat(1), 4 * c, 2, 0); }
Scalar beta_factor(int c) { return Scalar::one() - Scalar::monomial(GaussRat(1), 4 * c, 0, -2); }

struct FactorList {
    std::vector<long> num_roots, den_roots;  // roots as alpha = r (given d)
    Scalar num, den;
};

FactorList a_coeff_factors(int n, const Signature& k, int d) {
    FactorList f;
    f.num = Scalar::one();
    f.den = Scalar::one();
    for (int j = 1; j <= static_cast<int>(k.size()); ++j) {
        int kj = k[j - 1];
        if (kj > 0) {
            for (int i = 0; i < kj; ++i) {
                f.num *= alpha_factor(n + i - j + 1);
                f.den *= beta_factor(i - j + 1);
                f.num_roots.push_back(-(n + i - j + 1));
                f.den_roots.push_back((i - j + 1) + d);
            }
        } else if (kj < 0) {
            for (int i = 1 + kj; i <= 0; ++i) {
                f.num *= beta_factor(i - j);
                f.den *= alpha_factor(n + i - j);
                f.num_roots.push_back((i - j) + d);
                f.den_roots.push_back(-(n + i - j));
            }
        }
    }
    return f;
}

}  // namespace

Scalar a_coeff(int n, const Signature& k) {
    FactorList f = a_coeff_factors(n, k, 0);
    return f.num / f.den;
}

PoleReport a_coeff_poles(int n, const Signature& k, int d) {
    PoleReport rep;
    FactorList f = a_coeff_factors(n, k, d);
    std::map<long, int> count;
    for (long r : f.den_roots) ++count[r];
    for (long r : f.num_roots) --count[r];
    for (const auto& [r, c] : count)
        if (c > 0) {
            rep.orders[r] = c;
            rep.max_order = std::max(rep.max_order, c);
        }
    // Reconstruct the reduced denominator from the uncancelled factors: the
    // product of (1 - q^{2(alpha - r)}) over pole roots with multiplicity
    // must reproduce the canonical denominator of a_k up to a monomial.
    Scalar prod = Scalar::one();
    for (const auto& [r, c] : rep.orders)
        for (int i = 0; i < c; ++i) prod *= (Scalar::one() - Scalar::monomial(GaussRat(1), -4 * (int)r, 2, 0));
    Scalar a = a_coeff(n, k).tied(d);
    Scalar prod_norm = Scalar::one() / prod;  // canonicalizes the denominator
    rep.matches_reduced = (prod_norm.den() == a.den());
    return rep;
}

Scalar partner_substitution(const Scalar& c, int n) {
    auto map_poly = [n](const TriPoly& p) {
        TriPoly out;
        for (const auto& [m, co] : p.terms()) {
            Mono t;
            t.e[0] = m.e[0] - 2 * n * (m.e[1] + m.e[2]);
            t.e[1] = -m.e[2];
            t.e[2] = -m.e[1];
            out.add_term(t, co);
        }
        return out;
    };
    return Scalar(map_poly(c.num()), map_poly(c.den()));
}

Scalar shift_substitution(const Scalar& c, int da, int db) {
    auto map_poly = [da, db](const TriPoly& p) {
        TriPoly out;
        for (const auto& [m, co] : p.terms()) {
            Mono t = m;
            t.e[0] += 2 * da * m.e[1] + 2 * db * m.e[2];
            out.add_term(t, co);
        }
        return out;
    };
    return Scalar(map_poly(c.num()), map_poly(c.den()));
}

namespace {

LocalizedVector map_coeffs(const LocalizedVector& x, const std::function<Scalar(const Scalar&)>& f) {
    QPolynomial p;
    for (const auto& [m, c] : x.poly.terms()) p.add(m, f(c));
    return LocalizedVector(x.n, std::move(p), x.dpow);
}

std::vector<Signature> signature_box(int n, int bound) {
    std::vector<Signature> sigs;
    Signature k(n);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == n) {
            sigs.push_back(k);
            return;
        }
        int hi = pos == 0 ? bound : std::min(bound, k[pos - 1]);
        for (int v = -bound; v <= hi; ++v) {
            k[pos] = v;
            rec(pos + 1);
        }
    };
    rec(0);
    return sigs;
}

}  // namespace

IntertwinerReport intertwine_verify(int n, int d, int bound) {
    IntertwinerReport rep;
    auto fail = [&](std::string s) { rep.failures.push_back(std::move(s)); };

    // (i) both ratio recurrences, identically in (u, v).
    for (const auto& k : signature_box(n, bound)) {
        Scalar ak = a_coeff(n, k);
        for (int j = 1; j <= n; ++j) {
            Signature kp = k;
            kp[j - 1] += 1;
            if (signature_dominant(kp) && kp[0] <= bound) {
                Scalar lhs = a_coeff(n, kp) / ak;
                Scalar rhs = Scalar::monomial(GaussRat(1), 2 * n, 1, 1) *
                             Scalar::qint(-1, 0, j - 1 - n - k[j - 1]) / Scalar::qint(0, 1, j - 1 - k[j - 1]);
                if (lhs != rhs) {
                    rep.recurrences_ok = false;
                    fail("up recurrence at " + signature_str(k) + " j=" + std::to_string(j));
                }
            }
            Signature km = k;
            km[j - 1] -= 1;
            if (signature_dominant(km) && km[n - 1] >= -bound) {
                Scalar lhs = a_coeff(n, km) / ak;
                Scalar rhs = Scalar::monomial(GaussRat(1), -2 * n, -1, -1) *
                             Scalar::qint(0, -1, k[j - 1] - j) / Scalar::qint(1, 0, k[j - 1] + n - j);
                if (lhs != rhs) {
                    rep.recurrences_ok = false;
                    fail("down recurrence at " + signature_str(k) + " j=" + std::to_string(j));
                }
            }
        }
    }

    // (ii) operator identity A pi_{a,b}(g) = pi_{-n-b,-n-a}(g) A on the window.
    RepContext gen_ctx = RepContext::concrete(n, ParameterPoint(), ParameterPoint());  // untied symbolic
    WindowDecomposition dec(n, -n * (bound - 1) - 1, n * (bound - 1) + 1, bound, bound + 1);
    auto inside_box = [&](const Signature& k) {
        for (int v : k)
            if (v > bound - 1 || v < -(bound - 1)) return false;
        return true;
    };
    auto apply_A = [&](const LocalizedVector& x) {
        LocalizedVector out = LocalizedVector::zero(n);
        for (const auto& piece : dec.split(x)) {
            const auto& comp = dec.components()[piece.comp];
            out = out + comp.basis[piece.vec].scaled(piece.c * a_coeff(n, comp.signature));
        }
        return out;
    };
    std::vector<UGen> gens;
    for (int i = 1; i <= 2 * n - 1; ++i) {
        gens.push_back(UGen{GenKind::E, i});
        gens.push_back(UGen{GenKind::F, i});
        gens.push_back(UGen{GenKind::K, i});
        gens.push_back(UGen{GenKind::Kinv, i});
    }
    for (const auto& comp : dec.components()) {
        if (!inside_box(comp.signature)) continue;
        Scalar ak = a_coeff(n, comp.signature);
        for (const auto& x : comp.basis) {
            for (const auto& g : gens) {
                LocalizedVector gx = act_gen(gen_ctx, g, x);
                LocalizedVector lhs = apply_A(gx);
                LocalizedVector rhs = map_coeffs(gx, [&](const Scalar& c) { return partner_substitution(c, n); })
                                          .scaled(ak);
                if (!loc_equal(lhs, rhs)) {
                    rep.operator_ok = false;
                    fail("operator identity at " + signature_str(comp.signature) + " gen " + g.str());
                }
            }
        }
    }

    // (iii) det-shift: T pi_{a-1,b+1}(g) = pi_{a,b}(g) T on plain window vectors.
    {
        std::vector<LocalizedVector> vecs;
        std::function<void(Monom&, int, int)> rec = [&](Monom& mono, int pos, int left) {
            if (pos == n * n) {
                vecs.push_back(LocalizedVector(n, QPolynomial::from_monom(mono, Scalar::one()), 0));
                vecs.push_back(LocalizedVector(n, QPolynomial::from_monom(mono, Scalar::one()), 1));
                return;
            }
            for (int e = 0; e <= left; ++e) {
                mono.e[pos] = static_cast<std::uint16_t>(e);
                rec(pos + 1, left - e);
            }
            mono.e[pos] = 0;
        };
        Monom mono(n * n);
        for (int deg = 0; deg <= std::max(2, bound); ++deg) rec(mono, 0, deg);
        for (const auto& x : vecs)
            for (const auto& g : gens) {
                LocalizedVector gx = act_gen(gen_ctx, g, x);
                LocalizedVector lhs = map_coeffs(gx, [&](const Scalar& c) { return shift_substitution(c, -1, 1); });
                lhs.dpow += 1;  // T
                LocalizedVector tx = x;
                tx.dpow += 1;
                LocalizedVector rhs = act_gen(gen_ctx, g, tx);
                if (!loc_equal(lhs, rhs)) {
                    rep.det_shift_ok = false;
                    fail("det-shift at det power " + std::to_string(x.dpow) + " gen " + g.str());
                }
            }
    }
    return rep;
}

}  // namespace qmb
