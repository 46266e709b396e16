#include "qmatball/transitions.hpp"

#include <algorithm>
#include <sstream>

namespace qmb {

namespace {

Signature shifted_sig(const Signature& k, int j, int by) {
    Signature t = k;
    t[j - 1] += by;
    return t;
}

// Extract the proportionality scalar of x against y (nonzero), or nullopt.
std::optional<Scalar> proportionality(const LocalizedVector& x, const LocalizedVector& y) {
    if (y.is_zero()) return std::nullopt;
    if (x.is_zero()) return Scalar::zero();
    int d = std::max(x.dpow, y.dpow);
    LocalizedVector rx = x.raised(d), ry = y.raised(d);
    const auto& [m0, c0] = *ry.poly.terms().rbegin();
    auto it = rx.poly.terms().find(m0);
    if (it == rx.poly.terms().end()) return std::nullopt;
    Scalar lambda = it->second / c0;
    if (rx.poly == ry.poly.scaled(lambda)) return lambda;
    return std::nullopt;
}

TransitionMap assemble_map(int n, int d, const Signature& k, int j, bool up, const WindowDecomposition& dec) {
    TransitionMap out;
    out.source = k;
    out.target = shifted_sig(k, j, up ? 1 : -1);
    out.j = j;
    out.up = up;
    // [beta - k_j + j - 1]_q going up, [alpha + k_j + n - j]_q going down,
    // with the accompanying q^{-beta} / q^{alpha} power.
    Scalar bracket = up ? Scalar::monomial(GaussRat(1), 0, 0, -1) * Scalar::qint(0, 1, j - 1 - k[j - 1])
                        : Scalar::monomial(GaussRat(1), 0, 1, 0) * Scalar::qint(1, 0, k[j - 1] + n - j);
    out.bracket = bracket.tied(d);
    if (!signature_dominant(out.target)) {
        out.zero = true;
        out.factor_ok = true;
        return out;
    }
    const IsotypicComponent* src = dec.find(k);
    const IsotypicComponent* tgt = dec.find(out.target);
    if (!src || !tgt) throw std::invalid_argument("transition map: component outside window");

    RepContext ctx = RepContext::symbolic(n, d);
    auto entries = pq_basis(up, n);
    Coordinatizer frame(n, dec.workpow());
    for (const auto& v : tgt->basis) frame.absorb(v);
    std::vector<CoordVector> tbasis;
    for (const auto& v : tgt->basis) tbasis.push_back(frame.coords(v));

    out.matrix.assign(tgt->basis.size(), CoordVector(n * n * src->basis.size(), Scalar::zero()));
    std::size_t col = 0;
    for (const auto& v : src->basis) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                LocalizedVector y = act_word(ctx, entries[a][b], v);
                LocalizedVector p = dec.project(y, out.target);
                auto sol = coords_in_span(frame.coords(p), tbasis);
                if (!sol) throw std::logic_error("transition map: projection failed");
                for (std::size_t r = 0; r < sol->size(); ++r) out.matrix[r][col] = (*sol)[r];
                ++col;
            }
    }

    out.factor_ok = true;
    out.remainder_nonzero = false;
    for (const auto& row : out.matrix)
        for (const auto& c : row) {
            if (c.is_zero()) continue;
            Scalar rem = c / out.bracket;
            if (rem.depends_on_u() || rem.depends_on_v()) out.factor_ok = false;
            out.remainder_nonzero = true;
        }
    return out;
}

}  // namespace

TransitionMap up_map(int n, int d, const Signature& k, int j, const WindowDecomposition& dec) {
    return assemble_map(n, d, k, j, true, dec);
}

TransitionMap down_map(int n, int d, const Signature& k, int j, const WindowDecomposition& dec) {
    return assemble_map(n, d, k, j, false, dec);
}

RaisingScalarReport raising_scalar(int n, int d, const Signature& k, int j) {
    RaisingScalarReport rep;
    rep.k = k;
    rep.j = j;
    RepContext ctx = RepContext::symbolic(n, d);
    LocalizedVector vh = vh_vector(n, k);
    LocalizedVector sum = LocalizedVector::zero(n);
    for (int m = 1; m <= j; ++m) {
        LocalizedVector y = act_word(ctx, K_minus_factor(j, 1, m - 1), vh);
        y = act_word(ctx, build_Fmj(m, j), y);
        y = act_word(ctx, raising_word(n, m, j), y);
        Scalar c = Scalar::monomial((m - 1) % 2 ? GaussRat(-1) : GaussRat(1), 4 * (m - 1));  // (-q^2)^{m-1}
        sum = sum + y.scaled(c);
    }
    if ((j - 1) % 2) sum = -sum;
    // Fixed normalization of the raising basis in this realization.
    sum = sum.scaled(Scalar::s_power(n + 1));

    Signature kt = shifted_sig(k, j, 1);
    Scalar kappa = kminus_eigenvalue(n, j, 1, j - 1, k);
    rep.closed_form =
        (Scalar::monomial(GaussRat(1), 2 * (k[j - 1] + j) - n, 0, -1) * Scalar::qint(0, 1, j - 1 - k[j - 1]) * kappa)
            .tied(d);
    if (!signature_dominant(kt)) {
        rep.proportional = sum.is_zero();
        rep.computed = Scalar::zero();
        rep.matches = rep.proportional && rep.closed_form.is_zero();
        if (!rep.matches && rep.proportional)
            rep.note = "word sum vanishes; closed form " + rep.closed_form.str() + " nonzero outside the cone";
        return rep;
    }
    LocalizedVector vht = vh_vector(n, kt);
    auto lambda = proportionality(sum, vht);
    rep.proportional = lambda.has_value();
    if (lambda) {
        rep.computed = ctx.settle(*lambda);
        rep.matches = (rep.computed == rep.closed_form);
        if (!rep.matches) rep.note = "computed " + rep.computed.str() + " vs closed form " + rep.closed_form.str();
    } else {
        rep.note = "word sum not proportional to the target highest vector";
    }
    return rep;
}

std::optional<std::size_t> Lattice::index_of(const Signature& k) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i] == k) return i;
    return std::nullopt;
}

Lattice lattice(int n, const ParameterPoint& alpha, const ParameterPoint& beta, int bound) {
    Lattice lat;
    lat.n = n;
    lat.bound = bound;
    Signature k(n);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == n) {
            lat.nodes.push_back(k);
            return;
        }
        int hi = pos == 0 ? bound : std::min(bound, k[pos - 1]);
        for (int v = -bound; v <= hi; ++v) {
            k[pos] = v;
            rec(pos + 1);
        }
    };
    rec(0);
    std::sort(lat.nodes.begin(), lat.nodes.end());
    for (std::size_t i = 0; i < lat.nodes.size(); ++i) {
        for (int j = 1; j <= n; ++j) {
            Signature upk = shifted_sig(lat.nodes[i], j, 1);
            auto ui = lat.index_of(upk);
            if (ui && signature_dominant(upk) && !qint_vanishes(beta, j - 1 - lat.nodes[i][j - 1]))
                lat.edges.push_back(Lattice::Edge{i, *ui, j, true});
            Signature dnk = shifted_sig(lat.nodes[i], j, -1);
            auto di = lat.index_of(dnk);
            if (di && signature_dominant(dnk) && !qint_vanishes(alpha, lat.nodes[i][j - 1] + n - j))
                lat.edges.push_back(Lattice::Edge{i, *di, j, false});
        }
    }
    return lat;
}

bool SignaturePredicate::contains(const Signature& k) const {
    for (const auto& a : atoms) {
        long v = k[a.index - 1];
        if (a.rel < 0 && !(v <= a.bound)) return false;
        if (a.rel == 0 && !(v == a.bound)) return false;
        if (a.rel > 0 && !(v >= a.bound)) return false;
    }
    return true;
}

std::string SignaturePredicate::str() const {
    if (atoms.empty()) return "all";
    std::ostringstream os;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (i) os << " && ";
        os << "k" << atoms[i].index << (atoms[i].rel < 0 ? " <= " : atoms[i].rel == 0 ? " == " : " >= ")
           << atoms[i].bound;
    }
    return os.str();
}

StructureReport classify_structure(int n, const ParameterPoint& alpha, const ParameterPoint& beta) {
    if (!(alpha.im_units == beta.im_units && (alpha.re - beta.re).get_den() == 1))
        throw std::invalid_argument("classify: alpha - beta must be an integer");
    StructureReport rep;
    rep.n = n;
    rep.alpha = alpha;
    rep.beta = beta;
    rep.irreducible = !alpha.is_integer();
    if (rep.irreducible) {
        rep.case_label = 0;
        return rep;
    }
    long a = alpha.re.get_num().get_si();
    long b = beta.re.get_num().get_si();
    for (int j = 1; j <= n; ++j) rep.hyperplanes.emplace_back(b + j - 1, -a - n + j);
    long c = a + b + n - 1;
    auto atom = [](int idx, int rel, long bound) { return SignaturePredicate::Atom{idx, rel, bound}; };
    if (c >= 1) {
        rep.case_label = 1;
        rep.finite_dim = true;
        SignaturePredicate p;
        p.name = "Vs";
        for (int j = 1; j <= n; ++j) {
            p.atoms.push_back(atom(j, -1, b + j - 1));
            p.atoms.push_back(atom(j, +1, -a - n + j));
        }
        rep.simples.push_back(std::move(p));
    } else if (c == 0) {
        rep.case_label = 2;
        for (int j = 1; j <= n; ++j) {
            SignaturePredicate p;
            p.name = "Vs" + std::to_string(j);
            p.atoms.push_back(atom(j, 0, b + j - 1));
            rep.simples.push_back(std::move(p));
        }
    } else {
        rep.case_label = (c == -1) ? 3 : 4;
        rep.direct_sum = (c == -1);
        for (int i = 1; i <= n + 1; ++i) {
            SignaturePredicate p;
            p.name = "Vs" + std::to_string(i);
            if (i == 1) {
                p.atoms.push_back(atom(1, -1, b));
            } else if (i == n + 1) {
                p.atoms.push_back(atom(n, +1, -a));
            } else {
                p.atoms.push_back(atom(i - 1, +1, -a - n + i - 1));
                p.atoms.push_back(atom(i, -1, b + i - 1));
            }
            rep.simples.push_back(std::move(p));
        }
    }
    // Which member of the pair (alpha,beta) vs (-n-beta,-n-alpha) has the
    // finite dimensional subrepresentation: partner case label is -c-2.
    rep.partner_has_finite_dim = (-c - 2 >= 1);
    return rep;
}

std::vector<SignaturePredicate> submodule_enumerate(const StructureReport& rep, int bound) {
    const int n = rep.n;
    std::vector<SignaturePredicate> cuts;
    if (rep.case_label != 0) {
        long a = rep.alpha.re.get_num().get_si();
        long b = rep.beta.re.get_num().get_si();
        for (int j = 1; j <= n; ++j) {
            SignaturePredicate up;
            up.name = "k" + std::to_string(j) + "_below";
            up.atoms.push_back(SignaturePredicate::Atom{j, -1, b + j - 1});
            cuts.push_back(up);
            SignaturePredicate dn;
            dn.name = "k" + std::to_string(j) + "_above";
            dn.atoms.push_back(SignaturePredicate::Atom{j, +1, -a - n + j});
            cuts.push_back(dn);
        }
    }
    Lattice lat = lattice(n, rep.alpha, rep.beta, bound);
    std::vector<SignaturePredicate> out;
    std::set<std::vector<bool>> seen;
    for (std::size_t mask = 0; mask < (std::size_t(1) << cuts.size()); ++mask) {
        SignaturePredicate p;
        p.name = "sub";
        for (std::size_t i = 0; i < cuts.size(); ++i)
            if (mask & (std::size_t(1) << i))
                p.atoms.insert(p.atoms.end(), cuts[i].atoms.begin(), cuts[i].atoms.end());
        std::vector<bool> member(lat.nodes.size());
        bool nonempty = false;
        for (std::size_t i = 0; i < lat.nodes.size(); ++i) {
            member[i] = p.contains(lat.nodes[i]);
            nonempty = nonempty || member[i];
        }
        // closure under the lattice edges
        bool closed = true;
        for (const auto& e : lat.edges)
            if (member[e.from] && !member[e.to]) closed = false;
        if (!closed) continue;
        if (!seen.insert(member).second) continue;
        if (!nonempty) p.name = "zero";
        if (mask == 0) p.name = "full";
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace qmb
