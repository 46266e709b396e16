#include "qmatball/isotypic.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace qmb {

bool signature_dominant(const Signature& k) {
    for (std::size_t i = 0; i + 1 < k.size(); ++i)
        if (k[i] < k[i + 1]) return false;
    return true;
}

std::string signature_str(const Signature& k) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (i) os << ",";
        os << k[i];
    }
    os << ")";
    return os.str();
}

int signature_sum(const Signature& k) {
    int s = 0;
    for (int x : k) s += x;
    return s;
}

LocalizedVector vh_vector(int n, const Signature& k) {
    if (static_cast<int>(k.size()) != n || !signature_dominant(k))
        throw std::invalid_argument("vh_vector: invalid signature");
    LocalizedVector v = LocalizedVector::unit(n);
    for (int i = 1; i < n; ++i) {
        int e = k[i - 1] - k[i];
        for (int t = 0; t < e; ++t) v = LocalizedVector(n, qmul(n, v.poly, leading_minor(n, i)), v.dpow);
    }
    int kn = k[n - 1];
    if (kn >= 0) {
        for (int t = 0; t < kn; ++t) v = LocalizedVector(n, qmul(n, v.poly, qdet(n)), v.dpow);
    } else {
        v.dpow += -kn;
    }
    return v;
}

long weyl_dim(int n, const std::vector<int>& m) {
    if (static_cast<int>(m.size()) != n - 1) throw std::invalid_argument("weyl_dim: need n-1 labels");
    // prod_{1<=i<j<=n} (m_i + ... + m_{j-1} + j - i) / (j - i)
    long num = 1, den = 1;
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            int s = 0;
            for (int t = i; t < j; ++t) s += m[t - 1];
            num *= s + (j - i);
            den *= (j - i);
        }
    return num / den;
}

namespace {

// All monomials of the given z-degree, grouped by untwisted weight.
std::map<std::vector<int>, std::vector<Monom>> monomials_by_weight(int n, int deg, int detpow) {
    std::map<std::vector<int>, std::vector<Monom>> groups;
    Monom m(n * n);
    // iterate all exponent vectors of total degree deg
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == n * n) {
            if (left == 0) groups[monom_weight(n, m, detpow)].push_back(m);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            m.e[pos] = static_cast<std::uint16_t>(e);
            rec(pos + 1, left - e);
        }
        m.e[pos] = 0;
    };
    rec(0, deg);
    return groups;
}

Signature signature_from_weight(int n, const std::vector<int>& w) {
    // untwisted highest weight (k1-k2, ..., k_{n-1}-k_n, 2k_n, mirrored...)
    int kn2 = w[n - 1];
    if (kn2 % 2 != 0) throw std::logic_error("isotypic: odd K_n weight on a highest vector");
    Signature k(n);
    k[n - 1] = kn2 / 2;
    for (int i = n - 1; i >= 1; --i) k[i - 1] = k[i] + w[i - 1];
    return k;
}

}  // namespace

std::vector<IsotypicComponent> decompose(int n, int grade, int detpow) {
    const int deg = grade + n * detpow;
    if (deg < 0) return {};
    RepContext ctx = RepContext::untwisted(n);
    auto groups = monomials_by_weight(n, deg, detpow);

    // Highest vectors: per weight group, joint kernel of all E_i, i != n.
    std::vector<LocalizedVector> highest;
    for (const auto& [w, monos] : groups) {
        Coordinatizer frame(n, detpow);
        std::vector<LocalizedVector> vecs;
        vecs.reserve(monos.size());
        for (const auto& m : monos) vecs.push_back(LocalizedVector(n, QPolynomial::from_monom(m, Scalar::one()), detpow));
        std::vector<LocalizedVector> images;
        for (const auto& v : vecs)
            for (int i = 1; i <= 2 * n - 1; ++i) {
                if (i == n) continue;
                images.push_back(act_gen(ctx, UGen{GenKind::E, i}, v));
            }
        for (const auto& y : images) frame.absorb(y);
        if (frame.dim() == 0) {
            // every E_i kills the whole group
            for (const auto& v : vecs) highest.push_back(v);
            continue;
        }
        CoordMatrix m;  // rows: coordinates of images, transposed below
        std::vector<CoordVector> cols;
        for (const auto& y : images) cols.push_back(frame.coords(y));
        const std::size_t rows = frame.dim();
        CoordMatrix a(rows, CoordVector(vecs.size(), Scalar::zero()));
        // images come in blocks of (2n-2) per vector
        const std::size_t per = 2 * (std::size_t)n - 2;
        // Build one stacked matrix: all generator images concatenated row-wise.
        CoordMatrix stacked(rows * per, CoordVector(vecs.size(), Scalar::zero()));
        for (std::size_t j = 0; j < vecs.size(); ++j)
            for (std::size_t g = 0; g < per; ++g) {
                const CoordVector& c = cols[j * per + g];
                for (std::size_t r = 0; r < rows; ++r) stacked[g * rows + r][j] = c[r];
            }
        for (const auto& kv : kernel(stacked)) {
            QPolynomial p;
            for (std::size_t j = 0; j < vecs.size(); ++j)
                if (!kv[j].is_zero()) p.add(monos[j], kv[j]);
            highest.push_back(LocalizedVector(n, std::move(p), detpow));
        }
    }

    // Close each highest vector under the lowering operators F_i, i != n.
    std::vector<IsotypicComponent> comps;
    for (const auto& vh : highest) {
        IsotypicComponent comp;
        comp.highest_weight = weight_of(ctx, vh);
        comp.signature = signature_from_weight(n, comp.highest_weight);
        if (!signature_dominant(comp.signature))
            throw std::logic_error("isotypic: non-dominant signature from highest vector");
        Coordinatizer frame(n, detpow);
        EchelonSpan span;
        std::deque<LocalizedVector> queue{vh};
        // pre-absorb: frame must know all monomials of the degree piece
        for (const auto& [w, monos] : groups)
            for (const auto& m : monos) frame.absorb(LocalizedVector(n, QPolynomial::from_monom(m, Scalar::one()), detpow));
        span.insert(frame.coords(vh));
        comp.basis.push_back(vh);
        while (!queue.empty()) {
            LocalizedVector v = queue.front();
            queue.pop_front();
            for (int i = 1; i <= 2 * n - 1; ++i) {
                if (i == n) continue;
                LocalizedVector y = act_gen(ctx, UGen{GenKind::F, i}, v);
                if (y.is_zero()) continue;
                if (span.insert(frame.coords(y))) {
                    comp.basis.push_back(y);
                    queue.push_back(y);
                }
            }
        }
        comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end(),
              [](const IsotypicComponent& a, const IsotypicComponent& b) { return a.signature > b.signature; });

    // Exhaustiveness: component dimensions must fill the whole piece.
    std::size_t total = 0, piecedim = 0;
    for (const auto& c : comps) total += c.basis.size();
    for (const auto& [w, monos] : groups) piecedim += monos.size();
    if (total != piecedim) throw std::logic_error("isotypic: decomposition does not fill the graded piece");
    return comps;
}

WindowDecomposition::WindowDecomposition(int n, int grade_min, int grade_max, int detpow, int workpow)
    : n_(n), gmin_(grade_min), gmax_(grade_max), detpow_(detpow), workpow_(workpow < 0 ? detpow + 1 : workpow) {
    if (workpow_ < detpow_) throw std::invalid_argument("WindowDecomposition: workpow below detpow");
    for (int grade = std::max(grade_min, -n * detpow); grade <= grade_max; ++grade) {
        auto comps = decompose(n, grade, detpow);
        GradeFrame frame{Coordinatizer(n, workpow_), {}, {}};
        for (auto& c : comps) {
            for (const auto& v : c.basis) frame.coords.absorb(v);
        }
        std::size_t base = comps_.size();
        for (std::size_t ci = 0; ci < comps.size(); ++ci) {
            for (std::size_t vi = 0; vi < comps[ci].basis.size(); ++vi) {
                frame.basis.push_back(frame.coords.coords(comps[ci].basis[vi]));
                frame.owner.emplace_back(base + ci, vi);
            }
            comps_.push_back(std::move(comps[ci]));
        }
        frames_.emplace(grade, std::move(frame));
    }
}

const IsotypicComponent* WindowDecomposition::find(const Signature& k) const {
    for (const auto& c : comps_)
        if (c.signature == k) return &c;
    return nullptr;
}

std::vector<WindowDecomposition::Piece> WindowDecomposition::split(const LocalizedVector& x) const {
    std::vector<Piece> out;
    if (x.is_zero()) return out;
    if (x.dpow > workpow_) throw std::invalid_argument("WindowDecomposition: det power outside window");
    LocalizedVector r = x.raised(workpow_);
    // Split by grade.
    std::map<int, QPolynomial> by_grade;
    for (const auto& [m, c] : r.poly.terms()) by_grade[m.degree() - n_ * workpow_].add(m, c);
    for (auto& [g, poly] : by_grade) {
        auto it = frames_.find(g);
        if (it == frames_.end()) throw std::invalid_argument("WindowDecomposition: grade outside window");
        const GradeFrame& f = it->second;
        auto sol = coords_in_span(f.coords.coords(LocalizedVector(n_, poly, workpow_)), f.basis);
        if (!sol) throw std::logic_error("WindowDecomposition: vector not in component span");
        for (std::size_t j = 0; j < sol->size(); ++j)
            if (!(*sol)[j].is_zero()) out.push_back(Piece{f.owner[j].first, f.owner[j].second, (*sol)[j]});
    }
    return out;
}

LocalizedVector WindowDecomposition::project(const LocalizedVector& x, const Signature& target) const {
    LocalizedVector out = LocalizedVector::zero(n_);
    for (const auto& p : split(x)) {
        if (comps_[p.comp].signature != target) continue;
        out = out + comps_[p.comp].basis[p.vec].scaled(p.c);
    }
    return out;
}

}  // namespace qmb
