#include "qmatball/linalg.hpp"

namespace qmb {

namespace {

struct Echelon {
    std::vector<CoordVector> rows;
    std::vector<std::size_t> pivots;
};

Echelon echelonize(CoordMatrix m) {
    Echelon e;
    if (m.empty()) return e;
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][c].is_zero()) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[r], m[piv]);
        Scalar inv = m[r][c].inverse();
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Scalar f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        e.pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    e.rows = std::move(m);
    return e;
}

}  // namespace

std::vector<CoordVector> kernel(const CoordMatrix& m) {
    if (m.empty()) return {};
    const std::size_t cols = m[0].size();
    Echelon e = echelonize(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<CoordVector> basis;
    for (std::size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        CoordVector v(cols, Scalar::zero());
        v[c] = Scalar::one();
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rows[i][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank(CoordMatrix m) { return echelonize(std::move(m)).pivots.size(); }

std::optional<CoordVector> coords_in_span(const CoordVector& v, const std::vector<CoordVector>& basis) {
    if (basis.empty()) {
        for (const auto& x : v)
            if (!x.is_zero()) return std::nullopt;
        return CoordVector{};
    }
    const std::size_t rows = basis[0].size(), cols = basis.size();
    // Augmented system [basis^T | v].
    CoordMatrix m(rows, CoordVector(cols + 1, Scalar::zero()));
    for (std::size_t j = 0; j < cols; ++j) {
        if (basis[j].size() != rows) throw std::invalid_argument("coords_in_span: ragged basis");
        for (std::size_t i = 0; i < rows; ++i) m[i][j] = basis[j][i];
    }
    for (std::size_t i = 0; i < rows; ++i) m[i][cols] = v[i];
    Echelon e = echelonize(std::move(m));
    CoordVector x(cols, Scalar::zero());
    std::size_t main_rank = 0;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] == cols) return std::nullopt;  // inconsistent
        ++main_rank;
        x[e.pivots[i]] = e.rows[i][cols];
    }
    if (main_rank < cols) throw DependentBasis();
    return x;
}

bool EchelonSpan::insert(CoordVector v) {
    v = reduce(std::move(v));
    std::size_t piv = v.size();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) {
            piv = i;
            break;
        }
    if (piv == v.size()) return false;
    Scalar inv = v[piv].inverse();
    for (auto& x : v) x *= inv;
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
}

CoordVector EchelonSpan::reduce(CoordVector v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Scalar& f = v[pivots_[i]];
        if (f.is_zero()) continue;
        Scalar ff = f;
        for (std::size_t j = 0; j < v.size(); ++j) v[j] -= ff * rows_[i][j];
    }
    return v;
}

void Coordinatizer::absorb(const LocalizedVector& x) {
    if (x.is_zero()) return;
    LocalizedVector r = x.raised(dpow_);
    for (const auto& [m, c] : r.poly.terms()) {
        if (index_.count(m)) continue;
        index_.emplace(m, monoms_.size());
        monoms_.push_back(m);
    }
}

CoordVector Coordinatizer::coords(const LocalizedVector& x) const {
    CoordVector v(index_.size(), Scalar::zero());
    if (x.is_zero()) return v;
    if (x.dpow > dpow_) throw std::invalid_argument("Coordinatizer: det power exceeds frame");
    LocalizedVector r = x.raised(dpow_);
    for (const auto& [m, c] : r.poly.terms()) {
        auto it = index_.find(m);
        if (it == index_.end()) throw std::invalid_argument("Coordinatizer: vector outside frame");
        v[it->second] = c;
    }
    return v;
}

LocalizedVector Coordinatizer::vector(const CoordVector& c) const {
    QPolynomial p;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!c[i].is_zero()) p.add(monoms_[i], c[i]);
    return LocalizedVector(n_, std::move(p), dpow_);
}

}  // namespace qmb
