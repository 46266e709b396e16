#include "qmatball/unitarity.hpp"

#include <functional>

namespace qmb {

std::string SeriesLabel::str() const {
    switch (series) {
        case Series::PrincipalUnitary: return "principal";
        case Series::Complementary: return "complementary";
        case Series::Strange: return "strange";
        case Series::NotUnitarizable: return "not-unitarizable";
        case Series::IntegerCase: return "integer-case-" + std::to_string(integer_case);
    }
    return "?";
}

SeriesLabel classify_series(int n, const ParameterPoint& alpha, const ParameterPoint& beta) {
    if (alpha.im_units != beta.im_units || (alpha.re - beta.re).get_den() != 1)
        throw std::invalid_argument("classify_series: alpha - beta must be an integer");
    if (alpha.is_integer()) {
        long c = (alpha.re + beta.re).get_num().get_si() + n - 1;
        SeriesLabel l{Series::IntegerCase, 0};
        if (c >= 1)
            l.integer_case = 1;
        else if (c == 0)
            l.integer_case = 2;
        else if (c == -1)
            l.integer_case = 3;
        else
            l.integer_case = 4;
        return l;
    }
    if (alpha.im_units == 1) return SeriesLabel{Series::Strange, 0};
    if (alpha.re + beta.re == Rat(-n)) return SeriesLabel{Series::PrincipalUnitary, 0};
    Rat ra = alpha.re + n, rb = beta.re;
    auto absr = [](const Rat& x) { return x < 0 ? Rat(-x) : x; };
    if (absr(ra) < 1 && absr(rb) < 1 && ra * rb < 0) return SeriesLabel{Series::Complementary, 0};
    return SeriesLabel{Series::NotUnitarizable, 0};
}

GaussRat c_ratio(int n, const Signature& k, int j, const ParameterPoint& alpha, const ParameterPoint& beta,
                 const Rat& s0) {
    Scalar f1 = Scalar::one() - Scalar::monomial(GaussRat(1), 4 * (k[j - 1] + 1 + n - j), 2, 0);
    Scalar f2 = Scalar::one() - Scalar::monomial(GaussRat(1), 4 * (k[j - 1] + 1 - j), 0, -2);
    SpecValue v1 = specialize(f1, s0, alpha, beta);
    SpecValue v2 = specialize(f2, s0, alpha, beta);
    if (!v1.exact || !v2.exact) throw std::invalid_argument("c_ratio: sample not exactly representable");
    if (v2.ex.is_zero()) throw PoleAtSpecialization();
    return v1.ex.conj() / v2.ex;
}

namespace {

using NumVec = std::vector<GaussRat>;
using NumMat = std::vector<NumVec>;

// Column-space solver over the Gaussian rationals with a fixed basis.
class NumSolver {
  public:
    explicit NumSolver(const NumMat& columns) : cols_(columns) {
        if (cols_.empty()) return;
        rows_ = cols_[0].size();
        NumMat m(rows_, NumVec(cols_.size() + 1, GaussRat(0)));
        work_ = std::move(m);
        for (std::size_t j = 0; j < cols_.size(); ++j)
            for (std::size_t i = 0; i < rows_; ++i) work_[i][j] = cols_[j][i];
        // echelonize the basis part once, remembering the row operations via
        // re-running them on each rhs (store the transformed matrix).
        pivots_.clear();
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_.size() && r < rows_; ++c) {
            std::size_t piv = r;
            while (piv < rows_ && work_[piv][c].is_zero()) ++piv;
            if (piv == rows_) continue;
            std::swap(work_[r], work_[piv]);
            swaps_.emplace_back(r, piv);
            GaussRat inv = work_[r][c].inverse();
            scales_.push_back(inv);
            for (std::size_t jj = 0; jj < cols_.size(); ++jj) work_[r][jj] *= inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r) continue;
                GaussRat f = work_[i][c];
                elims_.push_back({i, r, f});
                if (f.is_zero()) continue;
                for (std::size_t jj = 0; jj < cols_.size(); ++jj) work_[i][jj] -= f * work_[r][jj];
            }
            pivots_.push_back(c);
            ++r;
        }
        rank_ = r;
        if (rank_ != cols_.size()) throw std::logic_error("NumSolver: dependent basis");
    }

    // solve sum x_j col_j = b; throws if inconsistent.
    NumVec solve(NumVec b) const {
        std::size_t si = 0, sc = 0, se = 0;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_.size() && r < rows_; ++c) {
            if (si >= swaps_.size()) break;
            std::swap(b[swaps_[si].first], b[swaps_[si].second]);
            ++si;
            b[r] *= scales_[sc++];
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r) continue;
                const auto& e = elims_[se++];
                if (!e.f.is_zero()) b[e.row] -= e.f * b[e.src];
            }
            ++r;
        }
        NumVec x(cols_.size(), GaussRat(0));
        for (std::size_t i = 0; i < rank_; ++i) x[pivots_[i]] = b[i];
        // consistency
        for (std::size_t i = rank_; i < rows_; ++i)
            if (!b[i].is_zero()) throw std::logic_error("NumSolver: inconsistent system");
        return x;
    }

  private:
    struct Elim {
        std::size_t row, src;
        GaussRat f;
    };
    NumMat cols_;
    NumMat work_;
    std::size_t rows_{0}, rank_{0};
    std::vector<std::size_t> pivots_;
    std::vector<std::pair<std::size_t, std::size_t>> swaps_;
    std::vector<GaussRat> scales_;
    std::vector<Elim> elims_;
};

bool is_positive_definite(NumMat h) {
    const std::size_t d = h.size();
    for (std::size_t k = 0; k < d; ++k) {
        GaussRat piv = h[k][k];
        if (!(piv.im == 0 && piv.re > 0)) return false;
        for (std::size_t i = k + 1; i < d; ++i)
            for (std::size_t j = k + 1; j < d; ++j) h[i][j] -= h[i][k] * h[k][j] / piv;
    }
    return true;
}

GaussRat spec_exact(const Scalar& c, const Rat& s0, const ParameterPoint& a, const ParameterPoint& b) {
    SpecValue v = specialize(c, s0, a, b);
    if (!v.exact) throw std::invalid_argument("FormSolver: sample not exactly representable");
    return v.ex;
}

}  // namespace

struct FormSolverTester;

FormSolver::FormSolver(int n, int bound, Rat s0)
    : n_(n), bound_(bound), s0_(std::move(s0)), dec_(n, -n * bound, n * bound, bound, bound + 1) {
    RepContext untw = RepContext::untwisted(n);
    ParameterPoint dummy_a, dummy_b;

    // window components inside the box
    for (const auto& comp : dec_.components()) {
        bool inside = true;
        for (int v : comp.signature)
            if (v > bound_ || v < -bound_) inside = false;
        if (!inside) continue;
        Component c;
        c.sig = comp.signature;
        comps_.push_back(std::move(c));
    }

    // Per component: solve the U_q k_ss-invariance constraints on a
    // weight-blocked Hermitian form; expect a one-dimensional solution.
    for (auto& c : comps_) {
        const IsotypicComponent* comp = dec_.find(c.sig);
        const std::size_t dim = comp->basis.size();
        std::vector<std::vector<int>> wt(dim);
        for (std::size_t i = 0; i < dim; ++i) wt[i] = weight_of(untw, comp->basis[i]);
        // unknown indices for same-weight pairs
        std::map<std::pair<std::size_t, std::size_t>, std::size_t> unk;
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                if (wt[i] == wt[j]) unk.emplace(std::make_pair(i, j), unk.size());

        // numeric matrices of the relevant generators within the component
        Coordinatizer frame(n_, dec_.detpow());
        for (const auto& v : comp->basis) frame.absorb(v);
        NumMat basis_cols;
        for (const auto& v : comp->basis) {
            CoordVector sc = frame.coords(v);
            NumVec col(sc.size());
            for (std::size_t i = 0; i < sc.size(); ++i) col[i] = spec_exact(sc[i], s0_, dummy_a, dummy_b);
            basis_cols.push_back(std::move(col));
        }
        NumSolver solver(basis_cols);
        auto gen_matrix = [&](const UWord& w) {
            NumMat m(dim, NumVec(dim, GaussRat(0)));  // m[row][col]
            for (std::size_t j = 0; j < dim; ++j) {
                LocalizedVector y = act_word(untw, w, comp->basis[j]);
                CoordVector sc = frame.coords(y);
                NumVec b(sc.size());
                for (std::size_t i = 0; i < sc.size(); ++i) b[i] = spec_exact(sc[i], s0_, dummy_a, dummy_b);
                NumVec x = solver.solve(std::move(b));
                for (std::size_t i = 0; i < dim; ++i) m[i][j] = x[i];
            }
            return m;
        };

        // constraints H M_xi = M_{xi*}^dagger H for xi = E_i, F_i (i != n)
        std::vector<NumVec> rows;
        for (int i = 1; i <= 2 * n_ - 1; ++i) {
            if (i == n_) continue;
            for (int which = 0; which < 2; ++which) {
                UWord xi = which ? UWord::F(i) : UWord::E(i);
                NumMat M = gen_matrix(xi);
                NumMat Ns = gen_matrix(star(xi, n_));
                // rows indexed by (p, q): sum_r H_{q r} M_{r p} - conj(Ns_{r q}) H_{r p} = 0
                for (std::size_t p = 0; p < dim; ++p)
                    for (std::size_t q = 0; q < dim; ++q) {
                        NumVec row(unk.size(), GaussRat(0));
                        bool nontrivial = false;
                        for (std::size_t r = 0; r < dim; ++r) {
                            if (!M[r][p].is_zero() && wt[q] == wt[r]) {
                                row[unk[{q, r}]] += M[r][p];
                                nontrivial = true;
                            }
                            if (!Ns[r][q].is_zero() && wt[r] == wt[p]) {
                                row[unk[{r, p}]] -= Ns[r][q].conj();
                                nontrivial = true;
                            }
                        }
                        if (nontrivial) rows.push_back(std::move(row));
                    }
            }
        }
        // kernel of the constraint matrix over Q(i)
        std::size_t nu = unk.size();
        NumMat m = rows.empty() ? NumMat{NumVec(nu, GaussRat(0))} : NumMat(rows.begin(), rows.end());
        // gaussian elimination
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t ccol = 0; ccol < nu && r < m.size(); ++ccol) {
            std::size_t piv = r;
            while (piv < m.size() && m[piv][ccol].is_zero()) ++piv;
            if (piv == m.size()) continue;
            std::swap(m[r], m[piv]);
            GaussRat inv = m[r][ccol].inverse();
            for (auto& x : m[r]) x *= inv;
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (i == r) continue;
                GaussRat f = m[i][ccol];
                if (f.is_zero()) continue;
                for (std::size_t jj = 0; jj < nu; ++jj) m[i][jj] -= f * m[r][jj];
            }
            pivots.push_back(ccol);
            ++r;
        }
        if (nu - pivots.size() != 1)
            throw std::logic_error("FormSolver: component form space is not one-dimensional");
        // free column -> kernel vector
        std::vector<bool> is_pivot(nu, false);
        for (auto p : pivots) is_pivot[p] = true;
        std::size_t freec = 0;
        while (is_pivot[freec]) ++freec;
        NumVec sol(nu, GaussRat(0));
        sol[freec] = GaussRat(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) sol[pivots[i]] = -m[i][freec];
        NumMat H(dim, NumVec(dim, GaussRat(0)));
        for (const auto& [pq, idx] : unk) H[pq.first][pq.second] = sol[idx];
        // hermitize
        NumMat Hh(dim, NumVec(dim, GaussRat(0)));
        bool nonzero = false;
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) {
                Hh[i][j] = H[i][j] + H[j][i].conj();
                if (!Hh[i][j].is_zero()) nonzero = true;
            }
        if (!nonzero)
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j)
                    Hh[i][j] = (H[i][j] - H[j][i].conj()) * GaussRat(Rat(0), Rat(-1));
        // normalize the highest-vector norm to +1
        GaussRat top = Hh[0][0];
        if (!(top.im == 0) || top.re == 0) throw std::logic_error("FormSolver: bad highest-vector norm");
        GaussRat inv = top.inverse();
        for (auto& rrow : Hh)
            for (auto& x : rrow) x *= inv;
        if (!is_positive_definite(Hh)) throw std::logic_error("FormSolver: component form not definite");
        c.form = std::move(Hh);
    }

    // Reference normalization: at a principal-series point the full form has
    // c identically 1; fold the solved c's into the component forms.
    ParameterPoint pa(Rat(1 - n_, 2)), pb(Rat(-1 - n_, 2));
    InvariantForm pr = solve(pa, pb, nullptr);
    if (!pr.feasible) throw std::logic_error("FormSolver: principal reference solve failed: " + pr.reason);
    for (auto& c : comps_) {
        GaussRat f = pr.c.at(c.sig);
        for (auto& row : c.form)
            for (auto& x : row) x *= f;
    }
}

std::size_t FormSolver::comp_index(const Signature& k) const {
    for (std::size_t i = 0; i < comps_.size(); ++i)
        if (comps_[i].sig == k) return i;
    throw std::invalid_argument("FormSolver: signature outside window");
}

std::vector<std::vector<GaussRat>> FormSolver::numeric_map(const UWord& w, std::size_t src, std::size_t tgt,
                                                           const ParameterPoint& a, const ParameterPoint& b) const {
    const IsotypicComponent* cs = dec_.find(comps_[src].sig);
    const IsotypicComponent* ct = dec_.find(comps_[tgt].sig);
    RepContext gen_ctx = RepContext::concrete(n_, a, b);
    Coordinatizer frame(n_, dec_.workpow());
    for (const auto& v : ct->basis) frame.absorb(v);
    NumMat cols;
    for (const auto& v : ct->basis) {
        CoordVector sc = frame.coords(v);
        NumVec col(sc.size());
        for (std::size_t i = 0; i < sc.size(); ++i) col[i] = spec_exact(sc[i], s0_, a, b);
        cols.push_back(std::move(col));
    }
    NumSolver solver(cols);
    const std::size_t dt = ct->basis.size(), ds = cs->basis.size();
    NumMat m(dt, NumVec(ds, GaussRat(0)));
    for (std::size_t j = 0; j < ds; ++j) {
        LocalizedVector y = act_word(gen_ctx, w, cs->basis[j]);
        LocalizedVector p = dec_.project(y, comps_[tgt].sig);
        CoordVector sc = frame.coords(p);
        NumVec bb(sc.size());
        for (std::size_t i = 0; i < sc.size(); ++i) bb[i] = spec_exact(sc[i], s0_, a, b);
        NumVec x = solver.solve(std::move(bb));
        for (std::size_t i = 0; i < dt; ++i) m[i][j] = x[i];
    }
    return m;
}

InvariantForm FormSolver::solve(const ParameterPoint& a, const ParameterPoint& b,
                                const SignaturePredicate* pred) const {
    InvariantForm out;
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < comps_.size(); ++i)
        if (!pred || pred->contains(comps_[i].sig)) active.push_back(i);
    if (active.empty()) {
        out.reason = "no components selected";
        return out;
    }
    auto entries = pq_basis(true, n_);

    // Edge ratios c_tgt / c_src from the p_q^+ invariance instances.
    std::map<std::pair<std::size_t, std::size_t>, GaussRat> ratio;
    for (std::size_t si = 0; si < active.size(); ++si) {
        std::size_t s = active[si];
        const Signature& k = comps_[s].sig;
        for (int j = 1; j <= n_; ++j) {
            Signature kt = k;
            kt[j - 1] += 1;
            if (!signature_dominant(kt)) continue;
            std::size_t t;
            try {
                t = comp_index(kt);
            } catch (const std::invalid_argument&) {
                continue;  // window boundary
            }
            if (pred && !pred->contains(kt)) continue;
            const NumMat& Hs = comps_[s].form;
            const NumMat& Ht = comps_[t].form;
            std::optional<GaussRat> edge;
            for (int ea = 0; ea < n_; ++ea)
                for (int eb = 0; eb < n_; ++eb) {
                    const UWord& xi = entries[ea][eb];
                    NumMat M = numeric_map(xi, s, t, a, b);
                    NumMat Ns = numeric_map(star(xi, n_, a.im_units == 1, b.im_units == 1), t, s, a, b);
                    const std::size_t dt = Ht.size(), ds = Hs.size();
                    for (std::size_t p = 0; p < ds; ++p)
                        for (std::size_t q = 0; q < dt; ++q) {
                            GaussRat lhs(0), rhs(0);
                            for (std::size_t r = 0; r < dt; ++r) lhs += Ht[q][r] * M[r][p];
                            for (std::size_t r = 0; r < ds; ++r) rhs += Ns[r][q].conj() * Hs[r][p];
                            bool lz = lhs.is_zero(), rz = rhs.is_zero();
                            if (lz && rz) continue;
                            if (lz != rz) {
                                out.reason = "forced c = 0 between " + signature_str(k) + " and " +
                                             signature_str(kt);
                                return out;
                            }
                            GaussRat rr = rhs / lhs;  // c_tgt / c_src
                            if (!edge)
                                edge = rr;
                            else if (!(*edge == rr)) {
                                out.reason = "inconsistent invariance instances between " + signature_str(k) +
                                             " and " + signature_str(kt);
                                return out;
                            }
                        }
                }
            if (edge) ratio.emplace(std::make_pair(s, t), *edge);
        }
    }

    // Propagate over the edge graph, component by component.
    std::map<std::size_t, GaussRat> c;
    for (std::size_t root : active) {
        if (c.count(root)) continue;
        c[root] = GaussRat(1);
        std::vector<std::size_t> queue{root};
        while (!queue.empty()) {
            std::size_t x = queue.back();
            queue.pop_back();
            for (const auto& [e, r] : ratio) {
                std::size_t y;
                GaussRat cy;
                if (e.first == x) {
                    y = e.second;
                    cy = c[x] * r;
                } else if (e.second == x) {
                    y = e.first;
                    cy = c[x] / r;
                } else {
                    continue;
                }
                auto it = c.find(y);
                if (it == c.end()) {
                    c[y] = cy;
                    queue.push_back(y);
                } else if (!(it->second == cy)) {
                    out.reason = "cycle inconsistency at " + signature_str(comps_[y].sig);
                    return out;
                }
            }
        }
    }
    for (const auto& [i, v] : c) {
        if (!(v.im == 0 && v.re > 0)) {
            out.reason = "non-positive coefficient at " + signature_str(comps_[i].sig) + ": " + v.str();
            return out;
        }
        out.c.emplace(comps_[i].sig, v);
    }
    out.feasible = true;
    return out;
}

std::optional<GaussRat> FormSolver::solved_ratio(const InvariantForm& f, const Signature& k, int j) {
    Signature kt = k;
    kt[j - 1] += 1;
    auto a = f.c.find(k), b = f.c.find(kt);
    if (a == f.c.end() || b == f.c.end()) return std::nullopt;
    return b->second / a->second;
}

}  // namespace qmb
