#include "qmatball/qmatrix.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace qmb {

std::vector<std::uint8_t> Monom::word() const {
    std::vector<std::uint8_t> w;
    for (std::size_t g = 0; g < e.size(); ++g)
        for (int k = 0; k < e[g]; ++k) w.push_back(static_cast<std::uint8_t>(g));
    return w;
}

QPolynomial QPolynomial::constant(int n, const Scalar& c) {
    QPolynomial p;
    p.add(Monom(n * n), c);
    return p;
}

QPolynomial QPolynomial::generator(int n, int a, int b) {
    Monom m(n * n);
    m.e[zgen_index(n, a, b)] = 1;
    return from_monom(std::move(m), Scalar::one());
}

void QPolynomial::add(Monom m, Scalar c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(std::move(m), std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

QPolynomial QPolynomial::operator-() const {
    QPolynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

QPolynomial QPolynomial::scaled(const Scalar& c) const {
    QPolynomial r;
    if (c.is_zero()) return r;
    for (const auto& [m, cc] : terms_) r.add(m, cc * c);
    return r;
}

std::set<int> QPolynomial::degrees() const {
    std::set<int> d;
    for (const auto& [m, c] : terms_) d.insert(m.degree());
    return d;
}

std::string QPolynomial::str(int n) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        std::vector<std::string> fs;
        if (!it->second.is_one()) {
            std::string c = it->second.str();
            if (c.find('+') != std::string::npos || c.find('-') != std::string::npos)
                if (c.size() && c[0] != '(') c = "(" + c + ")";
            fs.push_back(c);
        }
        for (std::size_t g = 0; g < it->first.e.size(); ++g) {
            if (!it->first.e[g]) continue;
            std::string f =
                "z[" + std::to_string(zgen_row(n, (int)g)) + "," + std::to_string(zgen_col(n, (int)g)) + "]";
            if (it->first.e[g] > 1) f += "^" + std::to_string(it->first.e[g]);
            fs.push_back(f);
        }
        if (fs.empty()) fs.push_back("1");
        for (std::size_t i = 0; i < fs.size(); ++i) {
            if (i) os << "*";
            os << fs[i];
        }
    }
    return os.str();
}

namespace {

struct RawTerm {
    Scalar c;
    std::vector<std::uint8_t> w;
};

// Rewrite step for an adjacent descent w[i] > w[i+1]; pushes the results.
void apply_rule(int n, const RawTerm& t, std::size_t i, std::vector<RawTerm>& out) {
    int g1 = t.w[i], g2 = t.w[i + 1];
    int a1 = zgen_row(n, g1), b1 = zgen_col(n, g1);
    int a2 = zgen_row(n, g2), b2 = zgen_col(n, g2);
    RawTerm swapped = t;
    std::swap(swapped.w[i], swapped.w[i + 1]);
    if (a1 == a2 || b1 == b2) {
        swapped.c *= Scalar::s_power(-2);  // q^{-1}
        out.push_back(std::move(swapped));
        return;
    }
    if (b1 < b2) {  // a1 > a2: plain commutation
        out.push_back(std::move(swapped));
        return;
    }
    // a1 > a2 and b1 > b2: straightening relation
    RawTerm extra = t;
    extra.c *= -(Scalar::s_power(2) - Scalar::s_power(-2));  // -(q - q^{-1})
    extra.w[i] = static_cast<std::uint8_t>(zgen_index(n, a2, b1));
    extra.w[i + 1] = static_cast<std::uint8_t>(zgen_index(n, a1, b2));
    out.push_back(std::move(swapped));
    out.push_back(std::move(extra));
}

}  // namespace

QPolynomial normalize_word(int n, const std::vector<std::uint8_t>& word, const Scalar& coef,
                           const ReduceStrategy& pick) {
    QPolynomial result;
    std::vector<RawTerm> stack;
    stack.push_back(RawTerm{coef, word});
    std::vector<std::size_t> descents;
    while (!stack.empty()) {
        RawTerm t = std::move(stack.back());
        stack.pop_back();
        descents.clear();
        for (std::size_t i = 0; i + 1 < t.w.size(); ++i)
            if (t.w[i] > t.w[i + 1]) descents.push_back(i);
        if (descents.empty()) {
            Monom m(n * n);
            for (auto g : t.w) ++m.e[g];
            result.add(std::move(m), std::move(t.c));
            continue;
        }
        std::size_t at = descents[pick ? pick(descents.size()) : 0];
        apply_rule(n, t, at, stack);
    }
    return result;
}

QPolynomial qmul(int n, const QPolynomial& x, const QPolynomial& y) {
    QPolynomial r;
    for (const auto& [mx, cx] : x.terms()) {
        auto wx = mx.word();
        for (const auto& [my, cy] : y.terms()) {
            auto w = wx;
            auto wy = my.word();
            w.insert(w.end(), wy.begin(), wy.end());
            r += normalize_word(n, w, cx * cy);
        }
    }
    return r;
}

QPolynomial q_minor(int n, const std::vector<int>& rows, const std::vector<int>& cols) {
    if (rows.empty() || rows.size() != cols.size() || rows.size() > static_cast<std::size_t>(n))
        throw std::invalid_argument("q_minor: malformed index sets");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] < 1 || rows[i] > n || cols[i] < 1 || cols[i] > n)
            throw std::invalid_argument("q_minor: index out of range");
        if (i && (rows[i] <= rows[i - 1] || cols[i] <= cols[i - 1]))
            throw std::invalid_argument("q_minor: index sets must be strictly increasing");
    }
    const int k = static_cast<int>(rows.size());
    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i;
    QPolynomial r;
    do {
        int inv = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (perm[i] > perm[j]) ++inv;
        std::vector<std::uint8_t> w(k);
        for (int i = 0; i < k; ++i) w[i] = static_cast<std::uint8_t>(zgen_index(n, rows[i], cols[perm[i]]));
        Scalar c = Scalar::monomial(inv % 2 ? GaussRat(-1) : GaussRat(1), 2 * inv);  // (-q)^{l(s)}
        r += normalize_word(n, w, c);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return r;
}

const QPolynomial& qdet(int n) { return leading_minor(n, n); }

const QPolynomial& leading_minor(int n, int k) {
    static std::map<std::pair<int, int>, QPolynomial> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, k);
    auto it = cache.find(key);
    if (it == cache.end()) {
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i + 1;
        it = cache.emplace(key, q_minor(n, idx, idx)).first;
    }
    return it->second;
}

LocalizedVector LocalizedVector::raised(int d) const {
    if (d < dpow) throw std::invalid_argument("raised: target power below current");
    LocalizedVector r = *this;
    for (int i = dpow; i < d; ++i) r.poly = qmul(n, r.poly, qdet(n));
    r.dpow = d;
    return r;
}

LocalizedVector LocalizedVector::reduced() const {
    LocalizedVector r = *this;
    while (r.dpow > 0) {
        auto q = divide_by_det(n, r.poly);
        if (!q) break;
        r.poly = std::move(*q);
        --r.dpow;
    }
    if (r.poly.is_zero()) r.dpow = 0;
    return r;
}

LocalizedVector operator+(const LocalizedVector& a, const LocalizedVector& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.n != b.n) throw std::invalid_argument("LocalizedVector: size mismatch");
    int d = std::max(a.dpow, b.dpow);
    LocalizedVector ra = a.raised(d), rb = b.raised(d);
    ra.poly += rb.poly;
    if (ra.poly.is_zero()) return LocalizedVector::zero(a.n);
    return ra;
}

LocalizedVector operator*(const LocalizedVector& a, const LocalizedVector& b) {
    if (a.n != b.n) throw std::invalid_argument("LocalizedVector: size mismatch");
    return LocalizedVector(a.n, qmul(a.n, a.poly, b.poly), a.dpow + b.dpow);
}

bool loc_equal(const LocalizedVector& x, const LocalizedVector& y) {
    int d = std::max(x.dpow, y.dpow);
    return x.raised(d).poly == y.raised(d).poly;
}

std::set<int> grade(const LocalizedVector& x) {
    std::set<int> r;
    for (int d : x.poly.degrees()) r.insert(d - x.n * x.dpow);
    return r;
}

std::optional<QPolynomial> divide_by_det(int n, const QPolynomial& p) {
    const QPolynomial& det = qdet(n);
    // Leading monomial of det is the diagonal; its coefficient is 1.
    Monom diag(n * n);
    for (int a = 1; a <= n; ++a) diag.e[zgen_index(n, a, a)] = 1;
    QPolynomial rem = p, quot;
    while (!rem.is_zero()) {
        const auto& [lm, lc] = *rem.terms().rbegin();
        Monom m(n * n);
        for (int g = 0; g < n * n; ++g) {
            int e = lm.e[g] - diag.e[g];
            if (e < 0) return std::nullopt;
            m.e[g] = static_cast<std::uint16_t>(e);
        }
        // Coefficient of lm in (m * det) is a power of q; solve for it.
        QPolynomial md = qmul(n, QPolynomial::from_monom(m, Scalar::one()), det);
        auto it = md.terms().find(lm);
        if (it == md.terms().end()) return std::nullopt;
        Scalar coef = lc / it->second;
        QPolynomial t = QPolynomial::from_monom(std::move(m), coef);
        quot += t;
        rem -= qmul(n, t, det);
        if (!rem.is_zero() && !(rem.terms().rbegin()->first < lm)) return std::nullopt;
    }
    return quot;
}

std::string LocalizedVector::str() const {
    std::string s = poly.str(n);
    if (dpow > 0) {
        if (poly.size() > 1) s = "(" + s + ")";
        s += "*det^-" + std::to_string(dpow);
    }
    return s;
}

}  // namespace qmb
