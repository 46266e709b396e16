#include "qmatball/uqsl.hpp"

#include <sstream>

namespace qmb {

std::string UGen::str() const {
    switch (kind) {
        case GenKind::E: return "E" + std::to_string(i);
        case GenKind::F: return "F" + std::to_string(i);
        case GenKind::K: return "K" + std::to_string(i);
        case GenKind::Kinv: return "Kinv" + std::to_string(i);
    }
    return "?";
}

UWord UWord::term(Scalar c, GenWord w) {
    UWord r;
    r.add(std::move(w), std::move(c));
    return r;
}

void UWord::add(GenWord w, Scalar c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(std::move(w), std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

UWord UWord::operator-() const {
    UWord r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

UWord& UWord::operator+=(const UWord& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

UWord& UWord::operator-=(const UWord& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

UWord operator*(const UWord& a, const UWord& b) {
    UWord r;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) {
            GenWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add(std::move(w), ca * cb);
        }
    return r;
}

UWord UWord::scaled(const Scalar& c) const {
    UWord r;
    if (c.is_zero()) return r;
    for (const auto& [w, cc] : terms_) r.add(w, cc * c);
    return r;
}

std::string UWord::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::string cs = c.str();
        bool trivial = c.is_one();
        if (!trivial) {
            if (cs.find('+') != std::string::npos || cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
            os << cs;
            if (!w.empty()) os << "*";
        }
        if (w.empty()) {
            if (trivial) os << "1";
        } else {
            for (std::size_t i = 0; i < w.size(); ++i) {
                if (i) os << "*";
                os << w[i].str();
            }
        }
    }
    return os.str();
}

UTensor coproduct(const UWord& w) {
    UTensor out;
    for (const auto& [word, coef] : w.terms()) {
        // multiplicative extension: product over generators of the 2-term
        // generator coproducts.
        std::vector<UTensor::Term> acc{{coef, {}, {}}};
        for (const UGen& g : word) {
            std::vector<UTensor::Term> next;
            for (const auto& t : acc) {
                auto push = [&](const Scalar& c, const GenWord& l, const GenWord& r) {
                    UTensor::Term nt = t;
                    nt.c *= c;
                    nt.left.insert(nt.left.end(), l.begin(), l.end());
                    nt.right.insert(nt.right.end(), r.begin(), r.end());
                    next.push_back(std::move(nt));
                };
                switch (g.kind) {
                    case GenKind::E:  // E ox 1 + K ox E
                        push(Scalar::one(), {g}, {});
                        push(Scalar::one(), {UGen{GenKind::K, g.i}}, {g});
                        break;
                    case GenKind::F:  // F ox K^{-1} + 1 ox F
                        push(Scalar::one(), {g}, {UGen{GenKind::Kinv, g.i}});
                        push(Scalar::one(), {}, {g});
                        break;
                    case GenKind::K:
                    case GenKind::Kinv:
                        push(Scalar::one(), {g}, {g});
                        break;
                }
            }
            acc = std::move(next);
        }
        for (auto& t : acc) out.terms.push_back(std::move(t));
    }
    return out;
}

namespace {

UWord antipode_gen(const UGen& g) {
    switch (g.kind) {
        case GenKind::E:  // -K^{-1} E
            return UWord::term(-Scalar::one(), {UGen{GenKind::Kinv, g.i}, UGen{GenKind::E, g.i}});
        case GenKind::F:  // -F K
            return UWord::term(-Scalar::one(), {UGen{GenKind::F, g.i}, UGen{GenKind::K, g.i}});
        case GenKind::K: return UWord::Kinv(g.i);
        case GenKind::Kinv: return UWord::K(g.i);
    }
    return UWord();
}

UWord star_gen(const UGen& g, int n) {
    switch (g.kind) {
        case GenKind::E:
            if (g.i == n)  // E_n^* = -K_n F_n
                return UWord::term(-Scalar::one(), {UGen{GenKind::K, n}, UGen{GenKind::F, n}});
            return UWord::term(Scalar::one(), {UGen{GenKind::K, g.i}, UGen{GenKind::F, g.i}});
        case GenKind::F:
            if (g.i == n)  // F_n^* = -E_n K_n^{-1}
                return UWord::term(-Scalar::one(), {UGen{GenKind::E, n}, UGen{GenKind::Kinv, n}});
            return UWord::term(Scalar::one(), {UGen{GenKind::E, g.i}, UGen{GenKind::Kinv, g.i}});
        case GenKind::K: return UWord::K(g.i);
        case GenKind::Kinv: return UWord::Kinv(g.i);
    }
    return UWord();
}

}  // namespace

UWord antipode(const UWord& w) {
    UWord out;
    for (const auto& [word, coef] : w.terms()) {
        UWord acc = UWord::term(coef, {});
        for (auto it = word.rbegin(); it != word.rend(); ++it) acc *= antipode_gen(*it);
        out += acc;
    }
    return out;
}

Scalar counit(const UWord& w) {
    Scalar out;
    for (const auto& [word, coef] : w.terms()) {
        bool killed = false;
        for (const UGen& g : word)
            if (g.kind == GenKind::E || g.kind == GenKind::F) {
                killed = true;
                break;
            }
        if (!killed) out += coef;
    }
    return out;
}

UWord star(const UWord& w, int n, bool negate_u, bool negate_v) {
    UWord out;
    for (const auto& [word, coef] : w.terms()) {
        UWord acc = UWord::term(coef.conjugated(negate_u, negate_v), {});
        for (auto it = word.rbegin(); it != word.rend(); ++it) acc *= star_gen(*it, n);
        out += acc;
    }
    return out;
}

UWord ad(const UWord& a, const UWord& b) {
    UTensor cop = coproduct(a);
    UWord out;
    for (const auto& t : cop.terms) {
        UWord piece = UWord::term(t.c, t.left) * b * antipode(UWord::term(Scalar::one(), t.right));
        out += piece;
    }
    return out;
}

UWord cartan_qbracket(int a, int b, int c_int, int c_alpha, int c_beta) {
    if (a > b + 1) throw std::invalid_argument("cartan_qbracket: bad range");
    GenWord ks, kinvs;
    for (int j = a; j <= b; ++j) ks.push_back(UGen{GenKind::K, j});
    for (int j = b; j >= a; --j) kinvs.push_back(UGen{GenKind::Kinv, j});
    Scalar qc = Scalar::monomial(GaussRat(1), 2 * c_int, c_alpha, c_beta);
    Scalar denom = Scalar::s_power(2) - Scalar::s_power(-2);
    UWord r;
    r += UWord::term(qc / denom, ks);
    r -= UWord::term(qc.inverse() / denom, kinvs);
    return r;
}

}  // namespace qmb
