#pragma once

#include <string>
#include <vector>

#include "qmatball/scalar.hpp"

namespace qmb {

enum class GenKind : std::uint8_t { E, F, K, Kinv };

/// Generator of U_q sl_{2n}; index i in 1..2n-1.
struct UGen {
    GenKind kind;
    int i;

    friend bool operator==(const UGen& a, const UGen& b) { return a.kind == b.kind && a.i == b.i; }
    friend bool operator<(const UGen& a, const UGen& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.i < b.i;
    }
    std::string str() const;
};

using GenWord = std::vector<UGen>;

/// Formal sum of words in the generators with Scalar coefficients.
/// Purely formal: the U_q sl_{2n} relations are never applied to words;
/// identities are checked through representations.
class UWord {
  public:
    UWord() = default;

    static UWord identity() { return term(Scalar::one(), {}); }
    static UWord gen(GenKind k, int i) { return term(Scalar::one(), {UGen{k, i}}); }
    static UWord E(int i) { return gen(GenKind::E, i); }
    static UWord F(int i) { return gen(GenKind::F, i); }
    static UWord K(int i) { return gen(GenKind::K, i); }
    static UWord Kinv(int i) { return gen(GenKind::Kinv, i); }
    static UWord term(Scalar c, GenWord w);

    const std::map<GenWord, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(GenWord w, Scalar c);

    UWord operator-() const;
    UWord& operator+=(const UWord& o);
    UWord& operator-=(const UWord& o);
    friend UWord operator+(UWord a, const UWord& b) { return a += b; }
    friend UWord operator-(UWord a, const UWord& b) { return a -= b; }
    friend UWord operator*(const UWord& a, const UWord& b);  // concatenation
    UWord& operator*=(const UWord& o) { return *this = *this * o; }

    UWord scaled(const Scalar& c) const;

    friend bool operator==(const UWord& a, const UWord& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const UWord& a, const UWord& b) { return !(a == b); }

    std::string str() const;

  private:
    std::map<GenWord, Scalar> terms_;
};

/// Formal sum of tensors of words (the coproduct's codomain).
struct UTensor {
    struct Term {
        Scalar c;
        GenWord left, right;
    };
    std::vector<Term> terms;
};

UTensor coproduct(const UWord& w);
UWord antipode(const UWord& w);
Scalar counit(const UWord& w);

/// The U_q su_{n,n} involution, extended anti-multiplicatively with
/// conjugated coefficients. n fixes which simple root is the noncompact one.
UWord star(const UWord& w, int n, bool negate_u = false, bool negate_v = false);

/// Adjoint action ad_a(b) = sum a' b S(a'').
UWord ad(const UWord& a, const UWord& b);

/// The K-word (q^c K_a...K_b - q^{-c} K_b^{-1}...K_a^{-1}) / (q - q^{-1}),
/// equal to [H_a+...+H_b+c]_q on every weight vector. Empty range allowed
/// (a = b+1), giving [c]_q times the identity. The shift c is
/// c_int + c_alpha*alpha + c_beta*beta.
UWord cartan_qbracket(int a, int b, int c_int, int c_alpha = 0, int c_beta = 0);

}  // namespace qmb
