#pragma once

#include <optional>

#include "qmatball/qmatrix.hpp"
#include "qmatball/uqsl.hpp"

namespace qmb {

struct NotWeightVector : std::domain_error {
    NotWeightVector() : std::domain_error("weight_of: not a simultaneous K-eigenvector") {}
};

/// Which representation acts: the module-algebra action on V, or the
/// principal-series family pi_{alpha,beta} on top of it.
struct RepContext {
    int n;
    bool twisted{false};
    TwistMode twist{SymbolicTwist{0}};

    static RepContext untwisted(int n) { return RepContext{n, false, SymbolicTwist{0}}; }
    static RepContext symbolic(int n, int d) { return RepContext{n, true, SymbolicTwist{d}}; }
    static RepContext concrete(int n, ParameterPoint a, ParameterPoint b) {
        return RepContext{n, true, ConcreteTwist{std::move(a), std::move(b)}};
    }

    bool is_symbolic() const { return twisted && std::holds_alternative<SymbolicTwist>(twist); }
    int d() const;  // alpha - beta in symbolic mode

    /// Apply the symbolic tie v = u s^{-2d} where it applies.
    Scalar settle(Scalar c) const;
};

/// Action of one generator. Untwisted mode is the U_q sl_{2n}-module-algebra
/// action on V; twisted mode is pi_{alpha,beta} with coefficients Laurent in
/// u = q^alpha, v = q^beta.
LocalizedVector act_gen(const RepContext& ctx, const UGen& g, const LocalizedVector& x);

/// Left-to-right composition: the word g1 g2 ... gm acts as g1 o g2 o ... o gm,
/// extended linearly over a UWord's terms.
LocalizedVector act_word(const RepContext& ctx, const UWord& w, const LocalizedVector& x);

/// Weight of a simultaneous K-eigenvector, as integer exponents: K_i x = q^{lambda_i} x.
/// In symbolic twist mode lambda_n includes the alpha-beta offset via d.
std::vector<int> weight_of(const RepContext& ctx, const LocalizedVector& x);

/// Weight of a basis monomial times det^{-d} under the untwisted action.
std::vector<int> monom_weight(int n, const Monom& m, int dpow);

/// j with K_0 x = q^{2j} x (untwisted); errors unless x is homogeneous.
int k0_eigenvalue(const LocalizedVector& x);

/// Independent replay of the twist derivation: acts on x * det^alpha t^{alpha+beta}
/// through the coproduct using the displayed det^lambda / t^lambda rules and
/// strips the twist factor. Used as the oracle for the closed forms in act_gen.
LocalizedVector twisted_oracle(const RepContext& ctx, const UGen& g, const LocalizedVector& x);

}  // namespace qmb
