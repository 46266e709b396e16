#pragma once

#include "qmatball/transitions.hpp"

namespace qmb {

struct CanonicalParams {
    ParameterPoint alpha, beta;
    long shift;  // pi_{a,b} ~ pi_{a-m, b+m} via the det-shift operator iterated m times
};

/// Shift (alpha, beta) along the det-power equivalence into the strip
/// alpha - beta in {0, 1}.
CanonicalParams canonicalize(const ParameterPoint& alpha, const ParameterPoint& beta);

struct EquivalenceClass {
    std::vector<std::pair<ParameterPoint, ParameterPoint>> points;  // one or two
    bool integral;
};

/// The equivalence class of (alpha, beta) in the strip: a singleton for
/// integral parameters, otherwise paired with (-n-beta, -n-alpha).
EquivalenceClass partner_class(int n, const ParameterPoint& alpha, const ParameterPoint& beta);

/// Closed-form intertwiner coefficient a_k(alpha,beta), the product of the
/// per-coordinate factors; symbolic in (u, v).
Scalar a_coeff(int n, const Signature& k);

/// Pole bookkeeping for a_k as a function of u at fixed d = alpha - beta:
/// factor roots are the integer points alpha = r.
struct PoleReport {
    std::map<long, int> orders;     // root alpha = r -> pole order (after cancellation)
    bool locations_integral{true};  // structural: every factor root lies in Z
    bool factors_simple{true};      // every atomic factor is linear in u^{+-2}
    bool matches_reduced{true};     // uncancelled factors reproduce the reduced denominator
    int max_order{0};
};

PoleReport a_coeff_poles(int n, const Signature& k, int d);

/// Substitute (alpha, beta) -> (-n-beta, -n-alpha): u -> s^{-2n} v^{-1}, v -> s^{-2n} u^{-1}.
Scalar partner_substitution(const Scalar& c, int n);
/// Substitute (alpha, beta) -> (alpha + da, beta + db).
Scalar shift_substitution(const Scalar& c, int da, int db);

struct IntertwinerReport {
    bool recurrences_ok{true};
    bool operator_ok{true};
    bool det_shift_ok{true};
    std::vector<std::string> failures;
};

/// Full verification: both coefficient recurrences, the diagonal operator
/// intertwining pi_{alpha,beta} with pi_{-n-beta,-n-alpha} on a window, and
/// the det-shift equivalence. Symbolic (generic parameters), tie d.
IntertwinerReport intertwine_verify(int n, int d, int bound);

}  // namespace qmb
