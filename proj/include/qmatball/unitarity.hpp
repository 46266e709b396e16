#pragma once

#include <memory>

#include "qmatball/equivalence.hpp"

namespace qmb {

enum class Series {
    PrincipalUnitary,
    Complementary,
    Strange,
    NotUnitarizable,
    IntegerCase,
};

struct SeriesLabel {
    Series series;
    int integer_case{0};  // 1..4 when series == IntegerCase
    std::string str() const;
};

/// Series classification per the unitarizability conditions; requires
/// alpha - beta in Z.
SeriesLabel classify_series(int n, const ParameterPoint& alpha, const ParameterPoint& beta);

/// The invariance recurrence ratio c_{k+e_j} / c_k =
/// conj(1 - q^{2(alpha + k_j + 1 + n - j)}) / (1 - q^{2(-beta + k_j + 1 - j)}),
/// evaluated exactly at the sample. (The displayed equation carries the
/// opposite sign; the positive form is forced by the principal series.)
GaussRat c_ratio(int n, const Signature& k, int j, const ParameterPoint& alpha, const ParameterPoint& beta,
                 const Rat& s0);

struct InvariantForm {
    bool feasible{false};
    std::string reason;
    std::map<Signature, GaussRat> c;  // positive reals when feasible
};

/// Reference invariant products: one Hermitian matrix per window component,
/// jointly normalized by full invariance at a principal-series point, so the
/// c ratios solved against them are comparable with the recurrence.
class FormSolver {
  public:
    FormSolver(int n, int bound, Rat s0);

    const WindowDecomposition& window() const { return dec_; }

    /// Solve for a positive invariant form at (alpha, beta) on the components
    /// selected by `pred` (all components when empty).
    InvariantForm solve(const ParameterPoint& alpha, const ParameterPoint& beta,
                        const SignaturePredicate* pred = nullptr) const;

    /// c_{k+e_j} / c_k from a solved form, when both signatures are present.
    static std::optional<GaussRat> solved_ratio(const InvariantForm& f, const Signature& k, int j);

  private:
    struct ComponentRuntime;
    struct Component {
        Signature sig;
        std::vector<std::vector<GaussRat>> form;  // Hermitian, reference-normalized
        std::shared_ptr<ComponentRuntime> rt;
    };

    int n_;
    int bound_;
    Rat s0_;
    WindowDecomposition dec_;
    std::vector<Component> comps_;

    // exact numeric matrices of pi(xi) restricted between two components
    std::vector<std::vector<GaussRat>> numeric_map(const UWord& w, std::size_t src, std::size_t tgt,
                                                   const ParameterPoint& a, const ParameterPoint& b) const;
    std::size_t comp_index(const Signature& k) const;
    friend struct FormSolverTester;
};

}  // namespace qmb
