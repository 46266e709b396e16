#pragma once

#include "qmatball/action.hpp"
#include "qmatball/linalg.hpp"

namespace qmb {

/// Dominant signature k_1 >= ... >= k_n in Z^n.
using Signature = std::vector<int>;

bool signature_dominant(const Signature& k);
std::string signature_str(const Signature& k);
int signature_sum(const Signature& k);

/// Highest vector v^h = (z^{^1})^{k1-k2} ... (z^{^(n-1)})^{k_{n-1}-k_n} (z^{^n})^{k_n};
/// negative k_n goes into the det power.
LocalizedVector vh_vector(int n, const Signature& k);

/// Classical Weyl dimension of the simple sl_n module L(m_1,...,m_{n-1}).
long weyl_dim(int n, const std::vector<int>& m);

/// One U_q k-isotypic component, with a deterministic basis generated by
/// lowering from the highest vector.
struct IsotypicComponent {
    Signature signature;
    std::vector<LocalizedVector> basis;  // basis[0] is the highest vector
    std::vector<int> highest_weight;     // untwisted weight of basis[0]
};

/// Decompose the grade piece of V^{(k)} spanned by monomials of z-degree
/// n*detpow + grade times det^{-detpow}; exhaustive and non-overlapping.
std::vector<IsotypicComponent> decompose(int n, int grade, int detpow);

/// Decomposition of a filtered window of V with projection machinery.
/// Components live at det power `detpow` and cover the grades in
/// [grade_min, grade_max]; projections work at `workpow` (>= detpow) so
/// images under det-power-raising operators still split.
class WindowDecomposition {
  public:
    WindowDecomposition(int n, int grade_min, int grade_max, int detpow, int workpow = -1);

    int n() const { return n_; }
    int detpow() const { return detpow_; }
    int workpow() const { return workpow_; }
    int grade_min() const { return gmin_; }
    int grade_max() const { return gmax_; }

    const std::vector<IsotypicComponent>& components() const { return comps_; }
    const IsotypicComponent* find(const Signature& k) const;

    /// Component of x in V_target; x must lie in the decomposed window.
    LocalizedVector project(const LocalizedVector& x, const Signature& target) const;

    /// x written over the concatenated component bases:
    /// list of (component index, basis index, coefficient).
    struct Piece {
        std::size_t comp;
        std::size_t vec;
        Scalar c;
    };
    std::vector<Piece> split(const LocalizedVector& x) const;

  private:
    int n_, gmin_, gmax_, detpow_, workpow_;
    std::vector<IsotypicComponent> comps_;
    // frames keyed by grade (z-degree minus n * det power)
    struct GradeFrame {
        Coordinatizer coords;
        std::vector<CoordVector> basis;
        std::vector<std::pair<std::size_t, std::size_t>> owner;  // (comp, vec)
    };
    std::map<int, GradeFrame> frames_;
};

}  // namespace qmb
