#pragma once

// Chern-Schwartz-MacPherson classes of Schubert cells.
//
// c_SM(X_e) is the point class epsilon^{w_o}; the other cells are reached by
// the operators T_i = A_i - s_i, where A_i is the BGG operator and s_i the
// Weyl group action on cohomology. Which side the letters of a reduced word
// are applied on is calibrated against the positivity/support/normalization
// invariants and frozen per group.

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "schubert/cohomology.hpp"

namespace schubert {

enum class CsmConvention {
    Right, // c_SM(X_{u s_i}) = T_i c_SM(X_u): letters applied left to right
    Left,  // c_SM(X_{s_i u}) = T_i c_SM(X_u): letters applied right to left
};

std::string_view convention_name(CsmConvention c);

/// a_{u,w} with c_SM(X_u) = sum_w a_{u,w} epsilon^w, and the Segre-SM
/// coefficients of the same cells. Dense |W| x |W|, row u.
class CsmTable {
public:
    CsmTable() = default;
    CsmTable(std::size_t order, CsmConvention convention, std::vector<Int> csm, std::vector<Int> segre);

    std::size_t order() const { return order_; }
    CsmConvention convention() const { return convention_; }

    Int a(std::uint32_t u, std::uint32_t w) const { return csm_[static_cast<std::size_t>(u) * order_ + w]; }
    Int segre(std::uint32_t u, std::uint32_t w) const { return segre_[static_cast<std::size_t>(u) * order_ + w]; }
    std::span<const Int> csm_row(std::uint32_t u) const { return {csm_.data() + u * order_, order_}; }
    std::span<const Int> segre_row(std::uint32_t u) const { return {segre_.data() + u * order_, order_}; }

    const std::vector<Int>& csm_entries() const { return csm_; }
    const std::vector<Int>& segre_entries() const { return segre_; }

    friend bool operator==(const CsmTable&, const CsmTable&) = default;

private:
    std::size_t order_ = 0;
    CsmConvention convention_ = CsmConvention::Right;
    std::vector<Int> csm_;
    std::vector<Int> segre_;
};

class Csm {
public:
    /// Builds and calibrates the CSM table. Throws CalibrationFailure when no
    /// convention satisfies the invariants.
    explicit Csm(std::shared_ptr<const Cohomology> h);
    /// Adopts a previously computed table (e.g. from the cache); the table is
    /// re-checked against the invariants.
    Csm(std::shared_ptr<const Cohomology> h, CsmTable table);

    const Cohomology& cohomology() const { return *h_; }
    std::shared_ptr<const Cohomology> cohomology_handle() const { return h_; }
    const WeylGroup& group() const { return h_->group(); }
    const CsmTable& table() const { return table_; }
    CsmConvention convention() const { return table_.convention(); }

    /// A_i epsilon^theta = epsilon^{theta s_i} if l(theta s_i) < l(theta), else 0.
    CohomologyClass bgg_A(int i, const CohomologyClass& a) const;
    /// s_i epsilon^theta = epsilon^theta if theta s_i > theta, else
    /// epsilon^theta - c_1(L_{alpha_i}) epsilon^{theta s_i}.
    CohomologyClass weyl_action(int i, const CohomologyClass& a) const;
    /// T_i = A_i - s_i.
    CohomologyClass dl_operator(int i, const CohomologyClass& a) const;

    /// T applied to epsilon^{w_o} along the given reduced word (0-based
    /// letters) in the given convention.
    CohomologyClass csm_along_word(std::span<const int> word, CsmConvention convention) const;

    CohomologyClass csm_schubert_cell(const WeylElement& u) const;
    /// c_SM of the opposite cell X^v, equal to c_SM(X_{w_o v}).
    CohomologyClass csm_opposite_cell(const WeylElement& v) const;
    /// s_SM(X_u), read from the table.
    CohomologyClass segre_schubert_cell(const WeylElement& u) const;
    CohomologyClass segre_opposite_cell(const WeylElement& v) const;

    /// prod_{alpha > 0} (1 + c_1(L_alpha)).
    const CohomologyClass& tangent_chern() const { return cT_; }
    const CohomologyClass& tangent_chern_inverse() const { return cTinv_; }
    CohomologyClass segre_sm(const CohomologyClass& a) const;

    /// Description of the first cell invariant (positivity, support, unit
    /// coefficients, Segre sign twist) failed by row u, if any.
    std::optional<std::string> invariant_violation(const WeylElement& u) const;

private:
    void init_operators();
    CsmTable build_table(CsmConvention convention) const;
    std::optional<std::string> check_row(const CsmTable& t, std::uint32_t u) const;

    std::shared_ptr<const Cohomology> h_;
    std::vector<CohomologyClass> chevalley_alpha_; // c_1(L_{alpha_i}) epsilon^{theta}, index theta*rank+i
    CohomologyClass cT_;
    CohomologyClass cTinv_;
    CsmTable table_;
};

/// Phi: epsilon^w -> (-1)^{l(w)} epsilon^w.
CohomologyClass phi_involution(const CohomologyClass& a);

/// Product of (1 + c_1(L_alpha)) over positive roots.
CohomologyClass tangent_chern(const Cohomology& h);

/// Multiplicative inverse of a class with constant term 1, by the finite
/// geometric series in its nilpotent part.
CohomologyClass unipotent_inverse(const Cohomology& h, const CohomologyClass& c);

} // namespace schubert
