#pragma once

// CSM and Segre-SM classes of Richardson cells X_u^v = X_u cap X^v, and their
// coefficients in the [X_w] basis and in the CSM basis.

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "schubert/csm.hpp"

namespace schubert {

/// (element index, coefficient), sorted by index, no zeros.
using SparseCoeffs = std::vector<std::pair<std::uint32_t, Int>>;

Int coefficient_of(const SparseCoeffs& s, std::uint32_t index);

struct RichardsonCoefficients {
    WeylElement u, v;
    SparseCoeffs c; // c^{u,v}_w, indexed by w
    bool parity_ok = true;
    bool nonneg_ok = true;
};

struct CsmBasisCoefficients {
    SparseCoeffs d; // indexed by w
    bool sign_ok = true;
};

class Richardson {
public:
    explicit Richardson(std::shared_ptr<const Csm> csm);

    const Csm& csm() const { return *csm_; }
    const Cohomology& cohomology() const { return csm_->cohomology(); }
    const WeylGroup& group() const { return csm_->group(); }

    /// s_SM(X_u) . c_SM(X^v), checked against c_SM(X_u) . s_SM(X^v).
    /// Throws MirrorMismatch when the two differ.
    CohomologyClass csm_richardson(const WeylElement& u, const WeylElement& v) const;
    /// s_SM(X_u) . s_SM(X^v).
    CohomologyClass segre_richardson(const WeylElement& u, const WeylElement& v) const;

    /// c^{u,v}_w = coefficient of [X_w] = epsilon^{w_o w}. Throws
    /// ParityViolation on a nonzero coefficient with l(w)+l(u)+l(v) odd, and
    /// InternalInvariantError when an empty cell (v not <= u) has a nonzero class.
    RichardsonCoefficients richardson_coeffs(const WeylElement& u, const WeylElement& v) const;
    /// Same, from an already computed csm_richardson(u, v).
    RichardsonCoefficients richardson_coeffs(const WeylElement& u, const WeylElement& v,
                                             const CohomologyClass& richardson_class) const;

    /// d_w with a = sum_w d_w c_SM(X_w), by peeling the longest [X_w] term.
    /// sign_ok is left true. Throws SingularSystem if the back-substitution
    /// residual is not zero.
    CsmBasisCoefficients expand_in_csm_basis(const CohomologyClass& a) const;
    /// d^{u,v}_w with sign_ok = [(-1)^{l(w)-l(u)-l(v)} d^{u,v}_w >= 0 for all w].
    CsmBasisCoefficients richardson_csm_coeffs(const WeylElement& u, const WeylElement& v) const;
    CsmBasisCoefficients richardson_csm_coeffs(const WeylElement& u, const WeylElement& v,
                                               const CohomologyClass& richardson_class) const;

    /// e^{u,v}_w with Phi(s_SM(X_u^v)) = sum_w e^{u,v}_w epsilon^w. Throws
    /// LemmaViolation unless (-1)^{l(w_o u)+l(v)} e^{u,v}_w >= 0 for all w.
    SparseCoeffs verify_lemma_e(const WeylElement& u, const WeylElement& v) const;

private:
    std::shared_ptr<const Csm> csm_;
};

} // namespace schubert
