#include "schubert/richardson.hpp"

#include <algorithm>

namespace schubert {

Int coefficient_of(const SparseCoeffs& s, std::uint32_t index)
{
    auto it = std::lower_bound(s.begin(), s.end(), index,
                               [](const auto& t, std::uint32_t i) { return t.first < i; });
    return (it != s.end() && it->first == index) ? it->second : 0;
}

Richardson::Richardson(std::shared_ptr<const Csm> csm) : csm_(std::move(csm)) {}

CohomologyClass Richardson::csm_richardson(const WeylElement& u, const WeylElement& v) const
{
    const auto& h = cohomology();
    auto main = h.cup(csm_->segre_schubert_cell(u), csm_->csm_opposite_cell(v));
    auto mirror = h.cup(csm_->csm_schubert_cell(u), csm_->segre_opposite_cell(v));
    if (main != mirror)
        throw MirrorMismatch("s_SM(X_u) c_SM(X^v) != c_SM(X_u) s_SM(X^v) in " + group().name());
    return main;
}

CohomologyClass Richardson::segre_richardson(const WeylElement& u, const WeylElement& v) const
{
    return cohomology().cup(csm_->segre_schubert_cell(u), csm_->segre_opposite_cell(v));
}

RichardsonCoefficients Richardson::richardson_coeffs(const WeylElement& u, const WeylElement& v) const
{
    return richardson_coeffs(u, v, csm_richardson(u, v));
}

RichardsonCoefficients Richardson::richardson_coeffs(const WeylElement& u, const WeylElement& v,
                                                     const CohomologyClass& richardson_class) const
{
    const auto& g = group();
    RichardsonCoefficients out{u, v, {}, true, true};
    if (!g.bruhat_leq(v, u) && !richardson_class.is_zero())
        throw InternalInvariantError("empty Richardson cell with nonzero CSM class in " + g.name());
    const auto wo = g.longest();
    for (const auto& [x, c] : richardson_class.terms()) {
        // epsilon^x = [X_w] with w = w_o x.
        const auto w = g.multiply(wo, g.element(x)).index();
        out.c.emplace_back(w, c);
        if ((g.length(w) + u.length() + v.length()) % 2 != 0)
            out.parity_ok = false;
        if (c < 0)
            out.nonneg_ok = false;
    }
    std::sort(out.c.begin(), out.c.end());
    if (!out.parity_ok)
        throw ParityViolation("c^{u,v}_w nonzero with l(w)+l(u)+l(v) odd in " + g.name());
    return out;
}

CsmBasisCoefficients Richardson::expand_in_csm_basis(const CohomologyClass& a) const
{
    const auto& g = group();
    const std::size_t n = g.order();
    const auto& table = csm_->table();
    std::vector<Int> rem = a.dense();
    CsmBasisCoefficients out;
    // Elements are sorted by length, so scanning epsilon^x by increasing x
    // visits [X_w] (w = w_o x) by decreasing length.
    for (std::uint32_t x = 0; x < n; ++x) {
        if (rem[x] == 0)
            continue;
        const Int k = rem[x];
        const auto w = g.multiply(g.longest(), g.element(x)).index();
        if (table.a(w, x) != 1)
            throw SingularSystem("CSM basis is not unitriangular in " + g.name());
        auto row = table.csm_row(w);
        for (std::uint32_t y = 0; y < n; ++y)
            if (row[y] != 0)
                rem[y] = checked_sub(rem[y], checked_mul(k, row[y]));
        if (rem[x] != 0)
            throw SingularSystem("CSM basis peeling did not clear the leading term");
        out.d.emplace_back(w, k);
    }
    std::sort(out.d.begin(), out.d.end());

    // Back-substitution residual.
    std::vector<Int> back(n, 0);
    for (const auto& [w, k] : out.d) {
        auto row = table.csm_row(w);
        for (std::uint32_t y = 0; y < n; ++y)
            checked_fma(back[y], k, row[y]);
    }
    if (back != a.dense())
        throw SingularSystem("nonzero residual after CSM basis expansion");
    return out;
}

CsmBasisCoefficients Richardson::richardson_csm_coeffs(const WeylElement& u, const WeylElement& v) const
{
    return richardson_csm_coeffs(u, v, csm_richardson(u, v));
}

CsmBasisCoefficients Richardson::richardson_csm_coeffs(const WeylElement& u, const WeylElement& v,
                                                       const CohomologyClass& richardson_class) const
{
    const auto& g = group();
    auto out = expand_in_csm_basis(richardson_class);
    for (const auto& [w, d] : out.d)
        if (sign_of_parity(g.length(w) - u.length() - v.length()) * d < 0)
            out.sign_ok = false;
    return out;
}

SparseCoeffs Richardson::verify_lemma_e(const WeylElement& u, const WeylElement& v) const
{
    const auto& g = group();
    auto e = phi_involution(segre_richardson(u, v));
    const Int sign = sign_of_parity(g.multiply(g.longest(), u).length() + v.length());
    for (const auto& [w, c] : e.terms())
        if (sign * c < 0)
            throw LemmaViolation("Phi(s_SM) sign condition fails in " + g.name());
    return e.terms();
}

} // namespace schubert
