#include "schubert/csm.hpp"

namespace schubert {

std::string_view convention_name(CsmConvention c)
{
    return c == CsmConvention::Right ? "right" : "left";
}

CsmTable::CsmTable(std::size_t order, CsmConvention convention, std::vector<Int> csm, std::vector<Int> segre)
    : order_(order), convention_(convention), csm_(std::move(csm)), segre_(std::move(segre))
{
    if (csm_.size() != order_ * order_ || segre_.size() != order_ * order_)
        throw InternalInvariantError("malformed CSM table");
}

CohomologyClass phi_involution(const CohomologyClass& a)
{
    CohomologyClass out(a.group());
    for (const auto& [w, c] : a.terms())
        out.add_term(w, a.group().length(w) % 2 ? -c : c);
    return out;
}

CohomologyClass tangent_chern(const Cohomology& h)
{
    const auto& rs = h.group().roots();
    CohomologyClass c = h.unit();
    for (const auto& alpha : rs.positive_roots())
        c = h.cup(c, h.unit() + h.first_chern(rs.to_weight(alpha)));
    return c;
}

CohomologyClass unipotent_inverse(const Cohomology& h, const CohomologyClass& c)
{
    const auto e = h.group().identity().index();
    if (c.coefficient(e) != 1)
        throw InternalInvariantError("unipotent_inverse: constant term is not 1");
    // (1 + N)^{-1} = sum_k (-N)^k; N^k vanishes past the top degree.
    CohomologyClass minus_n = h.unit() - c;
    CohomologyClass power = h.unit();
    CohomologyClass sum = h.unit();
    for (int k = 1; k <= h.group().max_length(); ++k) {
        power = h.cup(power, minus_n);
        if (power.is_zero())
            break;
        sum += power;
    }
    return sum;
}

Csm::Csm(std::shared_ptr<const Cohomology> h) : h_(std::move(h)), cT_(h_->group()), cTinv_(h_->group())
{
    init_operators();
    std::string why;
    for (auto convention : {CsmConvention::Right, CsmConvention::Left}) {
        CsmTable t = build_table(convention);
        std::optional<std::string> bad;
        for (std::uint32_t u = 0; u < t.order() && !bad; ++u)
            bad = check_row(t, u);
        if (!bad) {
            table_ = std::move(t);
            return;
        }
        why += std::string(convention_name(convention)) + ": " + *bad + "; ";
    }
    throw CalibrationFailure("no CSM operator convention satisfies the invariants in " + group().name() + " (" + why +
                             ")");
}

Csm::Csm(std::shared_ptr<const Cohomology> h, CsmTable table)
    : h_(std::move(h)), cT_(h_->group()), cTinv_(h_->group()), table_(std::move(table))
{
    init_operators();
    if (table_.order() != group().order())
        throw InternalInvariantError("CSM table does not match group order");
    for (std::uint32_t u = 0; u < table_.order(); ++u)
        if (auto bad = check_row(table_, u))
            throw CalibrationFailure("stored CSM table fails invariants: " + *bad);
}

void Csm::init_operators()
{
    const auto& g = group();
    const auto& rs = g.roots();
    chevalley_alpha_.clear();
    chevalley_alpha_.reserve(g.order() * g.rank());
    for (const auto& theta : g.elements())
        for (int i = 0; i < g.rank(); ++i)
            chevalley_alpha_.push_back(h_->chevalley_multiply(rs.to_weight(simple_root(g.rank(), i)), theta));
    cT_ = schubert::tangent_chern(*h_);
    cTinv_ = unipotent_inverse(*h_, cT_);
}

CohomologyClass Csm::bgg_A(int i, const CohomologyClass& a) const
{
    const auto& g = group();
    CohomologyClass out(g);
    for (const auto& [theta, c] : a.terms()) {
        auto t = g.element(theta);
        if (g.has_right_descent(t, i))
            out.add_term(g.right_multiply_simple(t, i).index(), c);
    }
    return out;
}

CohomologyClass Csm::weyl_action(int i, const CohomologyClass& a) const
{
    const auto& g = group();
    CohomologyClass out(g);
    for (const auto& [theta, c] : a.terms()) {
        out.add_term(theta, c);
        auto t = g.element(theta);
        if (g.has_right_descent(t, i)) {
            auto down = g.right_multiply_simple(t, i).index();
            for (const auto& [w, d] : chevalley_alpha_[static_cast<std::size_t>(down) * g.rank() + i].terms())
                out.add_term(w, checked_mul(-c, d));
        }
    }
    return out;
}

CohomologyClass Csm::dl_operator(int i, const CohomologyClass& a) const
{
    return bgg_A(i, a) - weyl_action(i, a);
}

CohomologyClass Csm::csm_along_word(std::span<const int> word, CsmConvention convention) const
{
    CohomologyClass c = h_->basis(group().longest());
    if (convention == CsmConvention::Right) {
        for (int i : word)
            c = dl_operator(i, c);
    } else {
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            c = dl_operator(*it, c);
    }
    return c;
}

CsmTable Csm::build_table(CsmConvention convention) const
{
    const auto& g = group();
    const std::size_t n = g.order();
    std::vector<CohomologyClass> rows;
    rows.reserve(n);
    // Elements are sorted by length, so the shorter element is always ready.
    for (const auto& u : g.elements()) {
        if (u.is_identity()) {
            rows.push_back(h_->basis(g.longest()));
            continue;
        }
        auto word = u.word();
        if (convention == CsmConvention::Right) {
            int i = word.back();
            rows.push_back(dl_operator(i, rows[g.right_multiply_simple(u, i).index()]));
        } else {
            int i = word.front();
            rows.push_back(dl_operator(i, rows[g.left_multiply_simple(i, u).index()]));
        }
    }
    std::vector<Int> csm(n * n, 0), segre(n * n, 0);
    for (std::size_t u = 0; u < n; ++u) {
        for (const auto& [w, c] : rows[u].terms())
            csm[u * n + w] = c;
        const auto seg = segre_sm(rows[u]);
        for (const auto& [w, c] : seg.terms())
            segre[u * n + w] = c;
    }
    return CsmTable(n, convention, std::move(csm), std::move(segre));
}

std::optional<std::string> Csm::check_row(const CsmTable& t, std::uint32_t u) const
{
    const auto& g = group();
    auto ue = g.element(u);
    auto wou = g.multiply(g.longest(), ue);
    const std::string where = " for u = #" + std::to_string(u);
    if (t.a(u, wou.index()) != 1)
        return "a_{u, w_o u} != 1" + where;
    if (t.a(u, g.longest().index()) != 1)
        return "a_{u, w_o} != 1" + where;
    for (std::uint32_t w = 0; w < t.order(); ++w) {
        const Int a = t.a(u, w);
        if (a < 0)
            return "negative a_{u,w}" + where;
        if (a != 0 && !g.bruhat_leq(wou, g.element(w)))
            return "a_{u,w} nonzero outside w >= w_o u" + where;
        const Int twisted = sign_of_parity(g.length(w) - wou.length()) * a;
        if (t.segre(u, w) != twisted)
            return "Segre sign twist fails" + where;
    }
    return std::nullopt;
}

std::optional<std::string> Csm::invariant_violation(const WeylElement& u) const
{
    group().check_same_group(u);
    return check_row(table_, u.index());
}

namespace {

CohomologyClass row_class(const WeylGroup& g, std::span<const Int> row)
{
    return CohomologyClass::from_dense(g, row);
}

} // namespace

CohomologyClass Csm::csm_schubert_cell(const WeylElement& u) const
{
    group().check_same_group(u);
    return row_class(group(), table_.csm_row(u.index()));
}

CohomologyClass Csm::csm_opposite_cell(const WeylElement& v) const
{
    group().check_same_group(v);
    return csm_schubert_cell(group().multiply(group().longest(), v));
}

CohomologyClass Csm::segre_schubert_cell(const WeylElement& u) const
{
    group().check_same_group(u);
    return row_class(group(), table_.segre_row(u.index()));
}

CohomologyClass Csm::segre_opposite_cell(const WeylElement& v) const
{
    group().check_same_group(v);
    return segre_schubert_cell(group().multiply(group().longest(), v));
}

CohomologyClass Csm::segre_sm(const CohomologyClass& a) const { return h_->cup(a, cTinv_); }

} // namespace schubert
