#include "schubert/boxproduct.hpp"

#include <algorithm>
#include <exception>
#include <thread>

namespace schubert {

BoxProduct::BoxProduct(std::shared_ptr<const Richardson> richardson) : rich_(std::move(richardson))
{
    const auto& g = group();
    for (const auto& x : g.elements())
        wo_times_.push_back(g.multiply(g.longest(), x).index());
}

std::vector<Int> BoxProduct::triple_sum_row(const WeylElement& u, const WeylElement& v) const
{
    const auto& g = group();
    g.check_same_group(u);
    g.check_same_group(v);
    const auto& table = csm().table();
    const auto& st = cohomology().table();
    const std::size_t n = g.order();
    const auto A = table.csm_row(wo_times_[u.index()]);
    const auto B = table.csm_row(wo_times_[v.index()]);

    // P[x] = sum_{u1,v1} (-1)^{l(u)-l(u1)} a_{w_o u,u1} a_{w_o v,v1} c_{u1,v1}^x;
    // the triple integral of epsilon^{u1} epsilon^{v1} epsilon^{w1} is
    // c_{u1,v1}^{w_o w1}.
    std::vector<Int> P(n, 0);
    for (std::uint32_t u1 = 0; u1 < n; ++u1) {
        if (A[u1] == 0)
            continue;
        const Int su = checked_mul(sign_of_parity(u.length() - g.length(u1)), A[u1]);
        for (std::uint32_t v1 = 0; v1 < n; ++v1) {
            if (B[v1] == 0)
                continue;
            const Int f = checked_mul(su, B[v1]);
            for (const auto& [x, c] : st.entries(u1, v1))
                checked_fma(P[x], f, c);
        }
    }
    std::vector<Int> out(n, 0);
    for (std::uint32_t w = 0; w < n; ++w) {
        auto row = table.csm_row(w);
        Int sum = 0;
        for (std::uint32_t x = 0; x < n; ++x)
            if (P[x] != 0)
                checked_fma(sum, P[x], row[wo_times_[x]]);
        out[w] = checked_mul(sign_of_parity(g.length(w) - u.length() - v.length()), sum);
    }
    return out;
}

std::vector<Int> BoxProduct::pairing_row(const CohomologyClass& r) const
{
    const auto& g = group();
    const auto& table = csm().table();
    const std::size_t n = g.order();
    // integral of epsilon^x epsilon^y is delta_{y, w_o x}.
    std::vector<Int> out(n, 0);
    for (std::uint32_t w = 0; w < n; ++w) {
        auto seg = table.segre_row(w);
        Int sum = 0;
        for (const auto& [x, c] : r.terms())
            checked_fma(sum, c, seg[wo_times_[x]]);
        out[w] = sum;
    }
    return out;
}

ChiRow BoxProduct::richardson_part(const WeylElement& u, const WeylElement& v, const CohomologyClass& r) const
{
    const auto wou = group().element(wo_times_[u.index()]);
    auto d = rich_->richardson_csm_coeffs(wou, v, r);
    ChiRow row;
    row.richardson.assign(group().order(), 0);
    for (const auto& [x, c] : d.d)
        row.richardson[wo_times_[x]] = c;
    row.richardson_sign_ok = d.sign_ok;
    return row;
}

ChiRow BoxProduct::chi_row_richardson_only(const WeylElement& u, const WeylElement& v) const
{
    group().check_same_group(u);
    auto r = rich_->csm_richardson(group().element(wo_times_[u.index()]), v);
    return richardson_part(u, v, r);
}

ChiRow BoxProduct::chi_row(const WeylElement& u, const WeylElement& v) const
{
    group().check_same_group(u);
    auto r = rich_->csm_richardson(group().element(wo_times_[u.index()]), v);
    ChiRow row = richardson_part(u, v, r);
    row.pairing = pairing_row(r);
    row.triple_sum = triple_sum_row(u, v);
    return row;
}

Int BoxProduct::chi_via_triple_sum(const WeylElement& u, const WeylElement& v, const WeylElement& w) const
{
    group().check_same_group(w);
    return triple_sum_row(u, v)[w.index()];
}

Int BoxProduct::chi_via_pairing(const WeylElement& u, const WeylElement& v, const WeylElement& w) const
{
    const auto& g = group();
    g.check_same_group(w);
    auto r = rich_->csm_richardson(g.multiply(g.longest(), u), v);
    return cohomology().integrate(cohomology().cup(r, csm().segre_schubert_cell(w)));
}

Int BoxProduct::chi_via_richardson(const WeylElement& u, const WeylElement& v, const WeylElement& w) const
{
    group().check_same_group(w);
    return chi_row_richardson_only(u, v).richardson[w.index()];
}

void check_paths_agree(const WeylGroup& g, std::uint32_t u, std::uint32_t v, const ChiRow& row)
{
    for (std::uint32_t w = 0; w < g.order(); ++w) {
        const Int a = row.triple_sum[w], b = row.pairing[w], c = row.richardson[w];
        if (a != b || b != c)
            throw PathDisagreement("chi paths disagree in " + g.name() + " at (u,v,w) = (#" + std::to_string(u) +
                                   ", #" + std::to_string(v) + ", #" + std::to_string(w) +
                                   "): triple-sum " + std::to_string(a) + ", pairing " + std::to_string(b) +
                                   ", richardson " + std::to_string(c));
    }
}

Int BoxProduct::chi(const WeylElement& u, const WeylElement& v, const WeylElement& w) const
{
    group().check_same_group(w);
    auto row = chi_row(u, v);
    check_paths_agree(group(), u.index(), v.index(), row);
    return row.richardson[w.index()];
}

CohomologyClass BoxProduct::box_product(const WeylElement& u, const WeylElement& v) const
{
    const auto& g = group();
    auto row = chi_row(u, v);
    check_paths_agree(g, u.index(), v.index(), row);
    CohomologyClass out(g);
    for (std::uint32_t w = 0; w < g.order(); ++w)
        if (g.length(w) >= u.length() + v.length())
            out.add_term(w, row.richardson[w]);
    return out;
}

CohomologyClass BoxProduct::box_product(const CohomologyClass& a, const CohomologyClass& b) const
{
    const auto& g = group();
    CohomologyClass out(g);
    for (const auto& [x, cx] : a.terms())
        for (const auto& [y, cy] : b.terms())
            out += box_product(g.element(x), g.element(y)) * checked_mul(cx, cy);
    return out;
}

// ---------------------------------------------------------------------------
// BoxTable

BoxTable::BoxTable(std::size_t order)
    : n_(order), chi_(order * order * order, 0), triple_(chi_.size(), 0), pairing_(chi_.size(), 0),
      checked_(order * order, 0), sign_ok_(order * order, 1)
{
}

BoxTable BoxTable::from_parts(std::size_t order, std::vector<Int> chi, std::vector<Int> triple,
                              std::vector<Int> pairing, std::vector<std::uint8_t> checked,
                              std::vector<std::uint8_t> sign_ok)
{
    const std::size_t n3 = order * order * order, n2 = order * order;
    if (chi.size() != n3 || triple.size() != n3 || pairing.size() != n3 || checked.size() != n2 ||
        sign_ok.size() != n2)
        throw InternalInvariantError("malformed box table");
    BoxTable t;
    t.n_ = order;
    t.chi_ = std::move(chi);
    t.triple_ = std::move(triple);
    t.pairing_ = std::move(pairing);
    t.checked_ = std::move(checked);
    t.sign_ok_ = std::move(sign_ok);
    return t;
}

std::size_t BoxTable::cross_checked_pairs() const
{
    std::size_t k = 0;
    for (auto f : checked_)
        k += f != 0;
    return k;
}

void BoxTable::set_row(std::uint32_t u, std::uint32_t v, const ChiRow& row, bool cross_checked)
{
    const std::size_t base = at(u, v, 0);
    for (std::size_t w = 0; w < n_; ++w) {
        chi_[base + w] = row.richardson[w];
        if (cross_checked) {
            triple_[base + w] = row.triple_sum[w];
            pairing_[base + w] = row.pairing[w];
        }
    }
    checked_[u * n_ + v] = cross_checked ? 1 : 0;
    sign_ok_[u * n_ + v] = row.richardson_sign_ok ? 1 : 0;
}

bool CrossCheckPolicy::selects(std::size_t order, std::uint32_t u, std::uint32_t v) const
{
    if (order <= full_limit)
        return true;
    const std::size_t pairs = order * order;
    const std::size_t stride = std::max<std::size_t>(1, pairs / std::max<std::size_t>(1, sample_pairs));
    return (static_cast<std::size_t>(u) * order + v) % stride == 0;
}

BoxTable build_box_table(const BoxProduct& box, const CrossCheckPolicy& policy, int jobs)
{
    const auto& g = box.group();
    const std::size_t n = g.order();
    BoxTable table(n);
    std::vector<std::exception_ptr> errors(n);
    auto work = [&](std::size_t first, std::size_t step) {
        for (std::size_t u = first; u < n; u += step) {
            try {
                for (std::uint32_t v = 0; v < n; ++v) {
                    const auto ue = g.element(u), ve = g.element(v);
                    const bool full = policy.selects(n, static_cast<std::uint32_t>(u), v);
                    ChiRow row = full ? box.chi_row(ue, ve) : box.chi_row_richardson_only(ue, ve);
                    if (full)
                        check_paths_agree(g, static_cast<std::uint32_t>(u), v, row);
                    table.set_row(static_cast<std::uint32_t>(u), v, row, full);
                }
            } catch (...) {
                errors[u] = std::current_exception();
            }
        }
    };
    const std::size_t threads = std::max(1, std::min<int>(jobs, static_cast<int>(n)));
    if (threads == 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t)
            pool.emplace_back(work, t, threads);
        for (auto& th : pool)
            th.join();
    }
    // Report the failure at the smallest u, independent of scheduling.
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return table;
}

// ---------------------------------------------------------------------------
// Sign, grading and associativity sweeps

BoxFindings verify_box_conjectures(const BoxProduct& box, const BoxTable& table, std::size_t associativity_limit)
{
    const auto& g = box.group();
    const auto& st = box.cohomology().table();
    const std::uint32_t n = static_cast<std::uint32_t>(g.order());
    BoxFindings f;
    for (std::uint32_t u = 0; u < n; ++u) {
        for (std::uint32_t v = 0; v < n; ++v) {
            const int threshold = g.length(u) + g.length(v);
            bool d_ok = true;
            for (std::uint32_t w = 0; w < n; ++w) {
                ++f.triples_checked;
                const Int chi = table.chi(u, v, w);
                if (sign_of_parity(g.length(w) - threshold) * chi < 0) {
                    d_ok = false;
                    f.conj_d_violations.push_back({u, v, w, chi});
                }
                if (g.length(w) < threshold && chi != 0)
                    f.below_threshold.push_back({u, v, w, chi});
                if (g.length(w) == threshold && chi != st.constant(u, v, w))
                    f.gr_mismatches.push_back({u, v, w, chi});
            }
            if (d_ok != table.richardson_sign_ok(u, v))
                f.sign_equivalence_mismatches.emplace_back(u, v);
        }
    }

    if (n > associativity_limit)
        return f;
    auto assoc = check_associativity(g, table);
    f.associativity_tested = true;
    f.associativity_triples = assoc.triples;
    f.associativity_failures = assoc.failures;
    f.associativity_witnesses = std::move(assoc.witnesses);
    return f;
}

AssociativityResult check_associativity(const WeylGroup& g, const BoxTable& table)
{
    const std::uint32_t n = static_cast<std::uint32_t>(g.order());
    AssociativityResult r;
    // box(a, b)[z] restricted to l(z) >= l(a) + l(b).
    auto coeff = [&](std::uint32_t a, std::uint32_t b, std::uint32_t z) -> Int {
        return g.length(z) >= g.length(a) + g.length(b) ? table.chi(a, b, z) : 0;
    };
    std::vector<Int> left(n), right(n);
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
            for (std::uint32_t c = 0; c < n; ++c) {
                ++r.triples;
                std::fill(left.begin(), left.end(), 0);
                std::fill(right.begin(), right.end(), 0);
                for (std::uint32_t w = 0; w < n; ++w) {
                    const Int x = coeff(a, b, w), y = coeff(b, c, w);
                    for (std::uint32_t z = 0; z < n; ++z) {
                        if (x != 0)
                            checked_fma(left[z], x, coeff(w, c, z));
                        if (y != 0)
                            checked_fma(right[z], y, coeff(a, w, z));
                    }
                }
                if (left != right) {
                    ++r.failures;
                    std::uint32_t z = 0;
                    while (left[z] == right[z])
                        ++z;
                    if (r.witnesses.size() < 20)
                        r.witnesses.push_back({a, b, c, static_cast<Int>(z)});
                }
            }
    return r;
}

} // namespace schubert
