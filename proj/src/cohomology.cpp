#include "schubert/cohomology.hpp"

#include <algorithm>

namespace schubert {

// ---------------------------------------------------------------------------
// CohomologyClass

CohomologyClass CohomologyClass::basis(const WeylElement& w)
{
    CohomologyClass c(w.group());
    c.terms_.emplace_back(w.index(), 1);
    return c;
}

CohomologyClass CohomologyClass::from_dense(const WeylGroup& group, std::span<const Int> coeffs)
{
    CohomologyClass c(group);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0)
            c.terms_.emplace_back(static_cast<std::uint32_t>(i), coeffs[i]);
    return c;
}

Int CohomologyClass::coefficient(const WeylElement& w) const
{
    if (w.group_ptr() != group_)
        throw GroupMismatch("element and class belong to different groups");
    return coefficient(w.index());
}

Int CohomologyClass::coefficient(std::uint32_t index) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), index,
                               [](const Term& t, std::uint32_t i) { return t.first < i; });
    return (it != terms_.end() && it->first == index) ? it->second : 0;
}

void CohomologyClass::add_term(std::uint32_t index, Int coeff)
{
    if (coeff == 0)
        return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), index,
                               [](const Term& t, std::uint32_t i) { return t.first < i; });
    if (it != terms_.end() && it->first == index) {
        it->second = checked_add(it->second, coeff);
        if (it->second == 0)
            terms_.erase(it);
    } else {
        terms_.insert(it, {index, coeff});
    }
}

std::vector<Int> CohomologyClass::dense() const
{
    std::vector<Int> d(group_->order(), 0);
    for (const auto& [i, c] : terms_)
        d[i] = c;
    return d;
}

CohomologyClass CohomologyClass::graded_component(int k) const
{
    CohomologyClass out(*group_);
    for (const auto& t : terms_)
        if (group_->length(t.first) == k)
            out.terms_.push_back(t);
    return out;
}

int CohomologyClass::max_length() const
{
    // Indices are sorted by length.
    return terms_.empty() ? -1 : group_->length(terms_.back().first);
}

int CohomologyClass::min_length() const { return terms_.empty() ? -1 : group_->length(terms_.front().first); }

void CohomologyClass::check_group(const CohomologyClass& other) const
{
    if (other.group_ != group_)
        throw GroupMismatch("cohomology classes belong to different groups");
}

CohomologyClass& CohomologyClass::operator+=(const CohomologyClass& other)
{
    check_group(other);
    std::vector<Term> out;
    out.reserve(terms_.size() + other.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < other.terms_.size()) {
        if (j == other.terms_.size() || (i < terms_.size() && terms_[i].first < other.terms_[j].first)) {
            out.push_back(terms_[i++]);
        } else if (i == terms_.size() || other.terms_[j].first < terms_[i].first) {
            out.push_back(other.terms_[j++]);
        } else {
            Int c = checked_add(terms_[i].second, other.terms_[j].second);
            if (c != 0)
                out.emplace_back(terms_[i].first, c);
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
    return *this;
}

CohomologyClass& CohomologyClass::operator-=(const CohomologyClass& other) { return *this += -other; }

CohomologyClass& CohomologyClass::operator*=(Int scalar)
{
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_)
        t.second = checked_mul(t.second, scalar);
    return *this;
}

// ---------------------------------------------------------------------------
// EquivariantClass

EquivariantClass::EquivariantClass(const WeylGroup& group) : group_(&group), values_(group.order()) {}

EquivariantClass EquivariantClass::constant(const WeylGroup& group, Int value)
{
    EquivariantClass f(group);
    for (auto& p : f.values_)
        p = IntPolynomial(value);
    return f;
}

const IntPolynomial& EquivariantClass::at(const WeylElement& w) const
{
    group_->check_same_group(w);
    return values_[w.index()];
}

IntPolynomial& EquivariantClass::at(const WeylElement& w)
{
    group_->check_same_group(w);
    return values_[w.index()];
}

EquivariantClass operator*(const EquivariantClass& a, const EquivariantClass& b)
{
    if (a.group_ != b.group_)
        throw GroupMismatch("equivariant classes belong to different groups");
    EquivariantClass out(*a.group_);
    for (std::size_t k = 0; k < a.values_.size(); ++k)
        out.values_[k] = a.values_[k] * b.values_[k];
    return out;
}

bool EquivariantClass::satisfies_gkm() const
{
    const auto& pos = group_->roots().positive_roots();
    for (const auto& w : group_->elements()) {
        for (std::size_t p = 0; p < pos.size(); ++p) {
            // Edge w -- s_beta w of the moment graph (equivalently w -- w s_gamma
            // with divisor w(gamma)).
            auto sw = group_->multiply(group_->reflection(p), w);
            IntPolynomial diff = values_[w.index()] - values_[sw.index()];
            if (!diff.is_zero() && !diff.divisible_by_linear(IntPolynomial::linear(pos[p])))
                return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Billey restrictions

namespace detail {

std::vector<RootVector> billey_roots(const WeylGroup& group, const WeylElement& v)
{
    std::vector<RootVector> betas;
    WeylElement prefix = group.identity();
    for (auto j : v.word()) {
        betas.push_back(group.apply(prefix, simple_root(group.rank(), j)));
        prefix = group.right_multiply_simple(prefix, j);
    }
    return betas;
}

namespace {

// Sum over reduced subwords of the canonical word of v: state[z] accumulates
// the products of beta_k over subwords whose product is z and that are
// reduced (every letter raises the length).
template <class Value, class Factor>
std::vector<Value> billey_dp(const WeylGroup& group, const WeylElement& v, Factor factor_of)
{
    group.check_same_group(v);
    const auto betas = billey_roots(group, v);
    std::vector<Value> state(group.order());
    std::vector<std::uint32_t> active{0};
    std::vector<bool> is_active(group.order(), false);
    is_active[0] = true;
    state[0] = Value(1);
    auto word = v.word();
    for (std::size_t k = 0; k < word.size(); ++k) {
        const int j = word[k];
        const Value factor = factor_of(betas[k]);
        const std::size_t n_active = active.size();
        for (std::size_t a = 0; a < n_active; ++a) {
            auto z = group.element(active[a]);
            if (group.has_right_descent(z, j))
                continue;
            auto zs = group.right_multiply_simple(z, j);
            state[zs.index()] = state[zs.index()] + state[z.index()] * factor;
            if (!is_active[zs.index()]) {
                is_active[zs.index()] = true;
                active.push_back(zs.index());
            }
        }
    }
    return state;
}

} // namespace

std::vector<IntPolynomial> billey_row(const WeylGroup& group, const WeylElement& v)
{
    return billey_dp<IntPolynomial>(group, v, [](const RootVector& b) { return IntPolynomial::linear(b); });
}

std::vector<Int> billey_row_specialized(const WeylGroup& group, const WeylElement& v)
{
    struct Checked {
        Int x = 0;
        Checked() = default;
        explicit Checked(Int v) : x(v) {}
        Checked operator+(Checked o) const { return Checked(checked_add(x, o.x)); }
        Checked operator*(Checked o) const { return Checked(checked_mul(x, o.x)); }
    };
    auto row = billey_dp<Checked>(group, v, [](const RootVector& b) { return Checked(b.height()); });
    std::vector<Int> out(row.size());
    for (std::size_t k = 0; k < row.size(); ++k)
        out[k] = row[k].x;
    return out;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Structure table

StructureTable::StructureTable(std::size_t order, std::vector<std::size_t> offsets, std::vector<Entry> entries)
    : order_(order), offsets_(std::move(offsets)), entries_(std::move(entries))
{
    if (offsets_.size() != order_ * order_ + 1 || offsets_.back() != entries_.size())
        throw InternalInvariantError("malformed structure table");
}

Int StructureTable::constant(std::uint32_t u, std::uint32_t v, std::uint32_t w) const
{
    for (const auto& [x, c] : entries(u, v))
        if (x == w)
            return c;
    return 0;
}

namespace {

// Divides by the product of the roots along the canonical word of x.
IntPolynomial divide_by_roots(IntPolynomial f, const std::vector<IntPolynomial>& forms)
{
    for (const auto& form : forms)
        f = f.divide_exact_linear(form);
    return f;
}

StructureTable assemble(std::size_t n, std::vector<std::vector<StructureTable::Entry>>& per_pair)
{
    std::vector<std::size_t> offsets(n * n + 1, 0);
    std::vector<StructureTable::Entry> entries;
    for (std::size_t k = 0; k < n * n; ++k) {
        offsets[k] = entries.size();
        entries.insert(entries.end(), per_pair[k].begin(), per_pair[k].end());
    }
    offsets[n * n] = entries.size();
    return StructureTable(n, std::move(offsets), std::move(entries));
}

StructureTable build_polynomial(const WeylGroup& group)
{
    const std::size_t n = group.order();
    const int top = group.max_length();
    // restr[y][x] = xi^x(y)
    std::vector<std::vector<IntPolynomial>> restr(n);
    std::vector<std::vector<IntPolynomial>> diag_forms(n);
    for (const auto& y : group.elements()) {
        restr[y.index()] = detail::billey_row(group, y);
        for (const auto& beta : detail::billey_roots(group, y))
            diag_forms[y.index()].push_back(IntPolynomial::linear(beta));
    }
    std::vector<std::size_t> end_of_length(top + 1, 0);
    for (std::size_t k = 0; k < n; ++k)
        end_of_length[group.length(static_cast<std::uint32_t>(k))] = k + 1;

    std::vector<std::vector<StructureTable::Entry>> per_pair(n * n);
    std::vector<IntPolynomial> f;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u; v < n; ++v) {
            const int target = group.length(static_cast<std::uint32_t>(u)) + group.length(static_cast<std::uint32_t>(v));
            if (target > top)
                continue;
            const std::size_t end = end_of_length[target];
            f.assign(end, IntPolynomial());
            for (std::size_t y = 0; y < end; ++y)
                if (!restr[y][u].is_zero() && !restr[y][v].is_zero())
                    f[y] = restr[y][u] * restr[y][v];
            std::vector<StructureTable::Entry> out;
            for (std::size_t x = 0; x < end; ++x) {
                if (f[x].is_zero())
                    continue;
                IntPolynomial g = divide_by_roots(f[x], diag_forms[x]);
                if (group.length(static_cast<std::uint32_t>(x)) == target) {
                    // Degree 0: g is the constant c_{u,v}^x.
                    if (g.total_degree() != 0)
                        throw InternalInvariantError("non-constant top-degree localization coefficient");
                    out.emplace_back(static_cast<std::uint32_t>(x), g.constant_term());
                    continue;
                }
                for (std::size_t y = x + 1; y < end; ++y)
                    if (!restr[y][x].is_zero())
                        f[y] -= g * restr[y][x];
            }
            per_pair[u * n + v] = out;
            per_pair[v * n + u] = std::move(out);
        }
    }
    return assemble(n, per_pair);
}

StructureTable build_specialized(const WeylGroup& group)
{
    const std::size_t n = group.order();
    const int top = group.max_length();
    std::vector<std::vector<Int>> restr(n);
    for (const auto& y : group.elements())
        restr[y.index()] = detail::billey_row_specialized(group, y);
    std::vector<std::size_t> end_of_length(top + 1, 0);
    for (std::size_t k = 0; k < n; ++k)
        end_of_length[group.length(static_cast<std::uint32_t>(k))] = k + 1;

    std::vector<std::vector<StructureTable::Entry>> per_pair(n * n);
    std::vector<Int> f;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u; v < n; ++v) {
            const int target = group.length(static_cast<std::uint32_t>(u)) + group.length(static_cast<std::uint32_t>(v));
            if (target > top)
                continue;
            const std::size_t end = end_of_length[target];
            f.assign(end, 0);
            for (std::size_t y = 0; y < end; ++y)
                if (restr[y][u] != 0 && restr[y][v] != 0)
                    f[y] = checked_mul(restr[y][u], restr[y][v]);
            std::vector<StructureTable::Entry> out;
            for (std::size_t x = 0; x < end; ++x) {
                if (f[x] == 0)
                    continue;
                const Int d = restr[x][x];
                if (f[x] % d != 0)
                    throw InexactDivision("specialized localization: inexact division at element " + std::to_string(x));
                const Int g = f[x] / d;
                if (group.length(static_cast<std::uint32_t>(x)) == target) {
                    out.emplace_back(static_cast<std::uint32_t>(x), g);
                    continue;
                }
                for (std::size_t y = x + 1; y < end; ++y)
                    if (restr[y][x] != 0)
                        f[y] = checked_sub(f[y], checked_mul(g, restr[y][x]));
            }
            per_pair[u * n + v] = out;
            per_pair[v * n + u] = std::move(out);
        }
    }
    return assemble(n, per_pair);
}

} // namespace

StructureTable build_structure_table(const WeylGroup& group, LocalizationRoute route)
{
    if (route == LocalizationRoute::Automatic)
        route = group.order() <= kPolynomialRouteLimit ? LocalizationRoute::Polynomial : LocalizationRoute::Specialized;
    return route == LocalizationRoute::Polynomial ? build_polynomial(group) : build_specialized(group);
}

// ---------------------------------------------------------------------------
// Cohomology

Cohomology::Cohomology(std::shared_ptr<const WeylGroup> group, LocalizationRoute route)
    : group_(std::move(group)), table_(build_structure_table(*group_, route))
{
}

Cohomology::Cohomology(std::shared_ptr<const WeylGroup> group, StructureTable table)
    : group_(std::move(group)), table_(std::move(table))
{
    if (table_.order() != group_->order())
        throw InternalInvariantError("structure table does not match group order");
}

void Cohomology::check(const CohomologyClass& a) const
{
    if (&a.group() != group_.get())
        throw GroupMismatch("cohomology class does not belong to " + group_->name());
}

void Cohomology::check(const WeylElement& w) const { group_->check_same_group(w); }

IntPolynomial Cohomology::billey_restriction(const WeylElement& w, const WeylElement& v) const
{
    check(w);
    check(v);
    if (!group_->bruhat_leq(w, v))
        return {};
    return detail::billey_row(*group_, v)[w.index()];
}

EquivariantClass Cohomology::schubert_class(const WeylElement& w) const
{
    check(w);
    EquivariantClass f(*group_);
    for (const auto& v : group_->elements())
        if (group_->bruhat_leq(w, v))
            f.at(v) = detail::billey_row(*group_, v)[w.index()];
    return f;
}

std::map<WeylElement, IntPolynomial> Cohomology::expand_equivariant(const EquivariantClass& f) const
{
    if (&f.group() != group_.get())
        throw GroupMismatch("equivariant class does not belong to " + group_->name());
    const std::size_t n = group_->order();
    std::vector<std::vector<IntPolynomial>> restr(n);
    for (const auto& y : group_->elements())
        restr[y.index()] = detail::billey_row(*group_, y);

    std::vector<IntPolynomial> rem = f.restrictions();
    std::map<WeylElement, IntPolynomial> out;
    for (std::size_t x = 0; x < n; ++x) {
        if (rem[x].is_zero())
            continue;
        auto xe = group_->element(x);
        std::vector<IntPolynomial> forms;
        for (const auto& beta : detail::billey_roots(*group_, xe))
            forms.push_back(IntPolynomial::linear(beta));
        IntPolynomial g = divide_by_roots(rem[x], forms);
        for (std::size_t y = x; y < n; ++y)
            if (!restr[y][x].is_zero())
                rem[y] -= g * restr[y][x];
        out.emplace(xe, std::move(g));
    }
    return out;
}

CohomologyClass Cohomology::basis(const WeylElement& w) const
{
    check(w);
    return CohomologyClass::basis(w);
}

CohomologyClass Cohomology::cup(const CohomologyClass& a, const CohomologyClass& b) const
{
    check(a);
    check(b);
    std::vector<Int> acc(group_->order(), 0);
    bool any = false;
    for (const auto& [x, cx] : a.terms())
        for (const auto& [y, cy] : b.terms())
            for (const auto& [w, c] : table_.entries(x, y)) {
                checked_fma(acc[w], checked_mul(cx, cy), c);
                any = true;
            }
    if (!any)
        return CohomologyClass(*group_);
    return CohomologyClass::from_dense(*group_, acc);
}

Int Cohomology::structure_constant(const WeylElement& u, const WeylElement& v, const WeylElement& w) const
{
    check(u);
    check(v);
    check(w);
    return table_.constant(u.index(), v.index(), w.index());
}

CohomologyClass Cohomology::first_chern(const Weight& lambda) const
{
    CohomologyClass c(*group_);
    for (int i = 0; i < group_->rank(); ++i)
        c.add_term(group_->simple_reflection(i).index(), lambda.labels.at(i));
    return c;
}

CohomologyClass Cohomology::chevalley_multiply(const Weight& lambda, const WeylElement& v) const
{
    check(v);
    const auto& pos = group_->roots().positive_roots();
    CohomologyClass out(*group_);
    for (std::size_t p = 0; p < pos.size(); ++p) {
        auto w = group_->times_reflection(v, p);
        if (w.length() == v.length() + 1)
            out.add_term(w.index(), group_->roots().pair(lambda, pos[p]));
    }
    return out;
}

Int Cohomology::integrate(const CohomologyClass& a) const
{
    check(a);
    return a.coefficient(group_->longest().index());
}

Int Cohomology::triple_integral(const WeylElement& u, const WeylElement& v, const WeylElement& w) const
{
    return integrate(cup(cup(basis(u), basis(v)), basis(w)));
}

} // namespace schubert
