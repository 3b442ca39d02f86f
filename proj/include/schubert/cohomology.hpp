#pragma once

// Integral Schubert calculus on H*(G/B).
//
// Cup products come from torus-fixed-point localization: the equivariant
// Schubert class xi^w restricts to the fixed point v by Billey's formula, a
// pointwise product is re-expanded in the xi basis by exact division, and the
// non-equivariant structure constants are the degree-0 coefficients. The
// Chevalley formula is kept as an independent route for degree-2 products.

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "schubert/integer.hpp"
#include "schubert/polynomial.hpp"
#include "schubert/rootdata.hpp"

namespace schubert {

/// Finite integer combination of Schubert classes epsilon^w; epsilon^w has
/// cohomological degree 2 l(w). Zero coefficients are never stored.
class CohomologyClass {
public:
    using Term = std::pair<std::uint32_t, Int>; // (element index, coefficient)

    explicit CohomologyClass(const WeylGroup& group) : group_(&group) {}
    static CohomologyClass basis(const WeylElement& w);
    static CohomologyClass unit(const WeylGroup& group) { return basis(group.identity()); }
    /// Builds a class from a dense coefficient vector indexed by element.
    static CohomologyClass from_dense(const WeylGroup& group, std::span<const Int> coeffs);

    const WeylGroup& group() const { return *group_; }
    /// Sorted by element index.
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Int coefficient(const WeylElement& w) const;
    Int coefficient(std::uint32_t index) const;
    void add_term(std::uint32_t index, Int coeff);
    std::vector<Int> dense() const;

    /// Part of cohomological degree 2k, i.e. the terms with l(w) = k.
    CohomologyClass graded_component(int k) const;
    /// Largest l(w) present, or -1 for zero.
    int max_length() const;
    int min_length() const;

    CohomologyClass& operator+=(const CohomologyClass& other);
    CohomologyClass& operator-=(const CohomologyClass& other);
    CohomologyClass& operator*=(Int scalar);
    friend CohomologyClass operator+(CohomologyClass a, const CohomologyClass& b) { return a += b; }
    friend CohomologyClass operator-(CohomologyClass a, const CohomologyClass& b) { return a -= b; }
    friend CohomologyClass operator*(CohomologyClass a, Int s) { return a *= s; }
    friend CohomologyClass operator*(Int s, CohomologyClass a) { return a *= s; }
    CohomologyClass operator-() const { return CohomologyClass(*this) *= -1; }

    friend bool operator==(const CohomologyClass& a, const CohomologyClass& b)
    {
        return a.group_ == b.group_ && a.terms_ == b.terms_;
    }

private:
    void check_group(const CohomologyClass& other) const;

    const WeylGroup* group_;
    std::vector<Term> terms_;
};

/// Restrictions of an equivariant class to every torus fixed point.
class EquivariantClass {
public:
    explicit EquivariantClass(const WeylGroup& group);
    static EquivariantClass constant(const WeylGroup& group, Int value);

    const WeylGroup& group() const { return *group_; }
    const IntPolynomial& at(const WeylElement& w) const;
    IntPolynomial& at(const WeylElement& w);
    const std::vector<IntPolynomial>& restrictions() const { return values_; }

    /// Pointwise product.
    friend EquivariantClass operator*(const EquivariantClass& a, const EquivariantClass& b);

    /// For every w and positive root beta, f(w) - f(s_beta w) is divisible by beta.
    bool satisfies_gkm() const;

    friend bool operator==(const EquivariantClass& a, const EquivariantClass& b)
    {
        return a.group_ == b.group_ && a.values_ == b.values_;
    }

private:
    const WeylGroup* group_;
    std::vector<IntPolynomial> values_;
};

/// Structure constants c_{u,v}^w of the cup product (only l(w) = l(u)+l(v)).
class StructureTable {
public:
    using Entry = std::pair<std::uint32_t, Int>; // (w index, c_{u,v}^w)

    StructureTable() = default;
    StructureTable(std::size_t order, std::vector<std::size_t> offsets, std::vector<Entry> entries);

    std::size_t order() const { return order_; }
    std::span<const Entry> entries(std::uint32_t u, std::uint32_t v) const
    {
        std::size_t k = static_cast<std::size_t>(u) * order_ + v;
        return {entries_.data() + offsets_[k], entries_.data() + offsets_[k + 1]};
    }
    Int constant(std::uint32_t u, std::uint32_t v, std::uint32_t w) const;
    std::size_t nonzero_count() const { return entries_.size(); }

    const std::vector<std::size_t>& offsets() const { return offsets_; }
    const std::vector<Entry>& all_entries() const { return entries_; }

    friend bool operator==(const StructureTable&, const StructureTable&) = default;

private:
    std::size_t order_ = 0;
    std::vector<std::size_t> offsets_; // order*order + 1
    std::vector<Entry> entries_;
};

enum class LocalizationRoute {
    Polynomial,  // restrictions as polynomials in the simple roots
    Specialized, // same recursion after alpha_i -> 1 (beta -> height(beta))
    Automatic,   // Polynomial for |W| <= kPolynomialRouteLimit, else Specialized
};

inline constexpr std::size_t kPolynomialRouteLimit = 48;

/// Builds the structure constants by localization.
StructureTable build_structure_table(const WeylGroup& group, LocalizationRoute route = LocalizationRoute::Automatic);

/// The cohomology ring of G/B for one group, with its cached structure table.
/// Immutable after construction; all member functions are safe for concurrent use.
class Cohomology {
public:
    explicit Cohomology(std::shared_ptr<const WeylGroup> group,
                        LocalizationRoute route = LocalizationRoute::Automatic);
    Cohomology(std::shared_ptr<const WeylGroup> group, StructureTable table);

    const WeylGroup& group() const { return *group_; }
    std::shared_ptr<const WeylGroup> group_handle() const { return group_; }
    const StructureTable& table() const { return table_; }

    /// xi^w restricted to the fixed point v (Billey's formula along the
    /// canonical word of v). Zero unless w <= v.
    IntPolynomial billey_restriction(const WeylElement& w, const WeylElement& v) const;
    /// The equivariant Schubert class xi^w.
    EquivariantClass schubert_class(const WeylElement& w) const;
    /// Coefficients g_w with f = sum_w g_w xi^w. Throws InexactDivision when f
    /// is not in the span of the xi^w.
    std::map<WeylElement, IntPolynomial> expand_equivariant(const EquivariantClass& f) const;

    CohomologyClass basis(const WeylElement& w) const;
    CohomologyClass unit() const { return CohomologyClass::unit(*group_); }
    CohomologyClass cup(const CohomologyClass& a, const CohomologyClass& b) const;
    Int structure_constant(const WeylElement& u, const WeylElement& v, const WeylElement& w) const;

    /// c_1(L_lambda) = sum_i <lambda, alpha_i^vee> epsilon^{s_i}.
    CohomologyClass first_chern(const Weight& lambda) const;
    /// c_1(L_lambda) . epsilon^v by the Chevalley formula.
    CohomologyClass chevalley_multiply(const Weight& lambda, const WeylElement& v) const;

    /// Coefficient of epsilon^{w_o}, the point class.
    Int integrate(const CohomologyClass& a) const;
    Int triple_integral(const WeylElement& u, const WeylElement& v, const WeylElement& w) const;

private:
    void check(const CohomologyClass& a) const;
    void check(const WeylElement& w) const;

    std::shared_ptr<const WeylGroup> group_;
    StructureTable table_;
};

namespace detail {
/// Billey restrictions xi^x(v) for every x, by dynamic programming over the
/// canonical word of v.
std::vector<IntPolynomial> billey_row(const WeylGroup& group, const WeylElement& v);
/// The same row with every simple root specialised to 1.
std::vector<Int> billey_row_specialized(const WeylGroup& group, const WeylElement& v);
/// The roots beta_k = s_{j1}...s_{j(k-1)}(alpha_{jk}) along the canonical word of v.
std::vector<RootVector> billey_roots(const WeylGroup& group, const WeylElement& v);
} // namespace detail

} // namespace schubert
