#include "schubert/polynomial.hpp"

#include <algorithm>
#include <map>

namespace schubert {

int Monomial::degree() const
{
    int d = 0;
    for (int i = 0; i < kMaxVars; ++i)
        d += exponent(i);
    return d;
}

Monomial Monomial::times_variable(int i) const
{
    if (i < 0 || i >= kMaxVars)
        throw std::out_of_range("polynomial variable index out of range");
    if (exponent(i) == 0xff)
        throw ArithmeticOverflow("monomial exponent overflow");
    return Monomial(bits_ + (std::uint64_t{1} << shift(i)));
}

Monomial operator*(Monomial a, Monomial b)
{
    for (int i = 0; i < Monomial::kMaxVars; ++i)
        if (a.exponent(i) + b.exponent(i) > 0xff)
            throw ArithmeticOverflow("monomial exponent overflow");
    return Monomial(a.bits_ + b.bits_);
}

IntPolynomial::IntPolynomial(Int constant)
{
    if (constant != 0)
        terms_.emplace_back(Monomial(), constant);
}

IntPolynomial IntPolynomial::variable(int i)
{
    IntPolynomial p;
    p.terms_.emplace_back(Monomial::variable(i), 1);
    return p;
}

IntPolynomial IntPolynomial::linear(const RootVector& root)
{
    std::vector<Term> t;
    for (std::size_t i = 0; i < root.coords.size(); ++i)
        if (root.coords[i] != 0)
            t.emplace_back(Monomial::variable(static_cast<int>(i)), root.coords[i]);
    return from_unsorted(std::move(t));
}

IntPolynomial IntPolynomial::from_unsorted(std::vector<Term> terms)
{
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first > b.first; });
    IntPolynomial p;
    for (auto& [m, c] : terms) {
        if (!p.terms_.empty() && p.terms_.back().first == m)
            p.terms_.back().second = checked_add(p.terms_.back().second, c);
        else
            p.terms_.emplace_back(m, c);
    }
    std::erase_if(p.terms_, [](const Term& t) { return t.second == 0; });
    return p;
}

int IntPolynomial::total_degree() const
{
    int d = -1;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m.degree());
    return d;
}

bool IntPolynomial::is_homogeneous() const
{
    for (const auto& [m, c] : terms_)
        if (m.degree() != terms_.front().first.degree())
            return false;
    return true;
}

Int IntPolynomial::constant_term() const { return coefficient(Monomial()); }

Int IntPolynomial::coefficient(Monomial m) const
{
    for (const auto& [mm, c] : terms_)
        if (mm == m)
            return c;
    return 0;
}

Int IntPolynomial::evaluate_diagonal(Int value) const
{
    Int total = 0;
    for (const auto& [m, c] : terms_) {
        Int term = c;
        for (int k = 0; k < m.degree(); ++k)
            term = checked_mul(term, value);
        total = checked_add(total, term);
    }
    return total;
}

namespace {

template <class Op>
std::vector<IntPolynomial::Term> merge(const std::vector<IntPolynomial::Term>& a,
                                       const std::vector<IntPolynomial::Term>& b, Op op)
{
    std::vector<IntPolynomial::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first > b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first > a[i].first) {
            out.emplace_back(b[j].first, op(0, b[j].second));
            ++j;
        } else {
            Int c = op(a[i].second, b[j].second);
            if (c != 0)
                out.emplace_back(a[i].first, c);
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other)
{
    terms_ = merge(terms_, other.terms_, checked_add);
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other)
{
    terms_ = merge(terms_, other.terms_, checked_sub);
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(Int scalar)
{
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_)
        t.second = checked_mul(t.second, scalar);
    return *this;
}

IntPolynomial IntPolynomial::operator-() const { return IntPolynomial(*this) *= -1; }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::map<std::uint64_t, Int, std::greater<>> acc;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            checked_fma(acc[(ma * mb).bits()], ca, cb);
    IntPolynomial p;
    for (const auto& [bits, c] : acc) {
        if (c == 0)
            continue;
        p.terms_.emplace_back(Monomial::from_bits(bits), c);
    }
    return p;
}

bool IntPolynomial::try_divide_linear(const IntPolynomial& form, IntPolynomial& quotient) const
{
    if (form.is_zero() || form.total_degree() != 1 || !form.is_homogeneous())
        throw std::invalid_argument("divisor must be a nonzero linear form");
    // Leading term c*x_j of the form in lex order.
    const auto& [lead, lead_coef] = form.terms_.front();
    int var = 0;
    while (!lead.divisible_by_variable(var))
        ++var;

    std::vector<Term> q;
    IntPolynomial rem = *this;
    while (!rem.is_zero()) {
        const auto [m, c] = rem.terms_.front();
        if (!m.divisible_by_variable(var) || c % lead_coef != 0)
            return false;
        Monomial qm = m.divided_by_variable(var);
        Int qc = c / lead_coef;
        q.emplace_back(qm, qc);
        IntPolynomial step;
        step.terms_.emplace_back(qm, qc);
        rem -= step * form;
    }
    quotient = from_unsorted(std::move(q));
    return true;
}

IntPolynomial IntPolynomial::divide_exact_linear(const IntPolynomial& form) const
{
    IntPolynomial q;
    if (!try_divide_linear(form, q))
        throw InexactDivision("polynomial " + to_string() + " is not divisible by " + form.to_string());
    return q;
}

bool IntPolynomial::divisible_by_linear(const IntPolynomial& form) const
{
    IntPolynomial q;
    return try_divide_linear(form, q);
}

std::string IntPolynomial::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Int a = c < 0 ? -c : c;
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        first = false;
        std::string mono;
        for (int i = 0; i < Monomial::kMaxVars; ++i) {
            int e = m.exponent(i);
            if (e == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += "a" + std::to_string(i + 1);
            if (e > 1)
                mono += "^" + std::to_string(e);
        }
        if (mono.empty())
            out += std::to_string(a);
        else if (a == 1)
            out += mono;
        else
            out += std::to_string(a) + "*" + mono;
    }
    return out;
}

} // namespace schubert
