#pragma once

// Sparse integer polynomials in the simple roots alpha_1..alpha_r (r <= 8).

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "schubert/integer.hpp"
#include "schubert/rootdata.hpp"

namespace schubert {

/// Exponent vector packed 8 bits per variable; variable 0 occupies the most
/// significant byte so that integer order is lex order with x_0 > x_1 > ...
class Monomial {
public:
    static constexpr int kMaxVars = 8;

    constexpr Monomial() = default;
    static Monomial variable(int i) { return Monomial().times_variable(i); }
    static constexpr Monomial from_bits(std::uint64_t bits) { return Monomial(bits); }

    int exponent(int i) const { return static_cast<int>((bits_ >> shift(i)) & 0xff); }
    int degree() const;
    Monomial times_variable(int i) const;
    bool divisible_by_variable(int i) const { return exponent(i) > 0; }
    Monomial divided_by_variable(int i) const { return Monomial(bits_ - (std::uint64_t{1} << shift(i))); }
    std::uint64_t bits() const { return bits_; }

    friend Monomial operator*(Monomial a, Monomial b);
    friend auto operator<=>(Monomial, Monomial) = default;

private:
    explicit constexpr Monomial(std::uint64_t b) : bits_(b) {}
    static int shift(int i) { return 8 * (kMaxVars - 1 - i); }
    std::uint64_t bits_ = 0;
};

class IntPolynomial {
public:
    using Term = std::pair<Monomial, Int>;

    IntPolynomial() = default;
    explicit IntPolynomial(Int constant);
    static IntPolynomial variable(int i);
    /// Linear form sum_i coords_i alpha_i.
    static IntPolynomial linear(const RootVector& root);

    bool is_zero() const { return terms_.empty(); }
    /// Terms sorted by monomial, descending (lex leading term first); no zeros.
    const std::vector<Term>& terms() const { return terms_; }
    /// -1 for the zero polynomial.
    int total_degree() const;
    bool is_homogeneous() const;
    /// Coefficient of the constant monomial.
    Int constant_term() const;
    Int coefficient(Monomial m) const;
    /// Value with every variable set to `value`.
    Int evaluate_diagonal(Int value) const;

    IntPolynomial& operator+=(const IntPolynomial& other);
    IntPolynomial& operator-=(const IntPolynomial& other);
    IntPolynomial& operator*=(Int scalar);
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(IntPolynomial a, Int s) { return a *= s; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    IntPolynomial operator-() const;

    /// Exact quotient by a nonzero linear form; throws InexactDivision if the
    /// form does not divide this polynomial.
    IntPolynomial divide_exact_linear(const IntPolynomial& linear_form) const;
    /// Whether the linear form divides this polynomial.
    bool divisible_by_linear(const IntPolynomial& linear_form) const;

    std::string to_string() const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    static IntPolynomial from_unsorted(std::vector<Term> terms);
    bool try_divide_linear(const IntPolynomial& linear_form, IntPolynomial& quotient) const;

    std::vector<Term> terms_;
};

} // namespace schubert
