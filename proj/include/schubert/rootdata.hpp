#pragma once

// Finite root systems and their Weyl groups.
//
// Conventions: the Cartan matrix entry (i,j) is <alpha_j, alpha_i^vee>, simple
// roots are numbered as in Bourbaki (G2: alpha_1 short). Simple indices are
// 0-based in the API and rendered 1-based ("s1 s2") for humans.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "schubert/error.hpp"

namespace schubert {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

Series parse_series(const std::string& text);
char series_letter(Series s);

/// Square integer matrix stored row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0) {}

    int size() const { return n_; }
    int& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }
    int operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    int n_ = 0;
    std::vector<int> data_;
};

class CartanDatum {
public:
    /// Canonical Cartan matrix for (series, rank). Throws InvalidCartan for
    /// combinations that do not name a simple type (A0, B1, D3, E5, F3, ...).
    static CartanDatum canonical(Series series, int rank);

    /// Validates `matrix` against the finite-type axioms and against the
    /// canonical matrix for (series, rank).
    static CartanDatum from_matrix(Series series, int rank, const IntMatrix& matrix);

    Series series() const { return series_; }
    int rank() const { return rank_; }
    const IntMatrix& matrix() const { return matrix_; }
    int operator()(int i, int j) const { return matrix_(i, j); }

    /// (alpha_i, alpha_i) normalised so that short roots have squared length 2.
    const std::vector<int>& root_norms() const { return norms_; }

    std::string name() const;

    friend bool operator==(const CartanDatum& a, const CartanDatum& b)
    {
        return a.series_ == b.series_ && a.rank_ == b.rank_ && a.matrix_ == b.matrix_;
    }

private:
    CartanDatum(Series s, int r, IntMatrix m, std::vector<int> norms)
        : series_(s), rank_(r), matrix_(std::move(m)), norms_(std::move(norms)) {}

    Series series_;
    int rank_;
    IntMatrix matrix_;
    std::vector<int> norms_;
};

/// Checks the Cartan axioms and positive definiteness of the symmetrisation;
/// returns the symmetriser (root norms) or throws InvalidCartan.
std::vector<int> validate_cartan_matrix(const IntMatrix& matrix);

/// A vector in the simple-root basis.
struct RootVector {
    std::vector<int> coords;

    bool is_zero() const;
    bool is_positive() const; // all coordinates >= 0 and at least one > 0
    bool is_negative() const;
    int height() const;

    RootVector operator-() const;
    friend bool operator==(const RootVector&, const RootVector&) = default;
    friend auto operator<=>(const RootVector&, const RootVector&) = default;
};

RootVector simple_root(int rank, int i);

/// A weight given by its Dynkin labels <lambda, alpha_i^vee>.
struct Weight {
    std::vector<int> labels;
    friend bool operator==(const Weight&, const Weight&) = default;
};

class RootSystem {
public:
    explicit RootSystem(CartanDatum datum);

    const CartanDatum& datum() const { return datum_; }
    int rank() const { return datum_.rank(); }

    /// Positive roots ordered by height, ties by coordinates.
    const std::vector<RootVector>& positive_roots() const { return positive_; }
    std::size_t num_positive() const { return positive_.size(); }

    /// Index of a positive root, or nullopt.
    std::optional<std::size_t> positive_index(const RootVector& beta) const;
    bool is_root(const RootVector& beta) const;

    RootVector highest_root() const { return positive_.back(); }

    /// Coefficients of beta^vee in the simple coroots (beta positive or negative).
    std::vector<int> coroot(const RootVector& beta) const;

    /// s_i(v) = v - <v, alpha_i^vee> alpha_i for any vector in root coordinates.
    RootVector reflect(int i, const RootVector& v) const;
    int pair_simple_coroot(const RootVector& v, int i) const;

    Weight to_weight(const RootVector& v) const;
    Weight fundamental_weight(int i) const;

    /// <lambda, beta^vee>. Throws NotARoot if beta is not a root.
    int pair(const Weight& lambda, const RootVector& beta) const;
    int pair(const RootVector& lambda, const RootVector& beta) const { return pair(to_weight(lambda), beta); }

private:
    CartanDatum datum_;
    std::vector<RootVector> positive_;
    std::vector<std::vector<int>> coroots_;
    std::unordered_map<std::string, std::size_t> index_;
};

class WeylGroup;

/// Handle to an element of a WeylGroup. The group owns all data (canonical
/// word, length, action on simple roots); handles are cheap to copy and must
/// not outlive their group.
class WeylElement {
public:
    WeylElement() = default;

    const WeylGroup& group() const { return *group_; }
    const WeylGroup* group_ptr() const { return group_; }
    std::uint32_t index() const { return index_; }
    bool valid() const { return group_ != nullptr; }

    int length() const;
    std::span<const std::uint8_t> word() const;
    std::vector<RootVector> action() const;
    bool is_identity() const { return index_ == 0; }

    friend bool operator==(const WeylElement& a, const WeylElement& b)
    {
        return a.group_ == b.group_ && a.index_ == b.index_;
    }
    friend bool operator<(const WeylElement& a, const WeylElement& b) { return a.index_ < b.index_; }

private:
    friend class WeylGroup;
    WeylElement(const WeylGroup* g, std::uint32_t i) : group_(g), index_(i) {}

    const WeylGroup* group_ = nullptr;
    std::uint32_t index_ = 0;
};

inline constexpr std::size_t kDefaultWeylCapacity = 10000;

/// The full, enumerated Weyl group. Elements are indexed by increasing length
/// with ties broken by canonical word in lex order; index 0 is the identity.
/// Immutable after construction.
class WeylGroup {
public:
    static std::shared_ptr<const WeylGroup> create(const CartanDatum& datum,
                                                   std::size_t capacity = kDefaultWeylCapacity);
    static std::shared_ptr<const WeylGroup> create(Series series, int rank,
                                                   std::size_t capacity = kDefaultWeylCapacity)
    {
        return create(CartanDatum::canonical(series, rank), capacity);
    }

    WeylGroup(const WeylGroup&) = delete;
    WeylGroup& operator=(const WeylGroup&) = delete;

    const RootSystem& roots() const { return roots_; }
    const CartanDatum& datum() const { return roots_.datum(); }
    int rank() const { return roots_.rank(); }
    std::size_t order() const { return lengths_.size(); }
    std::string name() const { return datum().name(); }

    WeylElement element(std::size_t index) const;
    WeylElement identity() const { return element(0); }
    WeylElement longest() const { return element(order() - 1); }
    WeylElement simple_reflection(int i) const;
    std::vector<WeylElement> elements() const;
    int max_length() const { return lengths_.back(); }

    int length(std::uint32_t index) const { return lengths_[index]; }
    std::span<const std::uint8_t> word(std::uint32_t index) const { return words_[index]; }

    /// Element with the given word (need not be reduced). Throws ParseError on
    /// out-of-range letters.
    WeylElement from_word(std::span<const int> word) const;
    /// Element whose images of the simple roots are `images`, if any.
    std::optional<WeylElement> from_action(const std::vector<RootVector>& images) const;
    std::vector<RootVector> action(const WeylElement& w) const;

    WeylElement multiply(const WeylElement& x, const WeylElement& y) const;
    WeylElement inverse(const WeylElement& x) const;
    WeylElement right_multiply_simple(const WeylElement& w, int i) const; // w s_i
    WeylElement left_multiply_simple(int i, const WeylElement& w) const;  // s_i w
    bool has_right_descent(const WeylElement& w, int i) const;           // l(w s_i) < l(w)
    bool has_left_descent(const WeylElement& w, int i) const;            // l(s_i w) < l(w)

    /// Image of an arbitrary root-coordinate vector under w.
    RootVector apply(const WeylElement& w, const RootVector& v) const;

    /// {beta > 0 : w(beta) < 0}; its size is l(w).
    std::vector<RootVector> inversion_set(const WeylElement& w) const;

    /// Reflection s_beta for the positive root with the given index.
    WeylElement reflection(std::size_t positive_root_index) const;
    /// w * s_beta for the positive root with the given index.
    WeylElement times_reflection(const WeylElement& w, std::size_t positive_root_index) const;

    /// Bruhat order by the left-descent recursion.
    bool bruhat_leq(const WeylElement& v, const WeylElement& w) const;

    void check_same_group(const WeylElement& x) const;

    /// Lex-min reduced word recomputed from the action; equals word().
    std::vector<std::uint8_t> canonical_word_from_action(const std::vector<RootVector>& images) const;

private:
    WeylGroup(const CartanDatum& datum, std::size_t capacity);

    std::uint32_t find(const std::vector<RootVector>& images) const;

    RootSystem roots_;
    std::vector<int> lengths_;
    std::vector<std::vector<std::uint8_t>> words_;
    std::vector<std::vector<int>> actions_; // rank*rank per element, column j = w(alpha_j)
    std::vector<std::uint32_t> right_;      // order*rank
    std::vector<std::uint32_t> left_;       // order*rank
    std::vector<std::uint32_t> inverse_;
    std::vector<std::uint32_t> reflections_;
    std::vector<std::uint32_t> times_reflection_; // order*num_positive
    std::unordered_map<std::string, std::uint32_t> lookup_;
};

/// Builds the closure of the simple roots under simple reflections. Throws
/// NotFiniteType if the closure exceeds the size bound for (series, rank).
std::vector<RootVector> build_positive_roots(const CartanDatum& datum);

/// Classical order of W for (series, rank).
std::size_t classical_weyl_order(Series series, int rank);
/// Degrees of the fundamental invariants; the Poincare polynomial is
/// prod_i (1 + t + ... + t^{d_i - 1}).
std::vector<int> weyl_degrees(Series series, int rank);

} // namespace schubert
