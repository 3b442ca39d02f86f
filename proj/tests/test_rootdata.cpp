#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "schubert/rootdata.hpp"
#include "test_support.hpp"

using namespace schubert;
using schubert::testing::word_of;

namespace {

// Bruhat interval [e, w] as the set of products of all subwords of a reduced
// word of w (subword property).
std::set<std::uint32_t> subword_ideal(const WeylGroup& g, const WeylElement& w)
{
    std::set<std::uint32_t> out;
    auto word = w.word();
    const std::size_t m = word.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        std::vector<int> sub;
        for (std::size_t k = 0; k < m; ++k)
            if (mask & (std::size_t{1} << k))
                sub.push_back(word[k]);
        out.insert(g.from_word(sub).index());
    }
    return out;
}

// One-line notation of the permutation of {0..n} obtained from a word in the
// adjacent transpositions.
std::vector<int> permutation_of(std::span<const std::uint8_t> word, int n)
{
    std::vector<int> p(n + 1);
    std::iota(p.begin(), p.end(), 0);
    for (auto i : word)
        std::swap(p[i], p[i + 1]); // right multiplication by s_i swaps positions i, i+1
    return p;
}

int inversions(const std::vector<int>& p)
{
    int c = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            c += p[i] > p[j];
    return c;
}

std::vector<int> poincare_coefficients(const std::vector<int>& degrees)
{
    std::vector<int> poly{1};
    for (int d : degrees) {
        std::vector<int> next(poly.size() + d - 1, 0);
        for (std::size_t i = 0; i < poly.size(); ++i)
            for (int k = 0; k < d; ++k)
                next[i + k] += poly[i];
        poly = next;
    }
    return poly;
}

} // namespace

TEST_CASE("Cartan matrices follow the <alpha_j, alpha_i^vee> convention")
{
    auto b2 = CartanDatum::canonical(Series::B, 2);
    CHECK(b2(0, 1) == -1);
    CHECK(b2(1, 0) == -2);
    auto c3 = CartanDatum::canonical(Series::C, 3);
    CHECK(c3(1, 2) == -2);
    CHECK(c3(2, 1) == -1);
    auto g2 = CartanDatum::canonical(Series::G, 2);
    CHECK(g2(0, 1) == -3);
    CHECK(g2(1, 0) == -1);
    auto e6 = CartanDatum::canonical(Series::E, 6);
    CHECK(e6(1, 3) == -1);
    CHECK(e6(0, 2) == -1);
    CHECK(e6(1, 2) == 0);
}

TEST_CASE("invalid Cartan data is rejected")
{
    CHECK_THROWS_AS(CartanDatum::canonical(Series::A, 0), InvalidCartan);
    CHECK_THROWS_AS(CartanDatum::canonical(Series::B, 1), InvalidCartan);
    CHECK_THROWS_AS(CartanDatum::canonical(Series::D, 3), InvalidCartan);
    CHECK_THROWS_AS(CartanDatum::canonical(Series::E, 9), InvalidCartan);
    CHECK_THROWS_AS(CartanDatum::canonical(Series::G, 3), InvalidCartan);
    CHECK_THROWS_AS(parse_series("Z"), InvalidCartan);

    IntMatrix affine(2); // affine A1: [[2,-2],[-2,2]] is not positive definite
    affine(0, 0) = affine(1, 1) = 2;
    affine(0, 1) = affine(1, 0) = -2;
    CHECK_THROWS_AS(validate_cartan_matrix(affine), InvalidCartan);

    IntMatrix bad_diag(2);
    bad_diag(0, 0) = 2;
    bad_diag(1, 1) = 3;
    CHECK_THROWS_AS(validate_cartan_matrix(bad_diag), InvalidCartan);

    IntMatrix positive_off(2);
    positive_off(0, 0) = positive_off(1, 1) = 2;
    positive_off(0, 1) = positive_off(1, 0) = 1;
    CHECK_THROWS_AS(validate_cartan_matrix(positive_off), InvalidCartan);

    IntMatrix disconnected(2); // A1 x A1
    disconnected(0, 0) = disconnected(1, 1) = 2;
    CHECK_THROWS_AS(validate_cartan_matrix(disconnected), InvalidCartan);

    // Right size and type, wrong orientation: B2's transpose is C2's matrix.
    IntMatrix c2 = CartanDatum::canonical(Series::C, 2).matrix();
    CHECK_THROWS_AS(CartanDatum::from_matrix(Series::B, 2, c2), InvalidCartan);
    CHECK(CartanDatum::from_matrix(Series::C, 2, c2) == CartanDatum::canonical(Series::C, 2));
}

TEST_CASE("positive roots")
{
    SUBCASE("A1")
    {
        auto roots = build_positive_roots(CartanDatum::canonical(Series::A, 1));
        REQUIRE(roots.size() == 1);
        CHECK(roots[0].coords == std::vector<int>{1});
    }
    SUBCASE("A2")
    {
        auto roots = build_positive_roots(CartanDatum::canonical(Series::A, 2));
        std::set<std::vector<int>> got;
        for (auto& r : roots)
            got.insert(r.coords);
        CHECK(got == std::set<std::vector<int>>{{1, 0}, {0, 1}, {1, 1}});
    }
    SUBCASE("G2")
    {
        RootSystem rs(CartanDatum::canonical(Series::G, 2));
        CHECK(rs.num_positive() == 6);
        CHECK(rs.highest_root().coords == std::vector<int>{3, 2});
    }
    SUBCASE("counts match |Delta+| for every series")
    {
        CHECK(build_positive_roots(CartanDatum::canonical(Series::B, 4)).size() == 16);
        CHECK(build_positive_roots(CartanDatum::canonical(Series::D, 5)).size() == 20);
        CHECK(build_positive_roots(CartanDatum::canonical(Series::E, 8)).size() == 120);
        CHECK(build_positive_roots(CartanDatum::canonical(Series::F, 4)).size() == 24);
    }
}

TEST_CASE("coroot pairings")
{
    RootSystem a2(CartanDatum::canonical(Series::A, 2));
    auto a1 = simple_root(2, 0), a2r = simple_root(2, 1);
    CHECK(a2.pair(a1, a1) == 2);
    CHECK(a2.pair(a1, a2r) == -1);
    CHECK(a2.pair(a2.fundamental_weight(0), RootVector{{1, 1}}) == 1);
    CHECK_THROWS_AS(a2.pair(a1, RootVector{{1, -1}}), NotARoot);
    CHECK_THROWS_AS(a2.pair(a1, RootVector{{2, 0}}), NotARoot);
    CHECK(a2.pair(a1, RootVector{{-1, 0}}) == -2);

    // Non-simply-laced: alpha1 + alpha2 is short in B2 (alpha1 long), so its coroot is 2 alpha1^vee + alpha2^vee.
    RootSystem b2(CartanDatum::canonical(Series::B, 2));
    CHECK(b2.coroot(RootVector{{1, 1}}) == std::vector<int>{2, 1});
    // <beta, beta^vee> = 2 for every root of every tested type.
    for (auto s : {std::pair{Series::B, 3}, {Series::C, 3}, {Series::G, 2}, {Series::F, 4}}) {
        RootSystem rs(CartanDatum::canonical(s.first, s.second));
        for (const auto& beta : rs.positive_roots())
            CHECK(rs.pair(beta, beta) == 2);
    }
}

TEST_CASE("Weyl group orders, longest element and Poincare polynomials")
{
    for (auto [s, r] : std::vector<std::pair<Series, int>>{{Series::A, 1}, {Series::A, 2}, {Series::A, 3}, {Series::A, 4},
                                                           {Series::B, 2}, {Series::B, 3}, {Series::C, 3}, {Series::D, 4},
                                                           {Series::G, 2}, {Series::F, 4}}) {
        auto g = WeylGroup::create(s, r);
        CAPTURE(g->name());
        CHECK(g->order() == classical_weyl_order(s, r));
        auto wo = g->longest();
        CHECK(static_cast<std::size_t>(wo.length()) == g->roots().num_positive());
        CHECK(g->multiply(wo, wo).is_identity());
        std::vector<int> hist(g->max_length() + 1, 0);
        for (const auto& w : g->elements())
            ++hist[w.length()];
        CHECK(hist == poincare_coefficients(weyl_degrees(s, r)));
        CHECK(hist.back() == 1);
    }
}

TEST_CASE("enumeration examples")
{
    auto a1 = WeylGroup::create(Series::A, 1);
    CHECK(a1->order() == 2);
    CHECK(a1->longest() == a1->simple_reflection(0));

    auto a2 = WeylGroup::create(Series::A, 2);
    std::vector<int> hist(4, 0);
    for (const auto& w : a2->elements())
        ++hist[w.length()];
    CHECK(hist == std::vector<int>{1, 2, 2, 1});
    CHECK(a2->longest() == word_of(*a2, "s1 s2 s1"));
    CHECK(std::vector<std::uint8_t>(a2->longest().word().begin(), a2->longest().word().end()) ==
          std::vector<std::uint8_t>{0, 1, 0});

    auto b2 = WeylGroup::create(Series::B, 2);
    CHECK(b2->order() == 8);
    CHECK(b2->longest().length() == 4);
}

TEST_CASE("capacity limit")
{
    CHECK_THROWS_AS(WeylGroup::create(Series::E, 6), CapacityExceeded);
    CHECK_THROWS_AS(WeylGroup::create(Series::A, 3, 10), CapacityExceeded);
    CHECK_NOTHROW(WeylGroup::create(Series::A, 3, 24));
}

TEST_CASE("multiplication and inverses")
{
    auto a1 = WeylGroup::create(Series::A, 1);
    auto s = a1->simple_reflection(0);
    CHECK(a1->multiply(s, s).is_identity());

    auto a2 = WeylGroup::create(Series::A, 2);
    CHECK(a2->multiply(word_of(*a2, "s1 s2"), word_of(*a2, "s1")) == a2->longest());
    CHECK(a2->multiply(a2->longest(), word_of(*a2, "s2 s1")) == word_of(*a2, "s2"));

    auto b2 = WeylGroup::create(Series::B, 2);
    CHECK_THROWS_AS(a2->multiply(word_of(*a2, "s1"), b2->simple_reflection(0)), GroupMismatch);
    CHECK_THROWS_AS(a2->bruhat_leq(word_of(*a2, "s1"), b2->simple_reflection(0)), GroupMismatch);

    for (auto g : {a2, b2, WeylGroup::create(Series::G, 2), WeylGroup::create(Series::A, 3)}) {
        for (const auto& x : g->elements()) {
            CHECK(g->multiply(x, g->inverse(x)).length() == 0);
            CHECK(g->inverse(x).length() == x.length());
        }
    }
}

TEST_CASE("type A products agree with permutation composition")
{
    const int n = 3;
    auto g = WeylGroup::create(Series::A, n);
    for (const auto& x : g->elements()) {
        auto px = permutation_of(x.word(), n);
        CHECK(inversions(px) == x.length());
        for (const auto& y : g->elements()) {
            auto xy = g->multiply(x, y);
            std::vector<std::uint8_t> concat(x.word().begin(), x.word().end());
            concat.insert(concat.end(), y.word().begin(), y.word().end());
            CHECK(permutation_of(xy.word(), n) == permutation_of(concat, n));
        }
    }
}

TEST_CASE("length, inversion sets and canonical words")
{
    for (auto g : {WeylGroup::create(Series::A, 2), WeylGroup::create(Series::B, 2), WeylGroup::create(Series::G, 2),
                   WeylGroup::create(Series::A, 3), WeylGroup::create(Series::B, 3), WeylGroup::create(Series::C, 3)}) {
        CAPTURE(g->name());
        const auto wo = g->longest();
        for (const auto& w : g->elements()) {
            CHECK(static_cast<int>(w.word().size()) == w.length());
            CHECK(static_cast<int>(g->inversion_set(w).size()) == w.length());
            CHECK(g->multiply(wo, w).length() == wo.length() - w.length());
            auto canon = g->canonical_word_from_action(w.action());
            CHECK(std::equal(canon.begin(), canon.end(), w.word().begin(), w.word().end()));
            CHECK(g->from_action(w.action()) == w);
            for (int i = 0; i < g->rank(); ++i) {
                int d = g->right_multiply_simple(w, i).length() - w.length();
                CHECK((d == 1 || d == -1));
            }
        }
    }
}

TEST_CASE("canonical word is the lexicographically smallest reduced word")
{
    // Brute force over all words of the right length for A3.
    auto g = WeylGroup::create(Series::A, 3);
    for (const auto& w : g->elements()) {
        const int l = w.length();
        std::vector<int> best;
        std::vector<int> cur(l, 0);
        bool found = false;
        while (!found) {
            if (g->from_word(cur) == w) {
                best = cur;
                found = true;
                break;
            }
            int k = l - 1;
            while (k >= 0 && cur[k] == g->rank() - 1)
                cur[k--] = 0;
            if (k < 0)
                break;
            ++cur[k];
        }
        REQUIRE(found);
        CHECK(std::equal(best.begin(), best.end(), w.word().begin(), w.word().end()));
    }
}

TEST_CASE("Bruhat order matches the subword oracle")
{
    auto a2 = WeylGroup::create(Series::A, 2);
    CHECK(a2->bruhat_leq(word_of(*a2, "s1"), word_of(*a2, "s1 s2")));
    CHECK_FALSE(a2->bruhat_leq(word_of(*a2, "s1 s2"), word_of(*a2, "s2 s1")));

    for (auto g : {a2, WeylGroup::create(Series::B, 2), WeylGroup::create(Series::G, 2), WeylGroup::create(Series::A, 3),
                   WeylGroup::create(Series::B, 3), WeylGroup::create(Series::C, 3)}) {
        CAPTURE(g->name());
        for (const auto& w : g->elements()) {
            CHECK(g->bruhat_leq(g->identity(), w));
            auto ideal = subword_ideal(*g, w);
            for (const auto& v : g->elements())
                CHECK(g->bruhat_leq(v, w) == (ideal.count(v.index()) == 1));
        }
    }
}

TEST_CASE("reflections")
{
    auto g = WeylGroup::create(Series::B, 3);
    const auto& pos = g->roots().positive_roots();
    for (std::size_t p = 0; p < pos.size(); ++p) {
        auto r = g->reflection(p);
        CHECK(g->multiply(r, r).is_identity());
        CHECK(g->apply(r, pos[p]) == -pos[p]);
        CHECK(r.length() % 2 == 1);
        for (const auto& w : g->elements())
            CHECK(g->times_reflection(w, p) == g->multiply(w, r));
    }
}
