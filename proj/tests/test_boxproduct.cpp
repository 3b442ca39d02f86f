#include <doctest.h>

#include "schubert/boxproduct.hpp"
#include "test_support.hpp"

using namespace schubert;
using schubert::testing::word_of;

namespace {

struct Setup {
    std::shared_ptr<const WeylGroup> group;
    std::shared_ptr<const Cohomology> h;
    std::shared_ptr<const Csm> csm;
    std::shared_ptr<const Richardson> rich;
    BoxProduct box;
    Setup(Series s, int r)
        : group(WeylGroup::create(s, r)), h(std::make_shared<Cohomology>(group)),
          csm(std::make_shared<Csm>(h)), rich(std::make_shared<Richardson>(csm)), box(rich) {}
    WeylElement operator()(const std::string& w) const { return word_of(*group, w); }
    CohomologyClass eps(const std::string& w) const { return h->basis((*this)(w)); }
};

// The triple-sum formula evaluated literally, term by term.
Int literal_triple_sum(const Setup& x, const WeylElement& u, const WeylElement& v, const WeylElement& w)
{
    const auto& g = *x.group;
    const auto wo = g.longest();
    const auto& t = x.csm->table();
    const auto wou = g.multiply(wo, u).index(), wov = g.multiply(wo, v).index();
    Int sum = 0;
    for (const auto& u1 : g.elements())
        for (const auto& v1 : g.elements())
            for (const auto& w1 : g.elements()) {
                if (u1.length() + v1.length() + w1.length() != wo.length())
                    continue;
                const Int a = t.a(wou, u1.index()) * t.a(wov, v1.index()) * t.a(w.index(), w1.index());
                if (a == 0)
                    continue;
                sum += sign_of_parity(u.length() - u1.length()) * a * x.h->triple_integral(u1, v1, w1);
            }
    return sign_of_parity(w.length() - u.length() - v.length()) * sum;
}

} // namespace

TEST_CASE("chi paths on the SL2 examples")
{
    Setup a1(Series::A, 1);
    auto e = a1("e"), s = a1("s");
    CHECK(a1.box.chi_via_triple_sum(e, e, e) == 1);
    CHECK(a1.box.chi_via_triple_sum(e, e, s) == -1);
    CHECK(a1.box.chi_via_triple_sum(s, e, s) == 1);

    CHECK(a1.box.chi_via_pairing(e, e, s) == -1);
    CHECK(a1.box.chi_via_pairing(e, e, e) == 1);
    CHECK(a1.box.chi_via_pairing(e, s, s) == 1);

    CHECK(a1.box.chi_via_richardson(e, e, s) == -1);
    CHECK(a1.box.chi_via_richardson(e, e, e) == 1);
    CHECK(a1.box.chi_via_richardson(s, e, s) == 1);
}

TEST_CASE("box product in SL2")
{
    Setup a1(Series::A, 1);
    auto e = a1("e"), s = a1("s");
    CHECK(a1.box.box_product(e, e) == a1.eps("e") - a1.eps("s"));
    CHECK(a1.box.box_product(e, s) == a1.eps("s"));
    CHECK(a1.box.box_product(s, s).is_zero());
    CHECK(a1.box.box_product(a1.eps("e") * 2, a1.eps("e") + a1.eps("s")) ==
          2 * (a1.eps("e") - a1.eps("s")) + 2 * a1.eps("s"));
}

TEST_CASE("box product leading term is the cup product")
{
    Setup a2(Series::A, 2);
    auto p = a2.box.box_product(a2("s1"), a2("s1"));
    CHECK(p.coefficient(a2("s2 s1")) == 1);
    for (const auto& u : a2.group->elements())
        for (const auto& v : a2.group->elements()) {
            auto box = a2.box.box_product(u, v);
            auto cup = a2.h->cup(a2.h->basis(u), a2.h->basis(v));
            CHECK(box.graded_component(u.length() + v.length()) == cup);
            CHECK(box.min_length() >= (cup.is_zero() ? -1 : u.length() + v.length()));
        }
}

TEST_CASE("literal triple sum and pairing agree with the table in A2")
{
    Setup a2(Series::A, 2);
    auto table = build_box_table(a2.box);
    for (const auto& u : a2.group->elements())
        for (const auto& v : a2.group->elements())
            for (const auto& w : a2.group->elements()) {
                const Int chi = table.chi(u.index(), v.index(), w.index());
                CHECK(literal_triple_sum(a2, u, v, w) == chi);
                CHECK(a2.box.chi_via_pairing(u, v, w) == chi);
            }
}

TEST_CASE("three chi paths agree and the sign conditions hold")
{
    for (auto [s, r] : std::vector<std::pair<Series, int>>{
             {Series::A, 1}, {Series::A, 2}, {Series::B, 2}, {Series::G, 2}, {Series::A, 3}}) {
        Setup x(s, r);
        const auto& g = *x.group;
        CAPTURE(g.name());
        BoxTable table;
        REQUIRE_NOTHROW(table = build_box_table(x.box));
        const std::size_t n = g.order();
        CHECK(table.cross_checked_pairs() == n * n);
        for (std::uint32_t u = 0; u < n; ++u)
            for (std::uint32_t v = 0; v < n; ++v)
                for (std::uint32_t w = 0; w < n; ++w) {
                    CHECK(table.triple_sum_value(u, v, w) == table.chi(u, v, w));
                    CHECK(table.pairing_value(u, v, w) == table.chi(u, v, w));
                }
        auto f = verify_box_conjectures(x.box, table, n <= 24 ? 24 : 0);
        CHECK(f.triples_checked == n * n * n);
        CHECK(f.conj_d_violations.empty());
        CHECK(f.below_threshold.empty());
        CHECK(f.gr_mismatches.empty());
        CHECK(f.sign_equivalence_mismatches.empty());
        if (n <= 24) {
            CHECK(f.associativity_tested);
            CHECK(f.associativity_triples == n * n * n);
        }
    }
}

TEST_CASE("parallel table construction matches the serial one")
{
    Setup b2(Series::B, 2);
    auto serial = build_box_table(b2.box, {}, 1);
    CHECK(build_box_table(b2.box, {}, 3) == serial);
    CHECK(build_box_table(b2.box, {}, 16) == serial);

    // Sampled cross-checking keeps the canonical values.
    CrossCheckPolicy sampled{4, 10};
    auto partial = build_box_table(b2.box, sampled, 2);
    CHECK(partial.cross_checked_pairs() < serial.cross_checked_pairs());
    CHECK(partial.cross_checked_pairs() >= 10);
    CHECK(partial.chi_entries() == serial.chi_entries());
}
