#include <doctest.h>

#include "schubert/richardson.hpp"
#include "test_support.hpp"

using namespace schubert;
using schubert::testing::word_of;

namespace {

struct Setup {
    std::shared_ptr<const WeylGroup> group;
    std::shared_ptr<const Cohomology> h;
    std::shared_ptr<const Csm> csm;
    Richardson rich;
    Setup(Series s, int r)
        : group(WeylGroup::create(s, r)), h(std::make_shared<Cohomology>(group)),
          csm(std::make_shared<Csm>(h)), rich(csm) {}
    WeylElement operator()(const std::string& w) const { return word_of(*group, w); }
    CohomologyClass eps(const std::string& w) const { return h->basis((*this)(w)); }
};

const std::vector<std::pair<Series, int>> kGroups = {
    {Series::A, 1}, {Series::A, 2}, {Series::B, 2}, {Series::G, 2}, {Series::A, 3}};

SparseCoeffs sparse(std::initializer_list<std::pair<std::uint32_t, Int>> t) { return SparseCoeffs(t); }

} // namespace

TEST_CASE("Richardson CSM classes in A1")
{
    Setup a1(Series::A, 1);
    auto e = a1("e"), s = a1("s");
    CHECK(a1.rich.csm_richardson(s, e) == a1.eps("e"));
    CHECK(a1.rich.csm_richardson(s, s) == a1.eps("s"));
    CHECK(a1.rich.csm_richardson(e, e) == a1.eps("s"));
    CHECK(a1.rich.csm_richardson(e, s).is_zero());
}

TEST_CASE("Richardson coefficients in the [X_w] basis")
{
    Setup a1(Series::A, 1);
    auto e = a1("e"), s = a1("s");
    auto rc = a1.rich.richardson_coeffs(s, e);
    CHECK(rc.c == sparse({{s.index(), 1}}));
    CHECK(rc.parity_ok);
    CHECK(rc.nonneg_ok);
    CHECK(a1.rich.richardson_coeffs(e, e).c == sparse({{e.index(), 1}}));
    CHECK(a1.rich.richardson_coeffs(e, s).c.empty());
}

TEST_CASE("expansion in the CSM basis")
{
    Setup a1(Series::A, 1);
    auto e = a1("e"), s = a1("s");
    for (const auto& w : a1.group->elements())
        CHECK(a1.rich.expand_in_csm_basis(a1.csm->csm_schubert_cell(w)).d == sparse({{w.index(), 1}}));
    CHECK(a1.rich.expand_in_csm_basis(a1.eps("e")).d == sparse({{e.index(), -1}, {s.index(), 1}}));
    auto d = a1.rich.richardson_csm_coeffs(s, e);
    CHECK(d.d == sparse({{e.index(), -1}, {s.index(), 1}}));
    CHECK(d.sign_ok);

    Setup b2(Series::B, 2);
    for (const auto& u : b2.group->elements())
        for (const auto& v : b2.group->elements()) {
            auto a = b2.h->basis(u) * 2 - b2.csm->csm_schubert_cell(v) + b2.h->basis(v);
            auto expansion = b2.rich.expand_in_csm_basis(a);
            CohomologyClass back(*b2.group);
            for (const auto& [w, k] : expansion.d)
                back += b2.csm->csm_schubert_cell(b2.group->element(w)) * k;
            CHECK(back == a);
        }
}

TEST_CASE("Segre-basis sign condition in A1")
{
    Setup a1(Series::A, 1);
    auto e = a1("e"), s = a1("s");
    CHECK(a1.rich.verify_lemma_e(s, e) == sparse({{e.index(), 1}, {s.index(), 2}}));
    CHECK(a1.rich.verify_lemma_e(e, e) == sparse({{s.index(), -1}}));
    CHECK(a1.rich.verify_lemma_e(e, s).empty());
}

TEST_CASE("Richardson invariants on all pairs")
{
    for (auto [s, r] : kGroups) {
        Setup x(s, r);
        const auto& g = *x.group;
        CAPTURE(g.name());
        const auto wo = g.longest();
        for (const auto& u : g.elements()) {
            CohomologyClass by_v(g);
            for (const auto& v : g.elements()) {
                CAPTURE(u.index());
                CAPTURE(v.index());
                auto cls = x.rich.csm_richardson(u, v);
                by_v += cls;
                // Euler characteristic of the open Richardson cell is delta_{u,v}.
                CHECK(x.h->integrate(cls) == (u == v ? 1 : 0));
                if (u == v)
                    CHECK(cls == x.h->basis(wo));
                if (!g.bruhat_leq(v, u))
                    CHECK(cls.is_zero());

                auto rc = x.rich.richardson_coeffs(u, v, cls);
                CHECK(rc.parity_ok);
                for (const auto& [w, c] : rc.c)
                    CHECK((g.length(w) + u.length() + v.length()) % 2 == 0);
                CHECK(coefficient_of(rc.c, g.identity().index()) == x.h->integrate(cls));
                // Nonnegativity holds in these groups.
                CHECK(rc.nonneg_ok);
                CHECK(x.rich.richardson_csm_coeffs(u, v, cls).sign_ok);
                CHECK_NOTHROW(x.rich.verify_lemma_e(u, v));
            }
            // X_u is the disjoint union of the X_u^v.
            CHECK(by_v == x.csm->csm_schubert_cell(u));
        }
    }
}

TEST_CASE("Segre-basis sign condition holds on all pairs in rank 3")
{
    for (auto [s, r] : std::vector<std::pair<Series, int>>{{Series::B, 3}, {Series::C, 3}}) {
        Setup x(s, r);
        CAPTURE(x.group->name());
        for (const auto& u : x.group->elements())
            for (const auto& v : x.group->elements())
                CHECK_NOTHROW(x.rich.verify_lemma_e(u, v));
    }
}
