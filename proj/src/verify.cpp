#include "schubert/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <ostream>
#include <thread>

#include "schubert/render.hpp"

#ifndef SCHUBERT_VERSION
#define SCHUBERT_VERSION "0.0.0"
#endif

namespace schubert {

using nlohmann::json;

std::string tool_version() { return SCHUBERT_VERSION; }

std::string_view suite_name(Suite s)
{
    switch (s) {
    case Suite::TheoremInvariants: return "theorem-invariants";
    case Suite::ConjB: return "conjB";
    case Suite::ConjC: return "conjC";
    case Suite::ConjD: return "conjD";
    case Suite::CrossPaths: return "cross-paths";
    }
    return "?";
}

std::optional<Suite> parse_suite(std::string_view name)
{
    for (auto s : all_suites())
        if (suite_name(s) == name)
            return s;
    return std::nullopt;
}

std::vector<Suite> all_suites()
{
    return {Suite::TheoremInvariants, Suite::ConjB, Suite::ConjC, Suite::ConjD, Suite::CrossPaths};
}

std::string SuiteResult::status() const
{
    if (!hard_failures.empty())
        return "FAIL";
    if (!violations.empty())
        return "VIOLATIONS";
    return "PASS";
}

int VerificationReport::exit_code() const
{
    int code = 0;
    for (const auto& s : suites) {
        const auto st = s.status();
        if (st == "FAIL")
            return 2;
        if (st == "VIOLATIONS")
            code = 1;
    }
    for (const auto& m : meta)
        if (m.status == "FAIL")
            return 2;
    return code;
}

const SuiteResult* VerificationReport::find(Suite s) const
{
    for (const auto& r : suites)
        if (r.suite == s)
            return &r;
    return nullptr;
}

std::size_t elements_up_to_length(const WeylGroup& g, std::optional<int> max_length)
{
    if (!max_length)
        return g.order();
    std::size_t k = 0;
    while (k < g.order() && g.length(static_cast<std::uint32_t>(k)) <= *max_length)
        ++k;
    return k;
}

// ---------------------------------------------------------------------------
// Engine

namespace {

void log_line(std::ostream* log, const std::string& s)
{
    if (log)
        *log << s << '\n';
}

// Loads one table from the cache, or computes and stores it. `decode` may
// throw CacheCorrupt or InternalInvariantError on a bad payload, in which
// case the table is recomputed.
template <class T, class Decode, class Compute, class Encode>
T cached_table(const TableCache* cache, const CacheKey& key, std::ostream* log, json& cache_log, Decode decode,
               Compute compute, Encode encode)
{
    if (!cache)
        return compute();
    auto entry = cache->load(key);
    const std::string stem = key.stem();
    if (entry.status == TableCache::Status::Hit) {
        try {
            T t = decode(entry.payload, entry.metadata);
            log_line(log, "cache " + stem + ": hit (crc32 " + entry.checksum + ")");
            cache_log.push_back({{"table", stem}, {"status", "hit"}, {"checksum", entry.checksum}});
            return t;
        } catch (const Error& e) {
            entry.status = TableCache::Status::Corrupt;
            entry.detail = e.what();
        }
    }
    if (entry.status != TableCache::Status::Miss)
        log_line(log, "warning: cache " + stem + " " + std::string(status_name(entry.status)) + " (" + entry.detail +
                          "); recomputing");
    T t = compute();
    auto [payload, metadata] = encode(t);
    const std::string checksum = cache->store(key, payload, metadata);
    log_line(log, "cache " + stem + ": " + std::string(status_name(entry.status)) + ", stored (crc32 " + checksum + ")");
    cache_log.push_back({{"table", stem}, {"status", status_name(entry.status)}, {"checksum", checksum}});
    return t;
}

} // namespace

Engine Engine::build(Series series, int rank, const TableCache* cache, std::ostream* log, std::size_t capacity)
{
    Engine e;
    e.group = WeylGroup::create(series, rank, capacity);
    const auto n = e.group->order();

    auto structure = cached_table<StructureTable>(
        cache, CacheKey{series, rank, "structure"}, log, e.cache_log,
        [&](const json& p, const json&) {
            auto t = structure_from_json(p);
            if (t.order() != n)
                throw CacheCorrupt("structure table has the wrong order");
            return t;
        },
        [&] { return build_structure_table(*e.group); },
        [](const StructureTable& t) { return std::pair{structure_to_json(t), json{{"nonzero", t.nonzero_count()}}}; });
    e.h = std::make_shared<const Cohomology>(e.group, std::move(structure));

    std::shared_ptr<const Csm> csm;
    cached_table<CsmTable>(
        cache, CacheKey{series, rank, "csm"}, log, e.cache_log,
        [&](const json& p, const json&) {
            auto t = csm_from_json(p);
            if (t.order() != n)
                throw CacheCorrupt("CSM table has the wrong order");
            csm = std::make_shared<const Csm>(e.h, t); // revalidates every row
            return t;
        },
        [&] {
            csm = std::make_shared<const Csm>(e.h);
            return csm->table();
        },
        [](const CsmTable& t) {
            return std::pair{csm_to_json(t), json{{"csm_convention", std::string(convention_name(t.convention()))}}};
        });
    e.csm = std::move(csm);
    e.rich = std::make_shared<const Richardson>(e.csm);
    e.box = std::make_shared<const BoxProduct>(e.rich);
    return e;
}

BoxTable Engine::box_table(const TableCache* cache, int jobs, std::ostream* log)
{
    const auto n = group->order();
    const auto& d = group->datum();
    return cached_table<BoxTable>(
        cache, CacheKey{d.series(), d.rank(), "box"}, log, cache_log,
        [&](const json& p, const json&) {
            auto t = box_from_json(p);
            if (t.order() != n)
                throw CacheCorrupt("box table has the wrong order");
            return t;
        },
        [&] { return build_box_table(*box, CrossCheckPolicy{}, jobs); },
        [](const BoxTable& t) { return std::pair{box_to_json(t), json{{"cross_checked_pairs", t.cross_checked_pairs()}}}; });
}

// ---------------------------------------------------------------------------
// Sweeps

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Counts and witnesses of one suite for one row (fixed u), merged in u order.
struct Tally {
    std::vector<CheckCount> checks;
    std::vector<Witness> violations, hard;
    std::size_t instances = 0;

    void count(const std::string& name, bool hard_check, bool ok)
    {
        auto it = std::find_if(checks.begin(), checks.end(), [&](const CheckCount& c) { return c.name == name; });
        if (it == checks.end()) {
            checks.push_back({name, 0, 0, hard_check});
            it = checks.end() - 1;
        }
        ++it->instances;
        if (!ok)
            ++it->failures;
    }

    void merge(Tally&& other)
    {
        for (const auto& c : other.checks) {
            auto it = std::find_if(checks.begin(), checks.end(), [&](const CheckCount& x) { return x.name == c.name; });
            if (it == checks.end()) {
                checks.push_back(c);
            } else {
                it->instances += c.instances;
                it->failures += c.failures;
            }
        }
        std::move(other.violations.begin(), other.violations.end(), std::back_inserter(violations));
        std::move(other.hard.begin(), other.hard.end(), std::back_inserter(hard));
        instances += other.instances;
    }
};

std::string failure_kind(const InternalInvariantError& e)
{
    if (dynamic_cast<const MirrorMismatch*>(&e))
        return "mirror";
    if (dynamic_cast<const ParityViolation*>(&e))
        return "parity";
    if (dynamic_cast<const LemmaViolation*>(&e))
        return "lemma_sign";
    if (dynamic_cast<const SingularSystem*>(&e))
        return "csm_basis_expansion";
    if (dynamic_cast<const PathDisagreement*>(&e))
        return "three_paths";
    if (dynamic_cast<const ArithmeticOverflow*>(&e))
        return "overflow";
    if (dynamic_cast<const InexactDivision*>(&e))
        return "inexact_division";
    if (dynamic_cast<const CalibrationFailure*>(&e))
        return "calibration";
    return "internal";
}

class Sweeper {
public:
    Sweeper(const Engine& e, const VerifyOptions& o)
        : e_(e), o_(o), g_(*e.group), n_(static_cast<std::uint32_t>(g_.order())),
          k_(static_cast<std::uint32_t>(elements_up_to_length(g_, o.max_length)))
    {
    }

    bool wants(Suite s) const { return std::find(o_.suites.begin(), o_.suites.end(), s) != o_.suites.end(); }
    std::uint32_t k() const { return k_; }

    std::string word(std::uint32_t i) const { return format_word(g_, i); }

    json coeffs(const SparseCoeffs& c) const
    {
        json a = json::array();
        for (const auto& [w, x] : c)
            a.push_back({{"w", word(w)}, {"value", x}});
        return a;
    }

    json dense_coeffs(const std::vector<Int>& c) const
    {
        json a = json::array();
        for (std::uint32_t w = 0; w < c.size(); ++w)
            if (c[w] != 0)
                a.push_back({{"w", word(w)}, {"value", c[w]}});
        return a;
    }

    // Runs row(u) for u < k on `jobs` threads and returns the rows in u order.
    template <class Row, class F>
    std::vector<Row> parallel_rows(F row) const
    {
        std::vector<Row> out(k_);
        std::vector<std::exception_ptr> errors(k_);
        std::atomic<std::uint32_t> next{0};
        auto worker = [&] {
            for (std::uint32_t u; (u = next++) < k_;) {
                try {
                    out[u] = row(u);
                } catch (...) {
                    errors[u] = std::current_exception();
                }
            }
        };
        const int jobs = std::max(1, o_.jobs);
        std::vector<std::thread> pool;
        for (int t = 1; t < jobs; ++t)
            pool.emplace_back(worker);
        worker();
        for (auto& t : pool)
            t.join();
        for (auto& err : errors)
            if (err)
                std::rethrow_exception(err);
        return out;
    }

    // --- Richardson pair sweep: theorem-invariants, conjB, conjC ---

    struct PairRow {
        Tally theorem, b, c;
    };

    PairRow pair_row(std::uint32_t ui) const
    {
        const auto& rich = *e_.rich;
        const auto& h = *e_.h;
        const bool th = wants(Suite::TheoremInvariants), wb = wants(Suite::ConjB), wc = wants(Suite::ConjC);
        PairRow r;
        const auto u = g_.element(ui);
        if (th) {
            auto bad = e_.csm->invariant_violation(u);
            r.theorem.count("csm_row", true, !bad);
            if (bad)
                r.theorem.hard.push_back({"csm_row", {{"u", word(ui)}, {"message", *bad}}});
        }
        for (std::uint32_t vi = 0; vi < k_; ++vi) {
            const auto v = g_.element(vi);
            if (th)
                ++r.theorem.instances;
            if (wb)
                ++r.b.instances;
            if (wc)
                ++r.c.instances;
            try {
                auto cls = rich.csm_richardson(u, v);
                if (th)
                    r.theorem.count("mirror", true, true);
#ifdef SCHUBERT_INJECT_FAULT
                // Test hook: an odd-degree term on the open cell.
                if (ui == n_ - 1 && vi == 0)
                    cls.add_term(1, 1);
#endif
                auto rc = rich.richardson_coeffs(u, v, cls);
                if (th) {
                    r.theorem.count("parity", true, true);
                    r.theorem.count("empty_cell", true, true);
                    const Int chi = h.integrate(cls);
                    const bool euler = chi == (ui == vi ? 1 : 0);
                    r.theorem.count("euler_characteristic", true, euler);
                    if (!euler)
                        r.theorem.hard.push_back(
                            {"euler_characteristic", {{"u", word(ui)}, {"v", word(vi)}, {"chi", chi}}});
                    if (ui == vi) {
                        const bool point = cls == h.basis(g_.longest());
                        r.theorem.count("diagonal_point_class", true, point);
                        if (!point)
                            r.theorem.hard.push_back(
                                {"diagonal_point_class",
                                 {{"u", word(ui)}, {"class", dense_coeffs(cls.dense())}}});
                    }
                    rich.verify_lemma_e(u, v);
                    r.theorem.count("lemma_sign", true, true);
                }
                if (wb && !rc.nonneg_ok)
                    r.b.violations.push_back(
                        {"nonnegativity", {{"u", word(ui)}, {"v", word(vi)}, {"coefficients", coeffs(rc.c)}}});
                if (wb)
                    r.b.count("nonnegativity", false, rc.nonneg_ok);
                if (wc) {
                    auto d = rich.richardson_csm_coeffs(u, v, cls);
                    r.c.count("csm_basis_sign", false, d.sign_ok);
                    if (!d.sign_ok)
                        r.c.violations.push_back(
                            {"csm_basis_sign", {{"u", word(ui)}, {"v", word(vi)}, {"coefficients", coeffs(d.d)}}});
                }
            } catch (const InternalInvariantError& err) {
                // The pair's conjecture verdicts are meaningless too; every
                // requested suite records the failure.
                const auto kind = failure_kind(err);
                for (auto [on, t] : {std::pair{th, &r.theorem}, std::pair{wb, &r.b}, std::pair{wc, &r.c}})
                    if (on) {
                        t->count(kind, true, false);
                        t->hard.push_back({kind, {{"u", word(ui)}, {"v", word(vi)}, {"message", err.what()}}});
                    }
            }
        }
        return r;
    }

    // --- chi sweep: conjD, cross-paths ---

    struct ChiRowResult {
        Tally d, x;
        std::vector<ChiRow> rows; // kept only for the associativity pass
    };

    ChiRowResult chi_row(std::uint32_t ui, bool keep_rows) const
    {
        const auto& box = *e_.box;
        const auto& st = e_.h->table();
        const bool wd = wants(Suite::ConjD), wx = wants(Suite::CrossPaths);
        ChiRowResult r;
        const auto u = g_.element(ui);
        for (std::uint32_t vi = 0; vi < k_; ++vi) {
            const auto v = g_.element(vi);
            const bool full = wx && o_.cross_check.selects(n_, ui, vi);
            try {
                ChiRow row = full ? box.chi_row(u, v) : box.chi_row_richardson_only(u, v);
                if (full) {
                    r.x.instances += n_;
                    json bad = json::array();
                    for (std::uint32_t w = 0; w < n_; ++w) {
                        const bool ok = row.triple_sum[w] == row.pairing[w] && row.pairing[w] == row.richardson[w];
                        r.x.count("three_paths", true, ok);
                        if (!ok)
                            bad.push_back({{"w", word(w)},
                                           {"triple_sum", row.triple_sum[w]},
                                           {"pairing", row.pairing[w]},
                                           {"richardson", row.richardson[w]}});
                    }
                    if (!bad.empty())
                        r.x.hard.push_back({"three_paths", {{"u", word(ui)}, {"v", word(vi)}, {"values", bad}}});
                }
                if (wd) {
                    const int threshold = g_.length(ui) + g_.length(vi);
                    bool d_ok = true;
                    for (std::uint32_t w = 0; w < n_; ++w) {
                        ++r.d.instances;
                        const Int chi = row.richardson[w];
                        const bool sign = sign_of_parity(g_.length(w) - threshold) * chi >= 0;
                        d_ok = d_ok && sign;
                        r.d.count("chi_sign", false, sign);
                        if (!sign)
                            r.d.violations.push_back(
                                {"chi_sign", {{"u", word(ui)}, {"v", word(vi)}, {"w", word(w)}, {"chi", chi}}});
                        if (g_.length(w) < threshold) {
                            r.d.count("below_threshold_zero", false, chi == 0);
                            if (chi != 0)
                                r.d.violations.push_back({"below_threshold_zero",
                                                          {{"u", word(ui)}, {"v", word(vi)}, {"w", word(w)}, {"chi", chi}}});
                        } else if (g_.length(w) == threshold) {
                            const Int cup = st.constant(ui, vi, w);
                            r.d.count("graded_equals_cup", true, chi == cup);
                            if (chi != cup)
                                r.d.hard.push_back({"graded_equals_cup",
                                                    {{"u", word(ui)}, {"v", word(vi)}, {"w", word(w)}, {"chi", chi},
                                                     {"cup", cup}}});
                        }
                    }
                    const bool equiv = d_ok == row.richardson_sign_ok;
                    r.d.count("chi_sign_matches_csm_basis_sign", true, equiv);
                    if (!equiv)
                        r.d.hard.push_back({"chi_sign_matches_csm_basis_sign",
                                            {{"u", word(ui)},
                                             {"v", word(vi)},
                                             {"chi_signs_ok", d_ok},
                                             {"csm_basis_signs_ok", row.richardson_sign_ok}}});
                }
                if (keep_rows)
                    r.rows.push_back(std::move(row));
            } catch (const InternalInvariantError& err) {
                const auto kind = failure_kind(err);
                for (auto [on, t] : {std::pair{wd, &r.d}, std::pair{wx, &r.x}})
                    if (on) {
                        t->count(kind, true, false);
                        t->hard.push_back({kind, {{"u", word(ui)}, {"v", word(vi)}, {"message", err.what()}}});
                    }
                if (keep_rows)
                    r.rows.emplace_back();
            }
        }
        return r;
    }

    // --- group-level identities (theorem-invariants) ---

    void group_checks(Tally& t) const
    {
        const auto& h = *e_.h;
        const auto& csm = *e_.csm;
        CohomologyClass total(g_);
        for (std::uint32_t u = 0; u < n_; ++u)
            total += csm.csm_schubert_cell(g_.element(u));
        const bool complete = total == csm.tangent_chern();
        t.count("completeness", true, complete);
        if (!complete)
            t.hard.push_back({"completeness",
                              {{"sum_of_cells", dense_coeffs(total.dense())},
                               {"tangent_chern", dense_coeffs(csm.tangent_chern().dense())}}});
        const Int euler = h.integrate(csm.tangent_chern());
        const bool order_ok = euler == static_cast<Int>(n_);
        t.count("euler_characteristic_of_flag_variety", true, order_ok);
        if (!order_ok)
            t.hard.push_back({"euler_characteristic_of_flag_variety", {{"integral", euler}, {"order", n_}}});

        // T_i^2 = id and the braid relations on every basis vector.
        const int rank = g_.rank();
        for (std::uint32_t x = 0; x < n_; ++x) {
            const auto b = h.basis(g_.element(x));
            for (int i = 0; i < rank; ++i) {
                const bool ok = csm.dl_operator(i, csm.dl_operator(i, b)) == b;
                t.count("operator_square", true, ok);
                if (!ok)
                    t.hard.push_back({"operator_square", {{"i", i + 1}, {"basis", word(x)}}});
            }
            for (int i = 0; i < rank; ++i)
                for (int j = i + 1; j < rank; ++j) {
                    const int prod = g_.datum()(i, j) * g_.datum()(j, i);
                    const int m = prod == 0 ? 2 : prod == 1 ? 3 : prod == 2 ? 4 : 6;
                    CohomologyClass left = b, right = b;
                    for (int k = 0; k < m; ++k) {
                        left = csm.dl_operator(k % 2 == 0 ? i : j, left);
                        right = csm.dl_operator(k % 2 == 0 ? j : i, right);
                    }
                    const bool ok = left == right;
                    t.count("operator_braid", true, ok);
                    if (!ok)
                        t.hard.push_back({"operator_braid", {{"i", i + 1}, {"j", j + 1}, {"basis", word(x)}}});
                }
        }
    }

private:
    const Engine& e_;
    const VerifyOptions& o_;
    const WeylGroup& g_;
    std::uint32_t n_, k_;
};

SuiteResult to_result(Suite s, Tally&& t, std::size_t predicted, double ms)
{
    SuiteResult r;
    r.suite = s;
    r.instances_checked = t.instances;
    r.predicted_instances = predicted;
    r.checks = std::move(t.checks);
    r.violations = std::move(t.violations);
    r.hard_failures = std::move(t.hard);
    r.elapsed_ms = ms;
    return r;
}

MetaCheck implication(const VerificationReport& rep, Suite premise, Suite conclusion, const std::string& name)
{
    MetaCheck m{name, "NOT_APPLICABLE", ""};
    const auto* p = rep.find(premise);
    const auto* c = rep.find(conclusion);
    if (!p || !c) {
        m.detail = "both suites must run";
    } else if (rep.max_length) {
        m.detail = "partial sweep (--max-length)";
    } else if (p->status() != "PASS") {
        m.detail = std::string(suite_name(premise)) + " did not pass";
    } else if (c->status() == "PASS") {
        m.status = "PASS";
        m.detail = std::string(suite_name(premise)) + " and " + std::string(suite_name(conclusion)) + " both pass";
    } else {
        m.status = "FAIL";
        m.detail = std::string(suite_name(premise)) + " passes but " + std::string(suite_name(conclusion)) + " does not";
    }
    return m;
}

} // namespace

VerificationReport run_verification(const VerifyOptions& options, std::ostream* log)
{
    auto engine = Engine::build(options.series, options.rank, options.cache, log, options.capacity);
    return run_verification(engine, options, log);
}

VerificationReport run_verification(const Engine& engine, const VerifyOptions& options, std::ostream* log)
{
    const auto t0 = Clock::now();
    const auto& g = *engine.group;
    Sweeper sw(engine, options);
    const std::size_t k = sw.k(), n = g.order();

    VerificationReport rep;
    rep.tool_version = tool_version();
    rep.series = g.datum().series();
    rep.rank = g.rank();
    rep.order = n;
    rep.max_length = options.max_length;
    rep.csm_convention = std::string(convention_name(engine.csm->convention()));

    const bool th = sw.wants(Suite::TheoremInvariants), wb = sw.wants(Suite::ConjB), wc = sw.wants(Suite::ConjC),
               wd = sw.wants(Suite::ConjD), wx = sw.wants(Suite::CrossPaths);

    std::vector<SuiteResult> results;
    if (th || wb || wc) {
        const auto t1 = Clock::now();
        log_line(log, "sweeping " + std::to_string(k * k) + " Richardson pairs in " + g.name());
        auto rows = sw.parallel_rows<Sweeper::PairRow>([&](std::uint32_t u) { return sw.pair_row(u); });
        Tally t, b, c;
        for (auto& r : rows) {
            t.merge(std::move(r.theorem));
            b.merge(std::move(r.b));
            c.merge(std::move(r.c));
        }
        if (th)
            sw.group_checks(t);
        const double ms = ms_since(t1);
        if (th)
            results.push_back(to_result(Suite::TheoremInvariants, std::move(t), k * k, ms));
        if (wb)
            results.push_back(to_result(Suite::ConjB, std::move(b), k * k, ms));
        if (wc)
            results.push_back(to_result(Suite::ConjC, std::move(c), k * k, ms));
    }
    if (wd || wx) {
        const auto t1 = Clock::now();
        const bool assoc = wd && !options.max_length && n <= 48;
        log_line(log, "sweeping " + std::to_string(k * k * n) + " chi triples in " + g.name());
        auto rows = sw.parallel_rows<Sweeper::ChiRowResult>([&](std::uint32_t u) { return sw.chi_row(u, assoc); });
        Tally d, x;
        BoxTable table(assoc ? n : 0);
        for (std::uint32_t u = 0; u < rows.size(); ++u) {
            d.merge(std::move(rows[u].d));
            x.merge(std::move(rows[u].x));
            for (std::uint32_t v = 0; v < rows[u].rows.size(); ++v)
                if (!rows[u].rows[v].richardson.empty())
                    table.set_row(u, v, rows[u].rows[v], false);
        }
        const double ms = ms_since(t1);
        std::size_t sampled = 0;
        for (std::uint32_t u = 0; u < k; ++u)
            for (std::uint32_t v = 0; v < k; ++v)
                sampled += options.cross_check.selects(n, u, v) ? 1 : 0;
        if (wd) {
            auto r = to_result(Suite::ConjD, std::move(d), k * k * n, ms);
            if (assoc && r.hard_failures.empty()) {
                auto a = check_associativity(g, table);
                json wit = json::array();
                for (const auto& tr : a.witnesses)
                    wit.push_back({{"a", format_word(g, tr.u)},
                                   {"b", format_word(g, tr.v)},
                                   {"c", format_word(g, tr.w)},
                                   {"first_differing_w", format_word(g, static_cast<std::uint32_t>(tr.value))}});
                r.notes["associativity"] = {{"tested", true},
                                            {"triples", a.triples},
                                            {"failures", a.failures},
                                            {"witnesses", wit}};
            } else {
                r.notes["associativity"] = {{"tested", false}};
            }
            results.push_back(std::move(r));
        }
        if (wx) {
            auto r = to_result(Suite::CrossPaths, std::move(x), sampled * n, ms);
            r.notes["pairs_cross_checked"] = sampled;
            r.notes["pairs_total"] = k * k;
            results.push_back(std::move(r));
        }
    }
    // Report suites in the canonical order regardless of how they were requested.
    for (auto s : all_suites())
        for (auto& r : results)
            if (r.suite == s)
                rep.suites.push_back(std::move(r));

    rep.meta.push_back(implication(rep, Suite::ConjB, Suite::ConjC, "conjB_implies_conjC"));
    rep.meta.push_back(implication(rep, Suite::ConjB, Suite::ConjD, "conjB_implies_conjD"));
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

} // namespace schubert
