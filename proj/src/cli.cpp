#include "schubert/cli.hpp"

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "schubert/render.hpp"
#include "schubert/report.hpp"

namespace schubert {

namespace {

struct GroupArgs {
    std::string type;
    int rank = 0;
    std::string cache_dir;
    bool no_cache = false;
    int jobs = 1;
};

void add_group_options(CLI::App* cmd, GroupArgs& g)
{
    cmd->add_option("--type", g.type, "Cartan type A..G")->required();
    cmd->add_option("--rank", g.rank, "rank")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--cache-dir", g.cache_dir, "table cache directory (default: $CSMVERIFY_CACHE, then XDG)");
    cmd->add_flag("--no-cache", g.no_cache, "neither read nor write cached tables");
    cmd->add_option("--jobs", g.jobs, "worker threads")->check(CLI::PositiveNumber);
}

struct UsageError : Error {
    using Error::Error;
};

std::optional<TableCache> open_cache(const GroupArgs& g)
{
    if (g.no_cache)
        return std::nullopt;
    return TableCache(resolve_cache_dir(g.cache_dir.empty() ? std::nullopt : std::optional(g.cache_dir)));
}

int cmd_verify(const GroupArgs& g, const std::vector<std::string>& suites, std::optional<int> max_length,
               const std::string& output, const std::string& format, std::ostream& out, std::ostream& err)
{
    VerifyOptions o;
    o.series = parse_series(g.type);
    o.rank = g.rank;
    o.jobs = g.jobs;
    o.max_length = max_length;
    o.suites.clear();
    for (const auto& s : suites) {
        if (s == "all") {
            o.suites = all_suites();
            break;
        }
        auto p = parse_suite(s);
        if (!p)
            throw UsageError("unknown suite \"" + s +
                             "\" (expected theorem-invariants, conjB, conjC, conjD, cross-paths or all)");
        if (std::find(o.suites.begin(), o.suites.end(), *p) == o.suites.end())
            o.suites.push_back(*p);
    }
    if (o.suites.empty())
        o.suites = all_suites();
    auto cache = open_cache(g);
    o.cache = cache ? &*cache : nullptr;

    auto report = run_verification(o, &err);
    const auto text = render_report(report, format == "csv" ? ReportFormat::Csv : ReportFormat::Json);
    if (output.empty() || output == "-") {
        out << text;
    } else {
        std::ofstream f(output, std::ios::binary | std::ios::trunc);
        f << text;
        if (!f)
            throw UsageError("cannot write " + output);
    }
    err << report_summary(report);
    return report.exit_code();
}

int cmd_table(const GroupArgs& g, bool with_box, std::ostream& out, std::ostream& err)
{
    auto cache = open_cache(g);
    if (!cache)
        throw UsageError("table needs a cache (drop --no-cache)");
    auto engine = Engine::build(parse_series(g.type), g.rank, &*cache, &err);
    if (with_box)
        engine.box_table(&*cache, g.jobs, &err);
    out << "cache directory: " << cache->dir().string() << '\n';
    out << "group " << engine.group->name() << ", order " << engine.group->order() << ", csm convention "
        << convention_name(engine.csm->convention()) << '\n';
    for (const auto& e : engine.cache_log)
        out << e["table"].get<std::string>() << ": " << e["status"].get<std::string>() << " crc32 "
            << e["checksum"].get<std::string>() << '\n';
    return kExitPass;
}

int cmd_show(const std::string& what, const GroupArgs& g, const std::string& u_text, const std::string& v_text,
             bool opposite, bool segre, std::ostream& out, std::ostream& err)
{
    auto cache = open_cache(g);
    auto engine = Engine::build(parse_series(g.type), g.rank, cache ? &*cache : nullptr, nullptr);
    const auto& grp = *engine.group;
    if (u_text.empty())
        throw UsageError("show " + what + " needs --u");
    const auto u = parse_word(grp, u_text);
    auto print = [&](const CohomologyClass& c) {
        out << format_class(c, ClassBasis::Epsilon) << '\n';
        out << "= " << format_class(c, ClassBasis::X) << '\n';
    };
    if (what == "csm") {
        if (!v_text.empty())
            throw UsageError("show csm takes only --u");
        if (opposite)
            print(segre ? engine.csm->segre_opposite_cell(u) : engine.csm->csm_opposite_cell(u));
        else
            print(segre ? engine.csm->segre_schubert_cell(u) : engine.csm->csm_schubert_cell(u));
        return kExitPass;
    }
    if (v_text.empty())
        throw UsageError("show " + what + " needs --v");
    const auto v = parse_word(grp, v_text);
    if (what == "richardson") {
        auto cls = segre ? engine.rich->segre_richardson(u, v) : engine.rich->csm_richardson(u, v);
        print(cls);
        if (!segre) {
            engine.rich->richardson_coeffs(u, v, cls); // parity check
            auto d = engine.rich->richardson_csm_coeffs(u, v, cls);
            out << "in c_SM(X_w) basis: " << format_combination(grp, d.d, "c_SM(X_", ")") << '\n';
        }
        return kExitPass;
    }
    // box
    print(engine.box->box_product(u, v));
    (void)err;
    return kExitPass;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact CSM classes, Richardson coefficients and the box product on G/B", "csmverify"};
    app.require_subcommand(1);
    app.set_version_flag("--version", tool_version());

    GroupArgs verify_g, table_g, show_g;
    std::vector<std::string> suites{"all"};
    std::optional<int> max_length;
    std::string output, format = "json";
    auto* verify = app.add_subcommand("verify", "run verification suites and write a report");
    add_group_options(verify, verify_g);
    verify->add_option("--suite", suites, "theorem-invariants | conjB | conjC | conjD | cross-paths | all")
        ->delimiter(',');
    verify->add_option("--max-length", max_length, "restrict u, v to length <= L")->check(CLI::NonNegativeNumber);
    verify->add_option("--output", output, "report path (default: stdout)");
    verify->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

    bool with_box = false;
    auto* table = app.add_subcommand("table", "compute and cache the structure, CSM (and box) tables");
    add_group_options(table, table_g);
    table->add_flag("--box", with_box, "also cache the box-product table");

    auto* show = app.add_subcommand("show", "print one class");
    show->require_subcommand(1);
    std::string u_text, v_text;
    bool opposite = false, segre = false;
    std::string shown;
    for (const char* what : {"csm", "richardson", "box"}) {
        auto* s = show->add_subcommand(what);
        add_group_options(s, show_g);
        s->add_option("--u", u_text, "element, e.g. \"s1 s2\" or e")->required();
        if (std::string(what) != "csm")
            s->add_option("--v", v_text, "element")->required();
        if (std::string(what) != "box")
            s->add_flag("--segre", segre, "Segre-SM class instead of CSM");
        if (std::string(what) == "csm")
            s->add_flag("--opposite", opposite, "opposite cell");
        s->callback([&shown, what] { shown = what; });
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (verify->parsed())
            return cmd_verify(verify_g, suites, max_length, output, format, out, err);
        if (table->parsed())
            return cmd_table(table_g, with_box, out, err);
        return cmd_show(shown, show_g, u_text, v_text, opposite, segre, out, err);
    } catch (const InternalInvariantError& e) {
        err << "internal invariant failure: " << e.what() << '\n';
        return kExitInternal;
    } catch (const Error& e) {
        // Bad series, rank, word, or a group over the capacity limit.
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err)
{
    return run_cli(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

} // namespace schubert
