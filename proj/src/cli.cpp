#include "parkfn/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "parkfn/abel.hpp"
#include "parkfn/asymptotics.hpp"
#include "parkfn/core.hpp"
#include "parkfn/counting.hpp"
#include "parkfn/errors.hpp"
#include "parkfn/goncarov.hpp"
#include "parkfn/multishuffle.hpp"
#include "parkfn/sampler.hpp"

namespace parkfn::cli {

std::string format_real(double x)
{
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

namespace {

constexpr int kSchemaVersion = 1;

struct Cell {
    enum class Kind { Text, Integer, Real };
    Kind kind = Kind::Text;
    std::string text;
    double real = 0.0;

    static Cell str(std::string s) { return {Kind::Text, std::move(s), 0.0}; }
    static Cell integer(const BigInt& z) { return {Kind::Integer, to_string(z), 0.0}; }
    static Cell integer(std::int64_t z) { return {Kind::Integer, std::to_string(z), 0.0}; }
    static Cell number(double x) { return {Kind::Real, format_real(x), x}; }
};

struct Table {
    std::string command;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

std::string render_csv(const Table& t)
{
    std::string out;
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        out += (i ? "," : "") + t.columns[i];
    }
    out += '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out += (i ? "," : "") + row[i].text;
        }
        out += '\n';
    }
    return out;
}

std::string render_json(const Table& t)
{
    nlohmann::ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = t.command;
    doc["columns"] = t.columns;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        auto r = nlohmann::ordered_json::array();
        for (const auto& cell : row) {
            switch (cell.kind) {
            case Cell::Kind::Real:
                r.push_back(cell.real);
                break;
            case Cell::Kind::Integer: {
                // exact decimal string when it does not fit in 64 bits
                std::int64_t v = 0;
                auto [p, ec] = std::from_chars(cell.text.data(), cell.text.data() + cell.text.size(), v);
                if (ec == std::errc() && p == cell.text.data() + cell.text.size()) {
                    r.push_back(v);
                } else {
                    r.push_back(cell.text);
                }
                break;
            }
            case Cell::Kind::Text:
                r.push_back(cell.text);
                break;
            }
        }
        rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

std::string join(std::span<const Value> xs, char sep = ' ')
{
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) {
            s += sep;
        }
        s += std::to_string(xs[i]);
    }
    return s;
}

std::string join_indices(std::span<const std::size_t> xs)
{
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        s += (i ? " " : "") + std::to_string(xs[i]);
    }
    return s;
}

std::vector<Value> parse_list(const std::string& text, const char* what)
{
    std::vector<Value> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        Value v = 0;
        auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (ec != std::errc() || p != item.data() + item.size()) {
            throw UsageError(std::string("malformed ") + what + " entry '" + item + "'");
        }
        out.push_back(v);
    }
    return out;
}

struct Config {
    std::string u;
    std::optional<std::int64_t> a;
    std::optional<std::int64_t> b;
    std::optional<std::string> c;
    std::optional<std::int64_t> m;
    std::uint64_t seed = 0;
    std::uint64_t n = 0;
    std::string out;
    std::string format = "csv";
    std::string pi;
    std::string suffix;
    std::string v;
    std::string stat = "pi1";
    unsigned threads = 1;
};

struct Problem {
    std::optional<UVector> u;
    std::optional<ABParams> ab;
};

Problem resolve(const Config& cfg)
{
    const bool has_u = !cfg.u.empty();
    const bool has_ab = cfg.a.has_value();
    const bool has_bc = cfg.c.has_value();
    if (has_u + has_ab + has_bc != 1) {
        throw UsageError("give exactly one of --u, (--a --b --m) or (--b --c --m)");
    }
    Problem p;
    if (has_u) {
        if (cfg.b || cfg.m) {
            throw UsageError("--u cannot be combined with --b/--m");
        }
        p.u = UVector(parse_list(cfg.u, "--u"));
        return p;
    }
    if (!cfg.b || !cfg.m) {
        throw UsageError("--b and --m are required with --a or --c");
    }
    p.ab = has_ab ? ABParams(*cfg.a, *cfg.b, *cfg.m)
                  : ABParams::from_regime(*cfg.b, parse_rational(*cfg.c), *cfg.m);
    p.u = p.ab->thresholds();
    return p;
}

ABParams require_ab(const Problem& p, const char* command)
{
    if (!p.ab) {
        throw UsageError(std::string(command) + " needs arithmetic thresholds (--a/--c with --b --m)");
    }
    return *p.ab;
}

Regime require_regime(const Config& cfg, const Problem& p, const char* command)
{
    if (!cfg.c || !p.ab) {
        throw UsageError(std::string(command) + " needs a regime: --b --c --m");
    }
    return Regime(p.ab->b, to_double(*p.ab->c), p.ab->m);
}

std::uint64_t enumeration_budget()
{
    if (const char* env = std::getenv("PARKFN_BUDGET")) {
        std::uint64_t v = 0;
        std::string_view s(env);
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || p != s.data() + s.size()) {
            throw UsageError("PARKFN_BUDGET must be a nonnegative integer");
        }
        return v;
    }
    return kDefaultEnumerationBudget;
}

std::vector<std::string> pi_columns(std::int64_t m)
{
    std::vector<std::string> cols;
    for (std::int64_t i = 1; i <= m; ++i) {
        cols.push_back("pi_" + std::to_string(i));
    }
    return cols;
}

std::vector<Cell> pi_row(const PreferenceVector& pi)
{
    std::vector<Cell> row;
    for (auto v : pi.values()) {
        row.push_back(Cell::integer(v));
    }
    return row;
}

Table cmd_count(const Config& cfg)
{
    auto p = resolve(cfg);
    const auto& u = *p.u;
    Table t{"count", {"method", "count"}, {}};
    BigInt g = count_pf(u);
    t.add({Cell::str("goncarov"), Cell::integer(g)});
    BigInt c = count_pf_composition(u);
    t.add({Cell::str("composition"), Cell::integer(c)});
    std::vector<BigInt> all{g, c};
    if (p.ab) {
        BigInt ab = count_pf_ab(*p.ab);
        t.add({Cell::str("abel_closed_form"), Cell::integer(ab)});
        all.push_back(ab);
    }
    if (enumeration_candidates(u) <= enumeration_budget()) {
        PfEnumerator e(u, enumeration_budget());
        std::int64_t n = 0;
        for (auto it = e.begin(); it != e.end(); ++it) {
            ++n;
        }
        t.add({Cell::str("enumeration"), Cell::integer(n)});
        all.emplace_back(static_cast<long>(n));
    }
    for (const auto& x : all) {
        if (x != all.front()) {
            throw ArithmeticError("count routes disagree");
        }
    }
    return t;
}

Table cmd_enumerate(const Config& cfg)
{
    auto p = resolve(cfg);
    Table t{"enumerate", pi_columns(static_cast<std::int64_t>(p.u->size())), {}};
    PfEnumerator e(*p.u, enumeration_budget());
    for (const auto& pi : e) {
        t.add(pi_row(pi));
    }
    return t;
}

Table cmd_check(const Config& cfg)
{
    auto p = resolve(cfg);
    PreferenceVector pi(parse_list(cfg.pi, "--pi"));
    auto outcome = park(*p.u, pi);
    const bool valid = check_u_parking(*p.u, pi);
    if (valid != outcome.success) {
        throw ArithmeticError("street simulation disagrees with the sorted criterion");
    }
    Table t{"check", {"field", "value"}, {}};
    t.add({Cell::str("valid"), Cell::str(valid ? "true" : "false")});
    t.add({Cell::str("spots"), Cell::str(join(outcome.spots))});
    t.add({Cell::str("empty_positions"), Cell::str(join(outcome.empty_positions))});
    if (p.ab && valid) {
        t.add({Cell::str("displacement"), Cell::integer(displacement(*p.ab, pi))});
    }
    return t;
}

Table cmd_decompose(const Config& cfg)
{
    auto p = resolve(cfg);
    const auto& u = *p.u;
    auto suffix = parse_list(cfg.suffix, "--suffix");
    Table t{"decompose", {"field", "value"}, {}};
    std::vector<Value> v;
    if (cfg.v.empty()) {
        auto mv = maximal_v(u, suffix);
        if (!mv) {
            t.add({Cell::str("compatible"), Cell::str("false")});
            return t;
        }
        v = mv->v;
    } else {
        v = parse_list(cfg.v, "--v");
    }
    auto d = decompose(u, v, suffix);
    t.add({Cell::str("compatible"), Cell::str("true")});
    t.add({Cell::str("v"), Cell::str(join(d.v))});
    t.add({Cell::str("k"), Cell::str(join_indices(d.k))});
    for (std::size_t j = 0; j < d.components.size(); ++j) {
        t.add({Cell::str("alpha_" + std::to_string(j + 1)), Cell::str(join(d.components[j]))});
    }
    std::vector<std::size_t> tags;
    for (auto j : d.interleaving) {
        tags.push_back(j + 1);
    }
    t.add({Cell::str("interleaving"), Cell::str(join_indices(tags))});
    return t;
}

Table cmd_sample(const Config& cfg)
{
    auto p = resolve(cfg);
    auto ab = require_ab(p, "sample");
    Table t{"sample", pi_columns(ab.m), {}};
    SamplerState state(ab, cfg.seed);
    for (std::uint64_t i = 0; i < cfg.n; ++i) {
        t.add(pi_row(state.sample()));
    }
    return t;
}

Table cmd_hist(const Config& cfg)
{
    auto p = resolve(cfg);
    auto ab = require_ab(p, "hist");
    if (cfg.stat != "pi1" && cfg.stat != "disp") {
        throw UsageError("--stat must be pi1 or disp");
    }
    auto rec = estimate_statistics(ab, cfg.n, cfg.seed, cfg.threads);
    Table t{"hist", {"value", "count"}, {}};
    if (cfg.stat == "pi1") {
        for (std::size_t v = 1; v < rec.pi1_hist.size(); ++v) {
            t.add({Cell::integer(static_cast<std::int64_t>(v)),
                   Cell::integer(static_cast<std::int64_t>(rec.pi1_hist[v]))});
        }
    } else {
        for (const auto& [v, count] : rec.disp_hist) {
            t.add({Cell::integer(v), Cell::integer(static_cast<std::int64_t>(count))});
        }
    }
    return t;
}

struct ExactMoments {
    BigRat e1, e2, e11, var, cov, disp_mean, disp_var;
    CoordinateDistribution dist;
};

ExactMoments exact_moments(const ABParams& ab)
{
    ExactMoments x;
    x.dist = first_coord_distribution(ab);
    x.e1 = exact_moment(x.dist, 1);
    x.e2 = exact_moment(x.dist, 2);
    x.e11 = ab.m >= 2 ? exact_joint_moment(ab, 1, 1) : BigRat(0);
    x.var = x.e2 - x.e1 * x.e1;
    x.cov = ab.m >= 2 ? x.e11 - x.e1 * x.e1 : BigRat(0);
    const BigRat m(ab.m);
    x.disp_mean = BigRat(ab.b * ab.m * (ab.m - 1) / 2 + ab.a * ab.m) - m * x.e1;
    x.disp_var = m * x.var + m * (m - 1) * x.cov;
    return x;
}

Table cmd_moments(const Config& cfg)
{
    auto p = resolve(cfg);
    auto ab = require_ab(p, "moments");
    auto x = exact_moments(ab);
    Table t{"moments", {"statistic", "exact", "decimal"}, {}};
    auto row = [&](const char* name, const BigRat& q) {
        t.add({Cell::str(name), Cell::str(to_string(q)), Cell::number(to_double(q))});
    };
    row("E_pi1", x.e1);
    row("E_pi1^2", x.e2);
    if (ab.m >= 2) {
        row("E_pi1_pi2", x.e11);
    }
    row("Var_pi1", x.var);
    if (ab.m >= 2) {
        row("Cov_pi1_pi2", x.cov);
    }
    row("E_disp", x.disp_mean);
    row("Var_disp", x.disp_var);
    return t;
}

Table cmd_compare(const Config& cfg)
{
    auto p = resolve(cfg);
    auto ab = require_ab(p, "compare");
    auto r = require_regime(cfg, p, "compare");
    if (ab.m < 2) {
        throw UsageError("compare needs m >= 2");
    }
    auto x = exact_moments(ab);
    Table t{"compare", {"statistic", "exact", "predicted", "abs_err", "rel_err"}, {}};
    auto row = [&](const char* name, double exact, double predicted) {
        const double abs_err = std::abs(exact - predicted);
        t.add({Cell::str(name), Cell::number(exact), Cell::number(predicted), Cell::number(abs_err),
               Cell::number(abs_err / std::abs(exact))});
    };
    double e1, e2, e11;
    if (r.generic()) {
        const int one[] = {1};
        const int two[] = {2};
        const int pair[] = {1, 1};
        e1 = asym_mixed_moment(r, one);
        e2 = asym_mixed_moment(r, two);
        e11 = asym_mixed_moment(r, pair);
    } else {
        auto c0 = asym_moments_c0(r.b, r.m);
        e1 = c0.e1;
        e2 = c0.e2;
        e11 = c0.e11;
    }
    auto vc = asym_var_cov(r);
    auto dl = asym_displacement(r);
    row("E_pi1", to_double(x.e1), e1);
    row("E_pi1^2", to_double(x.e2), e2);
    row("E_pi1_pi2", to_double(x.e11), e11);
    row("Var_pi1", to_double(x.var), vc.variance);
    row("Cov_pi1_pi2", to_double(x.cov), vc.covariance);
    row("E_disp", to_double(x.disp_mean), dl.mean);
    row("Var_disp", to_double(x.disp_var), dl.variance);
    row("P_pi1_eq_1", to_double(x.dist.probability(1)), asym_plateau(r));
    row("P_pi1_eq_top", to_double(x.dist.probability(ab.top())), asym_boundary(r, Side::Right, 0));
    return t;
}

// Randomized battery of Abel identities; counts passes per identity.
Table cmd_abel_check(const Config& cfg)
{
    std::mt19937_64 rng(cfg.seed);
    const std::uint64_t trials = cfg.n;
    struct Tally {
        const char* name;
        std::uint64_t passed = 0;
        std::uint64_t failed = 0;
    };
    std::vector<Tally> tallies{{"symmetry"}, {"recurrence_shift"}, {"recurrence_peel"},
                               {"closed_form_all_minus_one"}, {"closed_form_last_zero"}};
    auto record = [&](std::size_t i, bool ok) { ok ? ++tallies[i].passed : ++tallies[i].failed; };

    auto random_spec = [&]() {
        AbelSpec s;
        const auto m = static_cast<std::size_t>(uniform_int(rng, 1, 4));
        s.n = uniform_int(rng, 0, 8);
        for (std::size_t j = 0; j < m; ++j) {
            s.x.emplace_back(uniform_int(rng, -10, 10), uniform_int(rng, 1, 3));
            s.x.back().canonicalize();
            s.p.push_back(uniform_int(rng, -2, 3));
        }
        return s;
    };

    std::uint64_t done = 0;
    while (done < trials) {
        auto s = random_spec();
        try {
            const BigRat lhs = abel_multinomial(s);
            const auto m = s.x.size();

            auto swapped = s;
            const auto i = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(m) - 1));
            const auto j = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(m) - 1));
            std::swap(swapped.x[i], swapped.x[j]);
            std::swap(swapped.p[i], swapped.p[j]);
            const BigRat sym = abel_multinomial(swapped);

            BigRat shift = 0;
            if (s.n > 0) {
                for (std::size_t k = 0; k < m; ++k) {
                    auto t = s;
                    t.n -= 1;
                    t.x[k] += 1;
                    t.p[k] += 1;
                    shift += abel_multinomial(t);
                }
            } else {
                shift = lhs;
            }

            BigRat peel = 0;
            for (std::int64_t k = 0; k <= s.n; ++k) {
                auto t = s;
                t.n = s.n - k;
                t.x[0] += k;
                t.p[0] -= 1;
                peel += BigRat(binomial(s.n, k) * factorial(static_cast<unsigned>(k))) *
                        (s.x[0] + BigRat(k)) * abel_multinomial(t);
            }

            record(0, lhs == sym);
            record(1, lhs == shift);
            record(2, lhs == peel);
        } catch (const DomainError&) {
            continue;  // undefined term somewhere; draw again
        }

        try {
            auto t = s;
            std::fill(t.p.begin(), t.p.end(), -1);
            const bool ok1 = abel_multinomial(t) == abel_special(t.x, t.n, AbelVariant::AllMinusOne);
            t.p.back() = 0;
            const bool ok2 = abel_multinomial(t) == abel_special(t.x, t.n, AbelVariant::LastZero);
            record(3, ok1);
            record(4, ok2);
        } catch (const DomainError&) {
        }
        ++done;
    }

    Table t{"abel-check", {"identity", "passed", "failed"}, {}};
    bool all_ok = true;
    for (const auto& tally : tallies) {
        t.add({Cell::str(tally.name), Cell::integer(static_cast<std::int64_t>(tally.passed)),
               Cell::integer(static_cast<std::int64_t>(tally.failed))});
        all_ok = all_ok && tally.failed == 0;
    }
    if (!all_ok) {
        throw ArithmeticError("Abel identity battery failed:\n" + render_csv(t));
    }
    return t;
}

void add_problem_options(CLI::App* sub, Config& cfg, bool with_c = true)
{
    sub->add_option("--u", cfg.u, "comma-separated increasing thresholds");
    sub->add_option("--a", cfg.a, "first threshold of u_i = a + (i-1) b");
    sub->add_option("--b", cfg.b, "threshold spacing");
    if (with_c) {
        sub->add_option("--c", cfg.c, "regime parameter, a = c m + b (integer, decimal or p/q)");
    }
    sub->add_option("--m", cfg.m, "number of cars");
}

void add_output_options(CLI::App* sub, Config& cfg)
{
    sub->add_option("--out", cfg.out, "write output to this file instead of stdout");
    sub->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact and asymptotic toolkit for u-parking functions", "parkfn"};
    app.require_subcommand(1);
    Config cfg;
    std::function<Table()> action;

    auto* count = app.add_subcommand("count", "count PF(u) by every applicable route");
    add_problem_options(count, cfg);
    add_output_options(count, cfg);
    count->callback([&] { action = [&] { return cmd_count(cfg); }; });

    auto* enumerate = app.add_subcommand("enumerate", "list PF(u) in lexicographic order");
    add_problem_options(enumerate, cfg);
    add_output_options(enumerate, cfg);
    enumerate->callback([&] { action = [&] { return cmd_enumerate(cfg); }; });

    auto* check = app.add_subcommand("check", "test a preference vector and simulate parking");
    add_problem_options(check, cfg);
    check->add_option("--pi", cfg.pi, "comma-separated preferences")->required();
    add_output_options(check, cfg);
    check->callback([&] { action = [&] { return cmd_check(cfg); }; });

    auto* dec = app.add_subcommand("decompose", "maximal prefix and multi-shuffle components of a suffix");
    add_problem_options(dec, cfg);
    dec->add_option("--suffix", cfg.suffix, "comma-separated suffix pi_{l+1..m}")->required();
    dec->add_option("--v", cfg.v, "shuffle points to decompose against (default: maximal v)");
    add_output_options(dec, cfg);
    dec->callback([&] { action = [&] { return cmd_decompose(cfg); }; });

    auto* sample = app.add_subcommand("sample", "uniform samples from PF(a,b,m)");
    add_problem_options(sample, cfg);
    sample->add_option("--n", cfg.n, "number of samples")->default_val(10);
    sample->add_option("--seed", cfg.seed, "64-bit seed")->default_val(0);
    add_output_options(sample, cfg);
    sample->callback([&] { action = [&] { return cmd_sample(cfg); }; });

    auto* hist = app.add_subcommand("hist", "Monte Carlo histogram of pi_1 or displacement");
    add_problem_options(hist, cfg);
    hist->add_option("--n", cfg.n, "number of samples")->default_val(100000);
    hist->add_option("--seed", cfg.seed, "64-bit seed")->default_val(0);
    hist->add_option("--stat", cfg.stat, "pi1 or disp")->default_val("pi1");
    hist->add_option("--threads", cfg.threads, "worker threads (output does not depend on it)")->default_val(1);
    add_output_options(hist, cfg);
    hist->callback([&] { action = [&] { return cmd_hist(cfg); }; });

    auto* moments = app.add_subcommand("moments", "exact moments of pi_1, (pi_1, pi_2) and displacement");
    add_problem_options(moments, cfg);
    add_output_options(moments, cfg);
    moments->callback([&] { action = [&] { return cmd_moments(cfg); }; });

    auto* compare = app.add_subcommand("compare", "exact statistics against asymptotic predictions");
    add_problem_options(compare, cfg);
    add_output_options(compare, cfg);
    compare->callback([&] { action = [&] { return cmd_compare(cfg); }; });

    auto* abel = app.add_subcommand("abel-check", "randomized battery of Abel multinomial identities");
    abel->add_option("--n", cfg.n, "number of random specs")->default_val(200);
    abel->add_option("--seed", cfg.seed, "64-bit seed")->default_val(0);
    add_output_options(abel, cfg);
    abel->callback([&] { action = [&] { return cmd_abel_check(cfg); }; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "parkfn: " << e.what() << '\n';
        return 1;
    }

    try {
        Table table = action();
        const std::string text = cfg.format == "json" ? render_json(table) : render_csv(table);
        if (cfg.out.empty()) {
            out << text;
        } else {
            std::ofstream file(cfg.out, std::ios::binary);
            if (!file) {
                throw UsageError("cannot open " + cfg.out + " for writing");
            }
            file << text;
        }
        return 0;
    } catch (const ArithmeticError& e) {
        err << "parkfn: internal error: " << e.what() << '\n';
        return 2;
    } catch (const CLI::ParseError& e) {
        err << "parkfn: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "parkfn: " << e.what() << '\n';
        return 1;
    }
}

} // namespace parkfn::cli
