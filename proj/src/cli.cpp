#include "cyq/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyq/enumerative.hpp"
#include "cyq/errors.hpp"
#include "cyq/periods.hpp"
#include "cyq/suites.hpp"

namespace cyq {

namespace {

using ordered_json = nlohmann::ordered_json;

// Usage or I/O problem: exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;
    std::string system = "quintic";
    int order = 20;
    std::string format = "text";
    std::string cache;
    std::vector<std::string> suites;
    int max_degree = 10;
    std::string route = "ode";
    bool timing = false;
};

struct Row {
    std::string name;
    std::vector<std::string> cells;
};

/// Rows of one output table; `first_index` labels the first cell in text output.
struct Table {
    std::string index_label = "n";
    int first_index = 0;
    std::vector<Row> rows;
    ordered_json meta = ordered_json::object();
};

std::vector<std::string> strings(const QSeries &s)
{
    std::vector<std::string> v;
    for (const auto &c : s.coeffs())
        v.push_back(c.str());
    return v;
}

std::string csv_cell(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s)
        q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

void write_csv_row(std::ostream &out, const std::vector<std::string> &cells)
{
    for (std::size_t i = 0; i < cells.size(); ++i)
        out << (i ? "," : "") << csv_cell(cells[i]);
    out << "\n";
}

void emit(const RunConfig &cfg, const Table &t, std::ostream &out)
{
    if (cfg.format == "csv") {
        for (const auto &r : t.rows) {
            std::vector<std::string> cells{r.name};
            cells.insert(cells.end(), r.cells.begin(), r.cells.end());
            write_csv_row(out, cells);
        }
    } else if (cfg.format == "json") {
        ordered_json doc;
        doc["command"] = cfg.command;
        for (auto it = t.meta.begin(); it != t.meta.end(); ++it)
            doc[it.key()] = it.value();
        ordered_json series = ordered_json::object();
        for (const auto &r : t.rows)
            series[r.name] = r.cells;
        doc["series"] = series;
        out << doc.dump(2) << "\n";
    } else {
        for (auto it = t.meta.begin(); it != t.meta.end(); ++it)
            out << it.key() << ": " << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump())
                << "\n";
        std::size_t len = 0;
        for (const auto &r : t.rows)
            len = std::max(len, r.cells.size());
        std::vector<std::size_t> width;
        width.push_back(std::max(t.index_label.size(), std::to_string(t.first_index + static_cast<int>(len)).size()));
        for (const auto &r : t.rows) {
            std::size_t w = r.name.size();
            for (const auto &c : r.cells)
                w = std::max(w, c.size());
            width.push_back(w);
        }
        out << std::setw(static_cast<int>(width[0])) << t.index_label;
        for (std::size_t j = 0; j < t.rows.size(); ++j)
            out << "  " << std::setw(static_cast<int>(width[j + 1])) << t.rows[j].name;
        out << "\n";
        for (std::size_t i = 0; i < len; ++i) {
            out << std::setw(static_cast<int>(width[0])) << t.first_index + static_cast<int>(i);
            for (std::size_t j = 0; j < t.rows.size(); ++j) {
                const auto &cells = t.rows[j].cells;
                out << "  " << std::setw(static_cast<int>(width[j + 1])) << (i < cells.size() ? cells[i] : "");
            }
            out << "\n";
        }
    }
}

// ---- cache -----------------------------------------------------------------

std::optional<SeriesSolution> read_cache(const RunConfig &cfg, const VectorFieldInstance &sys)
{
    if (cfg.cache.empty() || !std::filesystem::exists(cfg.cache))
        return std::nullopt;
    std::ifstream in(cfg.cache);
    if (!in)
        throw UsageError("cache: cannot open " + cfg.cache);
    ordered_json doc;
    try {
        doc = ordered_json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
        throw UsageError(std::string("cache: parse error: ") + e.what());
    }
    try {
        if (doc.at("system").get<std::string>() != sys.name)
            throw UsageError("cache: holds system '" + doc.at("system").get<std::string>() + "', not '" + sys.name + "'");
        int order = doc.at("order").get<int>();
        if (order < 0)
            throw UsageError("cache: negative order");
        SeriesSolution sol{sys.name, sys.var_names, {}};
        const auto &series = doc.at("series");
        for (const auto &name : sys.var_names) {
            const auto &arr = series.at(name);
            if (!arr.is_array() || static_cast<int>(arr.size()) != order + 1)
                throw UsageError("cache: series '" + name + "' does not have order+1 coefficients");
            std::vector<Rational> c;
            for (const auto &x : arr)
                c.push_back(Rational::parse(x.get<std::string>()));
            sol.series.emplace_back(std::move(c));
        }
        return sol;
    } catch (const nlohmann::json::exception &e) {
        throw UsageError(std::string("cache: malformed document: ") + e.what());
    } catch (const std::invalid_argument &e) {
        throw UsageError(std::string("cache: bad coefficient: ") + e.what());
    }
}

void write_cache(const RunConfig &cfg, const SeriesSolution &sol)
{
    ordered_json doc;
    doc["system"] = sol.system;
    doc["order"] = sol.order();
    ordered_json series = ordered_json::object();
    for (std::size_t i = 0; i < sol.names.size(); ++i)
        series[sol.names[i]] = strings(sol.series[i]);
    doc["series"] = series;
    std::ofstream out(cfg.cache);
    if (!out)
        throw UsageError("cache: cannot write " + cfg.cache);
    out << doc.dump() << "\n";
}

SeriesSolution solution(const RunConfig &cfg, const VectorFieldInstance &sys, int order)
{
    if (auto cached = read_cache(cfg, sys); cached && cached->order() >= order)
        return cached->truncate(order);
    SeriesSolution sol = solve_default(sys, order);
    if (!cfg.cache.empty())
        write_cache(cfg, sol);
    return sol;
}

// ---- commands --------------------------------------------------------------

VectorFieldInstance require_quintic(const RunConfig &cfg)
{
    if (cfg.system != "quintic")
        throw UsageError(cfg.command + " is defined for the quintic system only");
    return quintic_system();
}

QSeries yukawa_periods(int order)
{
    auto b = build_frobenius(order);
    return yukawa_from_periods(b, build_mirror_map(b));
}

void check_route(const std::string &route)
{
    if (route != "ode" && route != "periods" && route != "both")
        throw UsageError("--route must be ode, periods or both");
}

// Y by the chosen route(s); the flag is false when both routes were asked for and differ.
std::pair<std::vector<std::pair<std::string, QSeries>>, bool> yukawa_routes(const RunConfig &cfg, int order)
{
    check_route(cfg.route);
    std::vector<std::pair<std::string, QSeries>> ys;
    if (cfg.route != "periods")
        ys.emplace_back("ode", yukawa_from_solution(solution(cfg, require_quintic(cfg), std::max(order, 2)).truncate(order)));
    if (cfg.route != "ode")
        ys.emplace_back("periods", yukawa_periods(order));
    bool agree = ys.size() < 2 || ys[0].second == ys[1].second;
    return {ys, agree};
}

int cmd_expand(const RunConfig &cfg, std::ostream &out)
{
    auto sys = system_by_name(cfg.system);
    auto sol = solution(cfg, sys, cfg.order);
    Table t;
    t.meta["system"] = sys.name;
    t.meta["order"] = cfg.order;
    for (std::size_t i = 0; i < sol.names.size(); ++i)
        t.rows.push_back({sol.names[i], strings(sol.series[i])});
    emit(cfg, t, out);
    return 0;
}

int cmd_yukawa(const RunConfig &cfg, std::ostream &out)
{
    auto [ys, agree] = yukawa_routes(cfg, cfg.order);
    Table t;
    t.meta["system"] = cfg.system;
    t.meta["order"] = cfg.order;
    t.meta["route"] = cfg.route;
    if (ys.size() == 2)
        t.meta["routes_agree"] = agree;
    for (const auto &[route, y] : ys)
        t.rows.push_back({ys.size() == 1 ? "Y" : "Y_" + route, strings(y)});
    emit(cfg, t, out);
    return agree ? 0 : 1;
}

std::vector<std::pair<std::string, InstantonTable>> instantons(const RunConfig &cfg, bool &agree)
{
    RunConfig c = cfg;
    auto [ys, ok] = yukawa_routes(c, cfg.max_degree);
    agree = ok;
    std::vector<std::pair<std::string, InstantonTable>> out;
    for (const auto &[route, y] : ys)
        out.emplace_back(route, lambert_extract(y));
    return out;
}

int cmd_instanton(const RunConfig &cfg, std::ostream &out)
{
    bool agree = true;
    auto tabs = instantons(cfg, agree);
    Table t;
    t.index_label = "d";
    t.first_index = 1;
    t.meta["system"] = cfg.system;
    t.meta["max_degree"] = cfg.max_degree;
    t.meta["route"] = cfg.route;
    t.meta["constant"] = tabs.front().second.constant.str();
    if (tabs.size() == 2)
        t.meta["routes_agree"] = agree;
    for (const auto &[route, tab] : tabs) {
        std::vector<std::string> cells;
        for (int d = 1; d <= tab.max_degree; ++d)
            cells.push_back(tab.n[static_cast<std::size_t>(d)].str());
        t.rows.push_back({tabs.size() == 1 ? "n" : "n_" + route, cells});
    }
    emit(cfg, t, out);
    return agree ? 0 : 1;
}

int cmd_gw(const RunConfig &cfg, std::ostream &out)
{
    bool agree = true;
    auto tabs = instantons(cfg, agree);
    Table t;
    t.index_label = "d";
    t.first_index = 1;
    t.meta["system"] = cfg.system;
    t.meta["max_degree"] = cfg.max_degree;
    t.meta["route"] = cfg.route;
    if (tabs.size() == 2)
        t.meta["routes_agree"] = agree;
    for (const auto &[route, tab] : tabs) {
        auto g = gw_from_instanton(tab);
        std::vector<std::string> cells;
        for (int d = 1; d <= tab.max_degree; ++d)
            cells.push_back(g.N[static_cast<std::size_t>(d)].str());
        t.rows.push_back({tabs.size() == 1 ? "N" : "N_" + route, cells});
    }
    emit(cfg, t, out);
    return agree ? 0 : 1;
}

int cmd_jfunction(const RunConfig &cfg, std::ostream &out)
{
    check_route(cfg.route);
    // c_k needs t0, t4 through q^{k+2}
    int need = cfg.order + 2;
    std::vector<std::pair<std::string, JExpansion>> js;
    if (cfg.route != "periods") {
        auto sol = solution(cfg, require_quintic(cfg), need).truncate(need);
        js.emplace_back("ode", j_expansion(sol));
    }
    if (cfg.route != "ode") {
        require_quintic(cfg);
        auto b = build_frobenius(need);
        auto p = t0_t4_from_periods(b, build_mirror_map(b));
        js.emplace_back("periods", j_expansion(p.t0, p.t4));
    }
    bool agree = js.size() < 2 || (js[0].second.pole == js[1].second.pole && js[0].second.regular == js[1].second.regular);
    Table t;
    t.first_index = -1;
    t.meta["system"] = cfg.system;
    t.meta["order"] = cfg.order;
    t.meta["route"] = cfg.route;
    if (js.size() == 2)
        t.meta["routes_agree"] = agree;
    for (const auto &[route, j] : js) {
        std::vector<std::string> cells{j.pole.str()};
        for (const auto &c : strings(j.regular))
            cells.push_back(c);
        t.rows.push_back({js.size() == 1 ? "3125j" : "3125j_" + route, cells});
    }
    emit(cfg, t, out);
    return agree ? 0 : 1;
}

int cmd_verify(const RunConfig &cfg, std::ostream &out)
{
    std::vector<std::string> suites;
    for (const auto &s : cfg.suites.empty() ? std::vector<std::string>{"all"} : cfg.suites) {
        if (s == "all")
            suites.insert(suites.end(), suite_names().begin(), suite_names().end());
        else if (std::find(suite_names().begin(), suite_names().end(), s) != suite_names().end())
            suites.push_back(s);
        else
            throw UsageError("unknown suite '" + s + "'");
    }
    auto quintic = quintic_system();
    SolutionSource source = [&](int order) { return solution(cfg, quintic, order); };

    std::vector<ReportEntry> entries;
    for (const auto &s : suites) {
        auto part = run_suite(s, cfg.order, source);
        entries.insert(entries.end(), part.begin(), part.end());
    }
    bool all = std::all_of(entries.begin(), entries.end(), [](const ReportEntry &e) { return e.check.passed; });

    if (cfg.format == "json") {
        ordered_json doc;
        doc["command"] = "verify";
        doc["order"] = cfg.order;
        doc["suites"] = suites;
        doc["status"] = all ? "pass" : "fail";
        ordered_json checks = ordered_json::array();
        for (const auto &e : entries) {
            ordered_json c;
            c["suite"] = e.suite;
            c["name"] = e.check.name;
            c["status"] = e.check.passed ? "pass" : "fail";
            c["anchor"] = e.check.anchor;
            c["convention"] = e.check.convention;
            c["first_failure"] = e.first_failure;
            c["detail"] = e.check.detail;
            checks.push_back(c);
        }
        doc["checks"] = checks;
        out << doc.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        write_csv_row(out, {"suite", "name", "status", "first_failure", "convention", "detail"});
        for (const auto &e : entries)
            write_csv_row(out, {e.suite, e.check.name, e.check.passed ? "pass" : "fail", e.first_failure,
                                e.check.convention, e.check.detail});
    } else {
        for (const auto &e : entries) {
            out << (e.check.passed ? "PASS " : "FAIL ") << e.suite << " / " << e.check.name << ": " << e.check.detail;
            if (!e.check.convention.empty())
                out << " [" << e.check.convention << "]";
            if (cfg.timing) {
                std::ostringstream ms;
                ms << std::fixed << std::setprecision(1) << e.millis;
                out << " (" << ms.str() << " ms)";
            }
            out << "\n";
        }
        out << (all ? "overall: pass" : "overall: fail") << "\n";
    }
    return all ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact q-expansions and verifications for the quintic mirror family"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto common = [&](CLI::App *sub, bool with_order, bool with_degree, bool with_route) {
        sub->add_option("--system", cfg.system, "quintic or ramanujan")
            ->check(CLI::IsMember({"quintic", "ramanujan"}));
        if (with_order)
            sub->add_option("--order", cfg.order, "truncation order")->check(CLI::Range(1, 1 << 20));
        if (with_degree)
            sub->add_option("--max-degree", cfg.max_degree, "largest degree d")->check(CLI::Range(1, 1 << 20));
        if (with_route)
            sub->add_option("--route", cfg.route, "ode, periods or both")
                ->check(CLI::IsMember({"ode", "periods", "both"}));
        sub->add_option("--format", cfg.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--cache", cfg.cache, "JSON cache of the ODE solution");
    };
    auto *expand = app.add_subcommand("expand", "q-expansions of the vector field solution");
    common(expand, true, false, false);
    auto *inst = app.add_subcommand("instanton", "instanton numbers n_d");
    common(inst, false, true, true);
    auto *gw = app.add_subcommand("gw", "Gromov-Witten invariants N_d");
    common(gw, false, true, true);
    auto *yuk = app.add_subcommand("yukawa", "Yukawa coupling q-expansion");
    common(yuk, true, false, true);
    auto *jf = app.add_subcommand("jfunction", "3125 j = 1/q + c_0 + c_1 q + ...");
    common(jf, true, false, true);
    auto *ver = app.add_subcommand("verify", "run verification suites");
    common(ver, true, false, false);
    ver->add_option("--suite", cfg.suites, "tables, oracle, conjecture, symbolic or all")->delimiter(',');
    ver->add_flag("--timing", cfg.timing, "per-check timing in text output");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    for (auto *sub : app.get_subcommands())
        cfg.command = sub->get_name();

    try {
        if (cfg.command == "expand")
            return cmd_expand(cfg, out);
        if (cfg.command == "instanton")
            return cmd_instanton(cfg, out);
        if (cfg.command == "gw")
            return cmd_gw(cfg, out);
        if (cfg.command == "yukawa")
            return cmd_yukawa(cfg, out);
        if (cfg.command == "jfunction")
            return cmd_jfunction(cfg, out);
        return cmd_verify(cfg, out);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedSystem &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace cyq
