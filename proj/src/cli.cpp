#include "qmzv/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "qmzv/qstirling.hpp"
#include "qmzv/seqlib.hpp"
#include "qmzv/verify.hpp"
#include "qmzv/zeta.hpp"

namespace qmzv {

namespace {

using json = nlohmann::ordered_json;

constexpr int approx_digits = 30;

struct Options {
    std::string format = "text";
    std::string out_path;
    std::uint64_t budget = default_brute_budget;
    std::optional<unsigned> trunc;
    unsigned jobs = 1;
    bool approx = false;

    std::optional<unsigned> n, m, s, r;
    std::optional<unsigned> n_max, m_max, s_max;
    std::string method = "product";
    std::string q = "symbolic";
    std::string kind;
    unsigned alpha = 1;
    std::string table_kind;
    std::string suite;
};

struct Cell {
    std::string exact;
    std::optional<std::string> approx;
};

struct Row {
    long index;
    long start;
    std::vector<Cell> cells;
};

struct Table {
    std::string kind;
    json params = json::object();
    std::vector<Row> rows;
};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

Cell cell_of(const Rat& v, bool approx) {
    Cell c{v.to_string(), std::nullopt};
    if (approx) c.approx = v.to_decimal(approx_digits);
    return c;
}
Cell cell_of(const RatPoly& v, bool) { return {v.to_string("q"), std::nullopt}; }
Cell cell_of(const CycloElem& v, bool approx) {
    if (v.is_rational()) return cell_of(v.as_rational(), approx);
    return {v.to_string(), std::nullopt};
}

void emit_table(const Table& t, const std::string& format, std::ostream& os) {
    if (format == "json") {
        json j;
        j["table"] = t.kind;
        for (const auto& [k, v] : t.params.items()) j[k] = v;
        j["rows"] = json::array();
        for (const auto& row : t.rows) {
            json jr;
            jr["index"] = row.index;
            jr["start"] = row.start;
            jr["values"] = json::array();
            bool any_approx = false;
            for (const auto& c : row.cells) {
                jr["values"].push_back(c.exact);
                any_approx = any_approx || c.approx.has_value();
            }
            if (any_approx) {
                jr["approx"] = json::array();
                for (const auto& c : row.cells) jr["approx"].push_back(c.approx.value_or(""));
            }
            j["rows"].push_back(std::move(jr));
        }
        os << j.dump(2) << "\n";
    } else if (format == "csv") {
        bool any_approx = false;
        for (const auto& row : t.rows)
            for (const auto& c : row.cells) any_approx = any_approx || c.approx.has_value();
        os << "row,col,value" << (any_approx ? ",approx" : "") << "\n";
        for (const auto& row : t.rows) {
            for (std::size_t i = 0; i < row.cells.size(); ++i) {
                os << row.index << "," << row.start + static_cast<long>(i) << "," << csv_field(row.cells[i].exact);
                if (any_approx) os << "," << row.cells[i].approx.value_or("");
                os << "\n";
            }
        }
    } else {
        for (const auto& row : t.rows) {
            for (std::size_t i = 0; i < row.cells.size(); ++i) os << (i ? " " : "") << row.cells[i].exact;
            os << "\n";
            if (std::any_of(row.cells.begin(), row.cells.end(), [](const Cell& c) { return c.approx.has_value(); })) {
                os << "approx:";
                for (const auto& c : row.cells) os << " " << c.approx.value_or("?");
                os << "\n";
            }
        }
    }
}

unsigned need(const std::optional<unsigned>& v, const char* flag) {
    if (!v) throw BadParams(std::string("missing required option ") + flag);
    return *v;
}

void cmd_value(const Options& o, std::ostream& os) {
    const ZetaParams p{need(o.n, "--n"), need(o.m, "--m"), need(o.s, "--s")};
    p.validate();
    const ZetaMethod method = parse_method(o.method);
    const ZetaValue v = zeta_by_method(p, method, o.budget);
    if (o.format == "json") {
        json j;
        j["n"] = p.n;
        j["m"] = p.m;
        j["s"] = p.s;
        j["method"] = to_string(v.method);
        j["value"] = v.value.to_string();
        if (o.approx) j["approx"] = v.value.to_decimal(approx_digits);
        os << j.dump(2) << "\n";
    } else if (o.format == "csv") {
        os << "n,m,s,method,value" << (o.approx ? ",approx" : "") << "\n";
        os << p.n << "," << p.m << "," << p.s << "," << to_string(v.method) << "," << v.value.to_string();
        if (o.approx) os << "," << v.value.to_decimal(approx_digits);
        os << "\n";
    } else {
        os << v.value.to_string() << "  [method=" << to_string(v.method) << "]\n";
        if (o.approx) os << "approx: " << v.value.to_decimal(approx_digits) << "\n";
    }
}

Table zeta_table(const Options& o) {
    Table t;
    t.kind = "zeta";
    const unsigned s = o.s.value_or(1);
    if (s < 1) throw BadParams("zeta needs s >= 1");
    unsigned lo = 0, hi = 0;
    if (o.n) {
        lo = hi = *o.n;
    } else {
        lo = 2;
        hi = need(o.n_max, "--n or --n-max");
    }
    if (lo < 2) throw BadParams("zeta needs n >= 2");
    t.params["s"] = s;
    for (unsigned n = lo; n <= hi; ++n) {
        const unsigned m_hi = o.m_max ? std::min(*o.m_max, n - 1) : n - 1;
        Row row{n, 0, {}};
        for (const auto& v : zeta_product(n, s, m_hi)) row.cells.push_back(cell_of(v.value, o.approx));
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table stirling_table(const Options& o, StirlingKind kind) {
    Table t;
    t.kind = kind == StirlingKind::first ? "stirling1" : "stirling2";
    const unsigned r = o.r.value_or(1);
    const unsigned s = o.s.value_or(1);
    const unsigned n_max = o.n_max.value_or(6);
    const QPoint q = parse_qpoint(o.q);
    t.params["r"] = r;
    t.params["s"] = s;
    t.params["q"] = describe(q);
    with_q(q, [&](const auto& qv) {
        using R = std::decay_t<decltype(qv)>;
        StirlingTable<R> table({r, s, kind}, qv);
        for (unsigned n = r; n <= n_max; ++n) {
            Row row{n, r, {}};
            const auto entries = table.row(n);
            for (unsigned k = r; k <= n; ++k) row.cells.push_back(cell_of(entries[k], o.approx));
            t.rows.push_back(std::move(row));
        }
    });
    return t;
}

Table rstirling_table(const Options& o) {
    Table t;
    t.kind = "rstirling";
    const unsigned r = o.r.value_or(1);
    const unsigned n_max = o.n_max.value_or(6);
    t.params["r"] = r;
    for (unsigned n = r; n <= n_max; ++n) {
        Row row{n, r, {}};
        for (unsigned k = r; k <= n; ++k) row.cells.push_back(cell_of(rstirling1(n, k, r), o.approx));
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table bernoulli_table(const Options& o) {
    Table t;
    t.kind = "bernoulli";
    const std::string kind = o.kind.empty() ? "norlund" : o.kind;
    const unsigned n_max = o.n_max.value_or(8);
    t.params["kind"] = kind;
    Row row{0, 0, {}};
    if (kind == "norlund") {
        for (const auto& v : norlund_table(n_max)) row.cells.push_back(cell_of(v, o.approx));
    } else if (kind == "order") {
        t.params["alpha"] = o.alpha;
        for (unsigned k = 0; k <= n_max; ++k) row.cells.push_back(cell_of(bernoulli_order(k, o.alpha), o.approx));
    } else if (kind == "degenerate") {
        const unsigned n = need(o.n, "--n");
        if (n < 1) throw BadParams("degenerate Bernoulli numbers need n >= 1");
        t.params["lambda"] = Rat(1, static_cast<long>(n)).to_string();
        for (unsigned k = 0; k <= n_max; ++k)
            row.cells.push_back(cell_of(degen_bernoulli(k, Rat(1, static_cast<long>(n))), o.approx));
    } else {
        throw BadParams("unknown Bernoulli kind: " + kind + " (expected norlund, order or degenerate)");
    }
    t.rows.push_back(std::move(row));
    return t;
}

void cmd_table(const Options& o, std::ostream& os) {
    Table t;
    if (o.table_kind == "zeta") t = zeta_table(o);
    else if (o.table_kind == "stirling1") t = stirling_table(o, StirlingKind::first);
    else if (o.table_kind == "stirling2") t = stirling_table(o, StirlingKind::second);
    else if (o.table_kind == "rstirling") t = rstirling_table(o);
    else if (o.table_kind == "bernoulli") t = bernoulli_table(o);
    else throw BadParams("unknown table kind: " + o.table_kind);
    emit_table(t, o.format, os);
}

void cmd_poly(const Options& o, std::ostream& os) {
    const unsigned m = need(o.m, "--m");
    const unsigned s = need(o.s, "--s");
    if (s < 1) throw BadParams("poly needs s >= 1");
    const RatPoly p = zeta_poly_in_n(m, s);
    const long deg = p.degree() ? static_cast<long>(*p.degree()) : -1;
    if (o.format == "json") {
        json j;
        j["m"] = m;
        j["s"] = s;
        j["degree"] = deg;
        j["coefficients"] = json::array();
        for (const auto& c : p.coeffs()) j["coefficients"].push_back(c.to_string());
        j["polynomial"] = p.to_string("n");
        os << j.dump(2) << "\n";
    } else if (o.format == "csv") {
        os << "degree,coefficient\n";
        for (std::size_t k = 0; k < p.coeffs().size(); ++k) os << k << "," << p.coeffs()[k].to_string() << "\n";
    } else {
        os << p.to_string("n") << "\n";
    }
}

bool cmd_verify(const Options& o, std::ostream& os) {
    VerifyConfig cfg;
    cfg.n_max = o.n_max;
    cfg.m_max = o.m_max;
    cfg.s_max = o.s_max;
    cfg.trunc = o.trunc;
    cfg.jobs = std::max(1u, o.jobs);
    cfg.budget = o.budget;
    const auto report = run_suite(o.suite, cfg);
    if (o.format == "json") {
        os << report.to_json().dump(2) << "\n";
    } else if (o.format == "csv") {
        os << "suite,params,routes,expected,actual\n";
        for (const auto& f : report.failures) {
            std::string params, routes;
            for (const auto& [k, v] : f.params) params += (params.empty() ? "" : ";") + k + "=" + v;
            for (const auto& r : f.routes) routes += (routes.empty() ? "" : "/") + r;
            os << report.suite << "," << csv_field(params) << "," << csv_field(routes) << ","
               << csv_field(f.expected) << "," << csv_field(f.actual) << "\n";
        }
    } else {
        os << report.to_text();
    }
    return report.pass();
}

std::optional<std::uint64_t> env_budget() {
    const char* raw = std::getenv("QMZV_BUDGET");
    if (!raw || !*raw) return std::nullopt;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(raw, &end, 10);
    if (*end != '\0' || v == 0) throw BadParams(std::string("QMZV_BUDGET must be a positive integer, got ") + raw);
    return v;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact finite q-multiple zeta values at roots of unity"};
    app.name("qmzv");
    app.require_subcommand(1);

    std::optional<std::uint64_t> budget_flag;
    auto shared = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--out", o.out_path, "Write output to this file instead of stdout");
        sub->add_option("--budget", budget_flag, "Brute-force term budget")->check(CLI::PositiveNumber);
        sub->add_option("--trunc", o.trunc, "Series truncation order");
        sub->add_option("--jobs", o.jobs, "Worker threads for verification")->check(CLI::PositiveNumber);
        sub->add_flag("--approx", o.approx, "Also print labeled decimal approximations");
        sub->add_option("--n", o.n, "n");
        sub->add_option("--m", o.m, "m");
        sub->add_option("--s", o.s, "s");
        sub->add_option("--r", o.r, "r");
        sub->add_option("--n-max,--nmax", o.n_max, "Largest n");
        sub->add_option("--m-max,--mmax", o.m_max, "Largest m");
        sub->add_option("--s-max,--smax", o.s_max, "Largest s");
    };

    auto* value = app.add_subcommand("value", "Compute one value Z_n(zeta_n; m, s)");
    shared(value);
    value->add_option("--method", o.method, "brute, product, stirling, bell, det or closed")
        ->check(CLI::IsMember({"brute", "product", "stirling", "bell", "det", "closed"}));

    auto* table = app.add_subcommand("table", "Print a table");
    shared(table);
    table->add_option("table", o.table_kind, "zeta, stirling1, stirling2, rstirling or bernoulli")->required();
    table->add_option("--q", o.q, "q point: symbolic, a rational, or zeta:<n>");
    table->add_option("--kind", o.kind, "Bernoulli kind: norlund, order or degenerate");
    table->add_option("--alpha", o.alpha, "Order for --kind order");

    auto* poly = app.add_subcommand("poly", "Interpolate n -> Z_n(zeta_n; m, s) as a polynomial");
    shared(poly);

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    shared(verify);
    std::string suites;
    for (const auto& name : suite_names()) suites += (suites.empty() ? "" : ", ") + name;
    verify->add_option("suite", o.suite, suites)->required()->check(CLI::IsMember(suite_names()));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_bad_arguments;
    }

    try {
        o.budget = budget_flag ? *budget_flag : env_budget().value_or(default_brute_budget);

        std::ofstream file;
        std::ostream* os = &out;
        if (!o.out_path.empty()) {
            file.open(o.out_path);
            if (!file) throw BadParams("cannot open output file " + o.out_path);
            os = &file;
        }

        int code = exit_ok;
        if (value->parsed()) cmd_value(o, *os);
        else if (table->parsed()) cmd_table(o, *os);
        else if (poly->parsed()) cmd_poly(o, *os);
        else if (verify->parsed() && !cmd_verify(o, *os)) code = exit_verify_failed;
        os->flush();
        return code;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return exit_budget;
    } catch (const UnsupportedClosedForm& e) {
        err << "error: " << e.what() << "\n";
        return exit_unsupported;
    } catch (const BadParams& e) {
        err << "error: " << e.what() << "\n";
        return exit_bad_arguments;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_bad_arguments;
    } catch (const UnsupportedLambda& e) {
        err << "error: " << e.what() << "\n";
        return exit_bad_arguments;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
}

}  // namespace qmzv
