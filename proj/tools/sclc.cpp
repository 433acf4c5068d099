// sclc: command-line front end over the C API.
//
// Exit codes: 0 success or equal, 1 unequal or refuted, 2 usage or input
// error, 3 internal invariant violation.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <iterator>
#include <memory>
#include <string>
#include <vector>

#include "scl/scl.h"

namespace {

constexpr int kOk = 0;
constexpr int kDiffers = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

// Thrown to unwind to main with an exit code; the message is already printed.
struct Exit {
    int code;
};

[[noreturn]] void die(scl_status s) {
    std::cerr << "sclc: " << scl_status_name(s) << ": " << scl_last_error() << "\n";
    throw Exit{s == SCL_ERR_INVARIANT || s == SCL_ERR_INTERNAL ? kInternal : kUsage};
}

[[noreturn]] void usage(const std::string& message) {
    std::cerr << "sclc: " << message << "\n";
    throw Exit{kUsage};
}

void check(scl_status s) {
    if (s != SCL_OK) die(s);
}

struct TermDeleter {
    void operator()(scl_term* t) const { scl_term_free(t); }
};
struct FormDeleter {
    void operator()(scl_form* f) const { scl_form_free(f); }
};
struct ReportDeleter {
    void operator()(scl_report* r) const { scl_report_free(r); }
};
using TermPtr = std::unique_ptr<scl_term, TermDeleter>;
using FormPtr = std::unique_ptr<scl_form, FormDeleter>;
using ReportPtr = std::unique_ptr<scl_report, ReportDeleter>;

std::string take(char* s) {
    std::string out(s);
    scl_string_free(s);
    return out;
}

struct Config {
    bool free = false;
    bool mem = false;
    bool three_valued = false;
    bool json = false;
    bool text = false;
    bool dot = false;
    bool ascii = false;
    bool primes = false;
    bool verbose = false;
    bool single_table = true;
    int exhaustive = 0;
    std::uint64_t budget = 1'000'000;

    scl_mode mode() const { return scl_mode{free ? SCL_FREE : SCL_MEM, three_valued ? 1 : 0}; }
    scl_style text_style() const { return ascii ? SCL_STYLE_ASCII : SCL_STYLE_UNICODE; }
};

std::string read_expr(const std::string& arg) {
    if (arg != "-") return arg;
    std::string s{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    return s;
}

TermPtr parse(const std::string& arg) {
    scl_term* t = nullptr;
    scl_status s = scl_parse(read_expr(arg).c_str(), &t);
    if (s != SCL_OK) die(s);
    return TermPtr(t);
}

std::string show_term(const scl_term* t, const Config& c) {
    char* out = nullptr;
    check(scl_term_print(t, c.json ? SCL_STYLE_JSON : c.text_style(), c.primes, &out));
    return take(out);
}

std::string show_form(const scl_form* f, const Config& c) {
    scl_style style = c.dot ? SCL_STYLE_DOT : c.json ? SCL_STYLE_JSON : c.text_style();
    char* out = nullptr;
    check(scl_form_print(f, style, c.primes, &out));
    return take(out);
}

FormPtr normalize(const scl_term* t, const Config& c) {
    scl_form* f = nullptr;
    check(scl_normalize(t, c.mode(), &f));
    return FormPtr(f);
}

void emit(const std::string& s) {
    std::cout << s;
    if (s.empty() || s.back() != '\n') std::cout << '\n';
}

int cmd_norm(const std::string& expr, const Config& c) {
    TermPtr t = parse(expr);
    emit(show_form(normalize(t.get(), c).get(), c));
    return kOk;
}

int cmd_eq(const std::string& lhs, const std::string& rhs, const Config& c) {
    TermPtr p = parse(lhs);
    TermPtr q = parse(rhs);
    FormPtr pf = normalize(p.get(), c);
    FormPtr qf = normalize(q.get(), c);
    bool equal = scl_form_equal(pf.get(), qf.get()) != 0;
    if (c.json) {
        nlohmann::ordered_json j;
        j["equal"] = equal;
        j["lhs"] = nlohmann::ordered_json::parse(show_form(pf.get(), c));
        j["rhs"] = nlohmann::ordered_json::parse(show_form(qf.get(), c));
        std::cout << j.dump() << "\n";
    } else if (equal) {
        std::cout << "equal: " << show_form(pf.get(), c) << "\n";
    } else {
        std::cout << "not equal\n  " << show_form(pf.get(), c) << "\n  " << show_form(qf.get(), c) << "\n";
    }
    return equal ? kOk : kDiffers;
}

template <class F>
int cmd_rewrite(const std::string& expr, const Config& c, F&& f) {
    TermPtr t = parse(expr);
    scl_term* out = nullptr;
    check(f(t.get(), &out));
    TermPtr r(out);
    emit(show_term(r.get(), c));
    return kOk;
}

int cmd_eval(const std::string& expr, const std::string& val, const Config& c) {
    TermPtr t = parse(expr);
    scl_truth v{};
    check(scl_eval(t.get(), val.c_str(), &v));
    const char* name = v == SCL_TRUE ? "T" : v == SCL_FALSE ? "F" : "U";
    if (c.json) {
        std::cout << nlohmann::json{{"value", name}}.dump() << "\n";
    } else {
        std::cout << name << "\n";
    }
    return kOk;
}

int cmd_munbf(const std::string& expr, const Config& c) {
    TermPtr t = parse(expr);
    scl_form* f = nullptr;
    check(scl_munbf(t.get(), &f));
    FormPtr form(f);
    emit(show_form(form.get(), c));
    return kOk;
}

const char* mode_name(scl_mode m) {
    if (m.congruence == SCL_FREE) return m.three_valued ? "free, three-valued" : "free";
    return m.three_valued ? "mem, three-valued" : "mem";
}

const char* verdict_name(scl_verdict v) {
    switch (v) {
        case SCL_PASSED_FRESH_ATOMS: return "passed (fresh atoms)";
        case SCL_PASSED_EXHAUSTIVE: return "passed (exhaustive)";
        case SCL_REFUTED_FRESH_ATOMS: return "refuted (fresh atoms)";
        case SCL_REFUTED_EXHAUSTIVE: return "refuted (exhaustive)";
    }
    return "?";
}

bool refuted(scl_verdict v) { return v == SCL_REFUTED_FRESH_ATOMS || v == SCL_REFUTED_EXHAUSTIVE; }

int cmd_list(const Config& c) {
    nlohmann::ordered_json all = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < scl_table_count(); ++i) {
        const char* name = scl_table_name(i);
        const char* description = nullptr;
        std::size_t n = 0;
        scl_mode mode{};
        int negative = 0;
        check(scl_table_info(name, &description, &n, &mode, &negative));
        if (c.json) {
            all.push_back({{"name", name}, {"schemas", n}, {"mode", mode_name(mode)},
                           {"expect_refuted", negative != 0}, {"description", description}});
        } else {
            std::printf("%-24s %3zu  %-18s %s\n", name, n, mode_name(mode), description);
        }
    }
    if (c.json) std::cout << all.dump(2) << "\n";
    return kOk;
}

int check_one(const std::string& table, const Config& c, nlohmann::ordered_json& json_out) {
    scl_check_options o = scl_check_defaults();
    o.exhaustive = c.exhaustive > 0;
    if (o.exhaustive) o.k = c.exhaustive;
    o.budget = c.budget;
    o.override_mode = c.free || c.mem;
    o.mode = c.mode();
    o.three_valued = c.three_valued;
    scl_report* raw = nullptr;
    check(scl_check_table(table.c_str(), &o, &raw));
    ReportPtr report(raw);

    bool negative = scl_report_expect_refuted(report.get()) != 0;
    std::size_t n = scl_report_size(report.get());
    std::size_t good = 0;
    std::size_t fresh_only = 0;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < n; ++i) {
        scl_report_entry e{};
        check(scl_report_entry_at(report.get(), i, &e));
        bool ok = refuted(e.verdict) == negative;
        good += ok;
        if (!negative && o.exhaustive && e.verdict == SCL_PASSED_FRESH_ATOMS) ++fresh_only;
        if (c.json) {
            nlohmann::ordered_json row{{"name", e.name}, {"lhs", e.lhs}, {"rhs", e.rhs},
                                       {"mode", mode_name(e.mode)}, {"verdict", verdict_name(e.verdict)},
                                       {"as_expected", ok}};
            if (o.exhaustive) {
                row["k"] = e.k;
                row["count"] = e.count;
            }
            if (*e.note) row["note"] = e.note;
            if (e.witness) {
                row["witness"] = {{"substitution", e.witness}, {"lhs", e.witness_lhs_form},
                                  {"rhs", e.witness_rhs_form}};
            }
            rows.push_back(std::move(row));
            continue;
        }
        if (!ok || c.verbose) {
            std::cout << (ok ? "  " : "! ") << e.name << ": " << e.lhs << " = " << e.rhs << "  [" << mode_name(e.mode)
                      << "] " << verdict_name(e.verdict);
            if (o.exhaustive && e.k > 0) std::cout << ", k=" << e.k << ", " << e.count << " instantiations";
            std::cout << "\n";
            if (*e.note) std::cout << "    note: " << e.note << "\n";
            if (e.witness) {
                std::cout << "    witness: " << e.witness << "\n    lhs: " << e.witness_lhs_form
                          << "\n    rhs: " << e.witness_rhs_form << "\n";
            }
        }
    }

    std::string strategy = o.exhaustive ? "exhaustive k=" + std::to_string(o.k) : "fresh-atoms";
    std::string summary = std::to_string(good) + "/" + std::to_string(n);
    if (negative) {
        summary += good == n ? " refuted (as expected)" : " refuted (" + std::to_string(n - good) + " unexpectedly passed)";
    } else {
        summary += " passed (" + strategy;
        if (fresh_only > 0) summary += ", " + std::to_string(fresh_only) + " fresh-atoms only: budget exceeded";
        summary += ")";
    }
    if (c.json) {
        json_out.push_back({{"table", table}, {"strategy", strategy}, {"expect_refuted", negative},
                            {"summary", summary}, {"results", rows}});
    } else {
        if (c.verbose || !c.single_table) std::cout << table << ": ";
        std::cout << summary << "\n";
    }
    return good == n ? kOk : kDiffers;
}

int cmd_check(const std::vector<std::string>& tables, Config c) {
    std::vector<std::string> names = tables;
    if (names.size() == 1 && names[0] == "all") {
        names.clear();
        for (std::size_t i = 0; i < scl_table_count(); ++i) names.emplace_back(scl_table_name(i));
    }
    c.single_table = names.size() == 1;
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    int code = kOk;
    for (const std::string& t : names) {
        if (check_one(t, c, out) != kOk) code = kDiffers;
    }
    if (c.json) std::cout << out.dump(2) << "\n";
    return code;
}

int run(int argc, char** argv) {
    CLI::App app{"Normalize, compare and check terms of short-circuit logic"};
    app.require_subcommand(1);
    app.fallthrough();
    Config c;

    auto* free_flag = app.add_flag("--free", c.free, "free valuation congruence (basic forms)");
    auto* mem_flag = app.add_flag("--mem", c.mem, "memorising valuation congruence (default)");
    free_flag->excludes(mem_flag);
    app.add_flag("--three-valued", c.three_valued, "admit U in axiom tables");
    auto* json = app.add_flag("--json", c.json, "JSON output");
    auto* text = app.add_flag("--text", c.text, "text output (default)");
    auto* dot = app.add_flag("--dot", c.dot, "Graphviz output for normal forms");
    json->excludes(text)->excludes(dot);
    text->excludes(dot);
    app.add_flag("--ascii", c.ascii, "ASCII connectives instead of unicode");
    app.add_flag("--primes", c.primes, "print x ~& T as x'");

    std::string e1, e2, val;
    std::vector<std::string> tables;
    int code = kOk;

    auto* norm = app.add_subcommand("norm", "print the basic form (--free) or mem-basic form (--mem)");
    norm->add_option("EXPR", e1, "term, or - for stdin")->required();
    auto* eq = app.add_subcommand("eq", "decide congruence; exit 1 when the normal forms differ");
    eq->add_option("EXPR1", e1)->required();
    eq->add_option("EXPR2", e2)->required();
    auto* dual = app.add_subcommand("dual", "print the dual term");
    dual->add_option("EXPR", e1)->required();
    auto* eval = app.add_subcommand("eval", "evaluate under a valuation");
    eval->add_option("EXPR", e1)->required();
    eval->add_option("--val", val, "valuation, e.g. a=1,b=0")->required();
    auto* to_nand = app.add_subcommand("to-nand", "express !, &&, || with ~&");
    to_nand->add_option("EXPR", e1)->required();
    auto* from_nand = app.add_subcommand("from-nand", "express ~& with ! and &&");
    from_nand->add_option("EXPR", e1)->required();
    auto* munbf = app.add_subcommand("munbf", "print the memorising U-NAND basic form");
    munbf->add_option("EXPR", e1)->required();
    auto* tree = app.add_subcommand("tree", "print the normal form as a decision tree (DOT by default)");
    tree->add_option("EXPR", e1)->required();
    auto* axioms = app.add_subcommand("axioms", "built-in equation tables");
    axioms->require_subcommand(1);
    auto* list = axioms->add_subcommand("list", "list the tables");
    auto* check_cmd = axioms->add_subcommand("check", "check tables (or 'all') semantically");
    check_cmd->add_option("TABLE", tables)->required();
    check_cmd->add_option("--exhaustive", c.exhaustive, "also sweep all mem-basic forms over k atoms");
    check_cmd->add_option("--budget", c.budget, "evaluation budget per schema for the sweep");
    check_cmd->add_flag("-v,--verbose", c.verbose, "one line per schema");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    if (check_cmd->count("--exhaustive") > 0 && (c.exhaustive < 1 || c.exhaustive > 3)) {
        usage("--exhaustive takes k in 1..3");
    }
    if (c.dot && !(norm->parsed() || tree->parsed() || munbf->parsed())) {
        usage("--dot applies only to norm, tree and munbf");
    }

    if (norm->parsed()) code = cmd_norm(e1, c);
    if (eq->parsed()) code = cmd_eq(e1, e2, c);
    if (dual->parsed()) code = cmd_rewrite(e1, c, scl_dual);
    if (eval->parsed()) code = cmd_eval(e1, val, c);
    if (to_nand->parsed()) code = cmd_rewrite(e1, c, scl_encode_nand);
    if (from_nand->parsed()) code = cmd_rewrite(e1, c, scl_decode_nand);
    if (munbf->parsed()) code = cmd_munbf(e1, c);
    if (tree->parsed()) {
        if (!c.json && !c.text) c.dot = true;
        code = cmd_norm(e1, c);
    }
    if (list->parsed()) code = cmd_list(c);
    if (check_cmd->parsed()) code = cmd_check(tables, c);
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Exit& e) {
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "sclc: internal error: " << e.what() << "\n";
        return kInternal;
    }
}
