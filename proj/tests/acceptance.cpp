// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "scl/axioms.hpp"
#include "scl/congruence.hpp"
#include "scl/nandform.hpp"
#include "scl/normalform.hpp"
#include "scl/syntax.hpp"
#include "scl/translate.hpp"
#include "support.hpp"

using namespace scl;

namespace {

const Mode kFree{Congruence::Free, false};
const Mode kMem{Congruence::Mem, false};
const Mode kMemU{Congruence::Mem, true};

struct Outcome {
    bool ok = true;
    std::string detail;
};

// Records the first failure and keeps a count.
struct Tally {
    int checked = 0;
    int failed = 0;
    std::string first;

    void expect(bool cond, const std::string& what) {
        ++checked;
        if (cond) return;
        if (failed++ == 0) first = what;
    }
    Outcome outcome(const std::string& summary) const {
        std::ostringstream s;
        s << summary << "; " << checked << " checks, " << failed << " failures";
        if (failed) s << "; first: " << first;
        return {failed == 0, s.str()};
    }
};

std::vector<Atom> atoms_of_both(const Term& p, const Term& q) {
    std::vector<Atom> as = atoms_of(p);
    for (const Atom& a : atoms_of(q)) {
        if (std::find(as.begin(), as.end(), a) == as.end()) as.push_back(a);
    }
    return as;
}

Outcome ac1() {
    test::Gen g(1001);
    auto as = test::atoms(4);
    Tally t;
    for (int i = 0; i < 1000; ++i) {
        BasicForm p = g.basic_form(as, 8);
        t.expect(bf(render(p)) == p, print(render(p)));
    }
    return t.outcome("bf(render(p)) == p on 1000 basic forms over 4 atoms, height <= 8");
}

Outcome ac2() {
    test::Gen g(1002);
    auto as = test::atoms(4);
    Tally t;
    for (int i = 0; i < 1000; ++i) {
        Term x = g.term(test::Signature::Full, as, 6, i % 2 == 1);
        MemBasicForm m = mbf(x);
        t.expect(is_mem_basic(m.form()), "not mem-basic: " + print(x));
        t.expect(mbf(render(m.form())) == m, "not idempotent: " + print(x));
        // The mem oracle shares no code with mbf.
        t.expect(test::show(m.form()) == test::oracle_mbf_key(x), "oracle disagrees: " + print(x));
    }
    return t.outcome("mbf membership, idempotence and oracle agreement on 1000 terms over 4 atoms, height <= 6");
}

Outcome ac3() {
    Term source = parse("((F <| a |> T) <| b |> F) <| a |> F");
    Term expected = parse("(F <| b |> F) <| a |> F");
    Tally t;
    BasicForm got = mbf(source).form();
    t.expect(got == bf(expected), "mbf gives " + print(render(got)));
    t.expect(render(got) == expected, "rendered as " + print(render(got)));
    return t.outcome("mbf of the worked example is " + print(expected));
}

Outcome ac4() {
    Tally t;
    int schemas = 0;
    std::uint64_t covered = 0;
    for (const SchemaTable& table : builtin_tables()) {
        if (table.expect_refuted) continue;
        for (const Schema& s : table.schemas) {
            ++schemas;
            Mode m = s.mode.value_or(table.mode);
            std::string tag = table.name + "/" + s.name;
            CheckResult fresh = check_schema(s, m, Strategy::fresh_atoms());
            t.expect(fresh.verdict == Verdict::PassedFreshAtoms, tag + " fresh: " + to_string(fresh.verdict));
            CheckResult ex = check_schema(s, m, Strategy::exhaustive(2));
            t.expect(ex.verdict == Verdict::PassedExhaustive,
                     tag + " exhaustive: " + to_string(ex.verdict) + (ex.note.empty() ? "" : " (" + ex.note + ")"));
            covered += ex.count;
        }
    }
    return t.outcome(std::to_string(schemas) + " positive schemas, fresh atoms and exhaustive k=2, " +
                     std::to_string(covered) + " instances covered");
}

Outcome ac5() {
    Tally t;
    const SchemaTable* neg = find_table("negative");
    t.expect(neg && neg->expect_refuted && neg->schemas.size() == 3, "negative table missing");
    if (!neg) return t.outcome("negative table");
    for (const Schema& s : neg->schemas) {
        Mode m = s.mode.value_or(neg->mode);
        CheckResult r = check_schema(s, m, Strategy::fresh_atoms());
        t.expect(r.verdict == Verdict::RefutedByFreshAtoms && r.witness.has_value(), s.name + " not refuted");
        if (!r.witness) continue;
        auto [l, rr] = instantiate(s, r.witness->substitution);
        if (m.congruence == Congruence::Mem) {
            auto as = atoms_of_both(l, rr);
            t.expect(test::trace_signature(l, as) != test::trace_signature(rr, as), s.name + ": traces agree");
            t.expect(test::show(r.witness->lhs_form) == test::oracle_mbf_key(l), s.name + ": lhs form");
            t.expect(test::show(r.witness->rhs_form) == test::oracle_mbf_key(rr), s.name + ": rhs form");
        } else {
            t.expect(test::oracle_bf_key(l) != test::oracle_bf_key(rr), s.name + ": fold oracle agrees");
            t.expect(test::show(r.witness->lhs_form) == test::oracle_bf_key(l), s.name + ": lhs form");
            t.expect(test::show(r.witness->rhs_form) == test::oracle_bf_key(rr), s.name + ": rhs form");
        }
    }
    return t.outcome("negative schemas refuted, witnesses re-checked by oracles");
}

Outcome ac6() {
    Tally t;
    auto as2 = test::atoms(2);
    auto pool = test::all_scl_terms(as2, 3);
    // Equal forms must have equal traces and vice versa, so the two
    // partitions of the pool must coincide; that decides every pair.
    std::map<std::string, std::string> by_form, by_trace;
    for (const Term& x : pool) {
        std::string f = test::show(normalize(x, kMem));
        std::string s = test::trace_signature(x, as2);
        auto i = by_form.emplace(f, s).first;
        auto j = by_trace.emplace(s, f).first;
        t.expect(i->second == s && j->second == f, "pool: " + print(x));
    }
    std::size_t classes = by_form.size();

    test::Gen g(1006);
    auto as3 = test::atoms(3);
    int agreed_equal = 0;
    const std::vector<std::function<Term(const Term&)>> rewrites{
        [](const Term& x) { return render(mbf(x).form()); },
        [](const Term& x) { return Term::negate(Term::negate(x)); },
        [](const Term& x) { return Term::conj(Term::t(), x); },
        [](const Term& x) { return to_core(x); },
        [](const Term& x) { return decode_nand(encode_nand(x)); },
    };
    for (int i = 0; i < 10000; ++i) {
        Term p = g.term(test::Signature::Scl, as3, 6);
        Term q = i % 2 ? g.term(test::Signature::Scl, as3, 6) : rewrites[(i / 2) % rewrites.size()](p);
        auto as = test::atoms(3);
        bool e = equiv(p, q, kMem);
        bool oracle = test::trace_signature(p, as) == test::trace_signature(q, as);
        t.expect(e == oracle, print(p) + " / " + print(q));
        agreed_equal += e && oracle;
    }
    return t.outcome(std::to_string(pool.size()) + " pool terms in " + std::to_string(classes) +
                     " classes, 10000 deeper pairs (" + std::to_string(agreed_equal) + " equal)");
}

Outcome ac7() {
    Tally t;
    test::Gen g(1007);
    auto as = test::atoms(3);
    for (int i = 0; i < 1000; ++i) {
        Term x = g.term(test::Signature::SclNoConst, as, 6);
        t.expect(equiv(decode_nand(encode_nand(x)), x, kMem), "roundtrip: " + print(x));
    }
    for (int i = 0; i < 1000; ++i) {
        Term x = g.term(test::Signature::Nand, as, 6, true);
        t.expect(nand_nf(x) == to_munbf(mbf(to_core(decode_nand(x)))), "route: " + print(x));
    }
    auto forms = enumerate_mem_forms(test::atoms(2), true);
    // Counted independently: c(0) = 3 leaves, c(1) = 3 + 3^2, each atom
    // of two rooting a pair of one-atom forms over the other.
    std::size_t c1 = 3 + 3 * 3;
    std::size_t c2 = 3 + 2 * c1 * c1;
    std::set<std::string> distinct;
    for (const BasicForm& p : forms) distinct.insert(test::show(p));
    t.expect(forms.size() == 291 && c2 == 291 && distinct.size() == 291,
             "enumeration gives " + std::to_string(forms.size()) + " forms");
    for (const BasicForm& p : forms) {
        MemBasicForm m(p);
        Munbf q = to_munbf(m);
        t.expect(is_munbf(q) && from_munbf(q) == m && to_munbf(from_munbf(q)) == q, "bijection: " + test::show(p));
    }
    return t.outcome("roundtrip x1000, route commutation x1000, bijection on all 291 forms");
}

Outcome ac8() {
    Tally t;
    test::Gen g(1008);
    auto as = test::atoms(3);
    for (int i = 0; i < 1000; ++i) {
        Term x = g.term(test::Signature::Full, as, 6, true);
        t.expect(dual(dual(x)) == x, "involution: " + print(x));
    }
    int equal = 0;
    for (const Mode& m : {kFree, kMem}) {
        for (int i = 0; i < 1000; ++i) {
            Term p = g.term(test::Signature::Full, as, 4, true);
            Term q = i % 4 == 0   ? Term::disj(Term::f(), p)
                     : i % 4 == 1 ? render(normalize(p, m))
                                  : g.term(test::Signature::Full, as, 4, true);
            bool e = equiv(p, q, m);
            equal += e;
            t.expect(e == equiv(dual(p), dual(q), m), describe(m) + ": " + print(p) + " / " + print(q));
        }
    }
    return t.outcome("involution x1000, preservation on 1000 pairs per mode (" + std::to_string(equal) + " equal)");
}

Outcome run_schemas(const std::string& table, const std::vector<std::string>& names, const Mode& mode) {
    Tally t;
    const SchemaTable* tab = find_table(table);
    for (const std::string& n : names) {
        const Schema* s = nullptr;
        if (tab) {
            for (const Schema& x : tab->schemas) {
                if (x.name == n) s = &x;
            }
        }
        t.expect(s != nullptr, table + "/" + n + " missing");
        if (!s) continue;
        CheckResult fresh = check_schema(*s, mode, Strategy::fresh_atoms());
        t.expect(fresh.verdict == Verdict::PassedFreshAtoms, n + " fresh: " + to_string(fresh.verdict));
        CheckResult ex = check_schema(*s, mode, Strategy::exhaustive(2));
        t.expect(ex.verdict == Verdict::PassedExhaustive, n + " exhaustive: " + to_string(ex.verdict) + " " + ex.note);
    }
    std::string joined;
    for (const std::string& n : names) joined += (joined.empty() ? "" : ", ") + n;
    return t.outcome(joined + " under " + describe(mode));
}

Outcome ac9() {
    return run_schemas("U-consequences", {"U-and", "U-or", "U-iff", "F-and-U", "F-nand-U"}, kMemU);
}

Outcome ac10() {
    Outcome a = run_schemas("EqMSCL-lI-consequences",
                            {"iff-assoc", "iff-assoc-step1", "iff-assoc-step2", "iff-assoc-step3", "iff-assoc-step4"},
                            kMem);
    Outcome b = run_schemas("EqMSCL-consequences", {"F9", "F9-step1", "F9-step2", "F9-step3", "F9-step4"}, kMem);
    return {a.ok && b.ok, a.detail + " | " + b.detail};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, Outcome (*)()>> criteria{
        {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4}, {"AC5", ac5},
        {"AC6", ac6}, {"AC7", ac7}, {"AC8", ac8}, {"AC9", ac9}, {"AC10", ac10},
    };
    int failures = 0;
    for (const auto& [name, fn] : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %s (%.1fs): %s\n", o.ok ? "PASS" : "FAIL", name, secs, o.detail.c_str());
        failures += !o.ok;
    }
    return failures == 0 ? 0 : 1;
}
