#include "scl/scl.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "scl/axioms.hpp"
#include "scl/errors.hpp"
#include "scl/nandform.hpp"
#include "scl/syntax.hpp"
#include "scl/translate.hpp"

struct scl_term {
    scl::Term term;
};

struct scl_form {
    std::variant<scl::BasicForm, scl::Munbf> form;
};

struct scl_report {
    struct Entry {
        std::string name, lhs, rhs, note;
        scl_verdict verdict;
        scl_mode mode;
        int k;
        std::uint64_t count;
        bool has_witness = false;
        std::string witness, witness_lhs, witness_rhs;
    };
    std::vector<Entry> entries;
    bool expect_refuted = false;
};

namespace {

thread_local std::string last_error;
thread_local std::size_t last_line = 0;
thread_local std::size_t last_column = 0;

scl_status fail(scl_status s, const std::string& message) {
    last_error = message;
    return s;
}

// Runs f, translating exceptions into status codes.
template <class F>
scl_status guarded(F&& f) {
    last_line = last_column = 0;
    try {
        f();
        return SCL_OK;
    } catch (const scl::ParseError& e) {
        last_line = e.line();
        last_column = e.column();
        return fail(SCL_ERR_PARSE, e.what());
    } catch (const scl::AtomCaseError& e) {
        last_line = e.line();
        last_column = e.column();
        return fail(SCL_ERR_ATOM_CASE, e.what());
    } catch (const scl::UnsupportedConnective& e) {
        return fail(SCL_ERR_UNSUPPORTED, e.what());
    } catch (const scl::OpenTermError& e) {
        return fail(SCL_ERR_OPEN_TERM, e.what());
    } catch (const scl::DepthLimitError& e) {
        return fail(SCL_ERR_DEPTH, e.what());
    } catch (const scl::UnboundAtomError& e) {
        return fail(SCL_ERR_UNBOUND_ATOM, e.what());
    } catch (const scl::MissingBindingError& e) {
        return fail(SCL_ERR_MISSING_BINDING, e.what());
    } catch (const scl::SignatureError& e) {
        return fail(SCL_ERR_SIGNATURE, e.what());
    } catch (const scl::InvariantError& e) {
        return fail(SCL_ERR_INVARIANT, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(SCL_ERR_USAGE, e.what());
    } catch (const std::bad_alloc&) {
        return fail(SCL_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(SCL_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(SCL_ERR_INTERNAL, "unknown exception");
    }
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

scl::Mode to_mode(scl_mode m) {
    return scl::Mode{m.congruence == SCL_FREE ? scl::Congruence::Free : scl::Congruence::Mem, m.three_valued != 0};
}

scl_mode from_mode(const scl::Mode& m) {
    return scl_mode{m.congruence == scl::Congruence::Free ? SCL_FREE : SCL_MEM, m.three_valued ? 1 : 0};
}

scl_verdict from_verdict(scl::Verdict v) {
    switch (v) {
        case scl::Verdict::PassedFreshAtoms: return SCL_PASSED_FRESH_ATOMS;
        case scl::Verdict::PassedExhaustive: return SCL_PASSED_EXHAUSTIVE;
        case scl::Verdict::RefutedByFreshAtoms: return SCL_REFUTED_FRESH_ATOMS;
        case scl::Verdict::RefutedExhaustive: return SCL_REFUTED_EXHAUSTIVE;
    }
    return SCL_PASSED_FRESH_ATOMS;
}

scl::Style term_style(scl_style s) {
    switch (s) {
        case SCL_STYLE_ASCII: return scl::Style::Ascii;
        case SCL_STYLE_UNICODE: return scl::Style::Unicode;
        case SCL_STYLE_JSON: return scl::Style::Json;
        default: throw std::invalid_argument("terms print as ascii, unicode or json");
    }
}

bool over_nand(const scl::Term& t) {
    for (scl::Op op : {scl::Op::Cond, scl::Op::Not, scl::Op::And, scl::Op::Or, scl::Op::Iff, scl::Op::Xor,
                       scl::Op::Nor}) {
        if (scl::contains_op(t, op)) return false;
    }
    return true;
}

template <class F>
scl_status make_term(const scl_term* t, scl_term** out, F&& f) {
    if (!t || !out) return fail(SCL_ERR_USAGE, "null argument");
    return guarded([&] { *out = new scl_term{f(t->term)}; });
}

}  // namespace

extern "C" {

const char* scl_version(void) { return "1.0.0"; }

const char* scl_status_name(scl_status s) {
    switch (s) {
        case SCL_OK: return "ok";
        case SCL_ERR_PARSE: return "parse error";
        case SCL_ERR_ATOM_CASE: return "atom case error";
        case SCL_ERR_UNSUPPORTED: return "unsupported connective";
        case SCL_ERR_OPEN_TERM: return "open term";
        case SCL_ERR_DEPTH: return "depth limit";
        case SCL_ERR_UNBOUND_ATOM: return "unbound atom";
        case SCL_ERR_MISSING_BINDING: return "missing binding";
        case SCL_ERR_SIGNATURE: return "signature error";
        case SCL_ERR_INVARIANT: return "invariant violation";
        case SCL_ERR_USAGE: return "usage error";
        case SCL_ERR_NOT_FOUND: return "not found";
        case SCL_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* scl_last_error(void) { return last_error.c_str(); }

void scl_last_error_position(size_t* line, size_t* column) {
    if (line) *line = last_line;
    if (column) *column = last_column;
}

void scl_string_free(char* s) { std::free(s); }

scl_status scl_parse(const char* text, scl_term** out) {
    if (!text || !out) return fail(SCL_ERR_USAGE, "null argument");
    return guarded([&] { *out = new scl_term{scl::parse(text)}; });
}

void scl_term_free(scl_term* t) { delete t; }

scl_status scl_term_print(const scl_term* t, scl_style style, int primes, char** out) {
    if (!t || !out) return fail(SCL_ERR_USAGE, "null argument");
    return guarded([&] { *out = dup(scl::print(t->term, scl::PrintOptions{term_style(style), primes != 0})); });
}

int scl_term_is_closed(const scl_term* t) { return t && t->term.is_closed() ? 1 : 0; }

scl_status scl_dual(const scl_term* t, scl_term** out) {
    return make_term(t, out, [](const scl::Term& x) { return scl::dual(x); });
}

scl_status scl_to_core(const scl_term* t, scl_term** out) {
    return make_term(t, out, [](const scl::Term& x) { return scl::to_core(x); });
}

scl_status scl_encode_nand(const scl_term* t, scl_term** out) {
    return make_term(t, out, [](const scl::Term& x) { return scl::encode_nand(x); });
}

scl_status scl_decode_nand(const scl_term* t, scl_term** out) {
    return make_term(t, out, [](const scl::Term& x) { return scl::decode_nand(x); });
}

scl_status scl_normalize(const scl_term* t, scl_mode mode, scl_form** out) {
    if (!t || !out) return fail(SCL_ERR_USAGE, "null argument");
    return guarded([&] {
        scl::BasicForm f = scl::normalize(t->term, to_mode(mode));
        if (mode.congruence == SCL_MEM && !scl::is_mem_basic(f)) {
            throw scl::InvariantError("normal form is not mem-basic");
        }
        *out = new scl_form{std::move(f)};
    });
}

scl_status scl_munbf(const scl_term* t, scl_form** out) {
    if (!t || !out) return fail(SCL_ERR_USAGE, "null argument");
    return guarded([&] {
        scl::Munbf via_mbf = scl::to_munbf(scl::mbf(t->term));
        if (over_nand(t->term)) {
            scl::Munbf direct = scl::nand_nf(t->term);
            if (!(direct == via_mbf)) {
                throw scl::InvariantError("direct NAND normal form disagrees with the mem-basic route");
            }
        }
        *out = new scl_form{std::move(via_mbf)};
    });
}

void scl_form_free(scl_form* f) { delete f; }

scl_status scl_form_print(const scl_form* f, scl_style style, int primes, char** out) {
    if (!f || !out) return fail(SCL_ERR_USAGE, "null argument");
    return guarded([&] {
        std::string s = std::visit(
            [&](const auto& form) -> std::string {
                using T = std::decay_t<decltype(form)>;
                if (style == SCL_STYLE_JSON) return scl::to_json(form);
                if (style == SCL_STYLE_DOT) {
                    if constexpr (std::is_same_v<T, scl::Munbf>) {
                        return scl::to_dot(scl::from_munbf(form).form());
                    } else {
                        return scl::to_dot(form);
                    }
                }
                return scl::print(scl::render(form), scl::PrintOptions{term_style(style), primes != 0});
            },
            f->form);
        *out = dup(s);
    });
}

int scl_form_equal(const scl_form* a, const scl_form* b) { return a && b && a->form == b->form ? 1 : 0; }

scl_status scl_equiv(const scl_term* p, const scl_term* q, scl_mode mode, int* out) {
    if (!p || !q || !out) return fail(SCL_ERR_USAGE, "null argument");
    return guarded([&] { *out = scl::equiv(p->term, q->term, to_mode(mode)) ? 1 : 0; });
}

scl_status scl_eval(const scl_term* t, const char* valuation, scl_truth* out) {
    if (!t || !valuation || !out) return fail(SCL_ERR_USAGE, "null argument");
    return guarded([&] {
        switch (scl::eval(t->term, scl::parse_valuation(valuation))) {
            case scl::Truth::True: *out = SCL_TRUE; break;
            case scl::Truth::False: *out = SCL_FALSE; break;
            case scl::Truth::Undef: *out = SCL_UNDEF; break;
        }
    });
}

size_t scl_table_count(void) { return scl::builtin_tables().size(); }

const char* scl_table_name(size_t i) {
    const auto& tables = scl::builtin_tables();
    return i < tables.size() ? tables[i].name.c_str() : nullptr;
}

scl_status scl_table_info(const char* name, const char** description, size_t* schemas, scl_mode* mode,
                          int* expect_refuted) {
    if (!name) return fail(SCL_ERR_USAGE, "null argument");
    const scl::SchemaTable* t = scl::find_table(name);
    if (!t) return fail(SCL_ERR_NOT_FOUND, std::string("no table named ") + name);
    if (description) *description = t->description.c_str();
    if (schemas) *schemas = t->schemas.size();
    if (mode) *mode = from_mode(t->mode);
    if (expect_refuted) *expect_refuted = t->expect_refuted ? 1 : 0;
    return SCL_OK;
}

scl_check_options scl_check_defaults(void) {
    scl_check_options o{};
    o.exhaustive = 0;
    o.k = 2;
    o.budget = 1'000'000;
    o.override_mode = 0;
    o.mode = scl_mode{SCL_MEM, 0};
    o.three_valued = 0;
    return o;
}

scl_status scl_check_table(const char* name, const scl_check_options* options, scl_report** out) {
    if (!name || !out) return fail(SCL_ERR_USAGE, "null argument");
    const scl::SchemaTable* t = scl::find_table(name);
    if (!t) return fail(SCL_ERR_NOT_FOUND, std::string("no table named ") + name);
    scl_check_options o = options ? *options : scl_check_defaults();
    return guarded([&] {
        auto report = std::make_unique<scl_report>();
        report->expect_refuted = t->expect_refuted;
        scl::Strategy strategy =
            o.exhaustive ? scl::Strategy::exhaustive(o.k, o.budget) : scl::Strategy::fresh_atoms();
        for (const scl::Schema& s : t->schemas) {
            scl::Mode mode = o.override_mode ? to_mode(o.mode) : s.mode.value_or(t->mode);
            // A table that needs U keeps three values whatever the override says.
            mode.three_valued = mode.three_valued || t->mode.three_valued || o.three_valued;
            scl::CheckResult r = scl::check_schema(s, mode, strategy);
            scl_report::Entry e;
            e.name = s.name;
            e.lhs = scl::print(s.lhs);
            e.rhs = scl::print(s.rhs);
            e.note = r.note;
            e.verdict = from_verdict(r.verdict);
            e.mode = from_mode(mode);
            e.k = r.k;
            e.count = r.count;
            if (r.witness) {
                e.has_witness = true;
                for (const auto& [var, term] : r.witness->substitution) {
                    if (!e.witness.empty()) e.witness += ", ";
                    e.witness += var + " = " + scl::print(term);
                }
                e.witness_lhs = scl::print(scl::render(r.witness->lhs_form));
                e.witness_rhs = scl::print(scl::render(r.witness->rhs_form));
            }
            report->entries.push_back(std::move(e));
        }
        *out = report.release();
    });
}

void scl_report_free(scl_report* r) { delete r; }

size_t scl_report_size(const scl_report* r) { return r ? r->entries.size() : 0; }

int scl_report_expect_refuted(const scl_report* r) { return r && r->expect_refuted ? 1 : 0; }

scl_status scl_report_entry_at(const scl_report* r, size_t i, scl_report_entry* out) {
    if (!r || !out) return fail(SCL_ERR_USAGE, "null argument");
    if (i >= r->entries.size()) return fail(SCL_ERR_USAGE, "report index out of range");
    const scl_report::Entry& e = r->entries[i];
    out->name = e.name.c_str();
    out->lhs = e.lhs.c_str();
    out->rhs = e.rhs.c_str();
    out->verdict = e.verdict;
    out->mode = e.mode;
    out->k = e.k;
    out->count = e.count;
    out->note = e.note.c_str();
    out->witness = e.has_witness ? e.witness.c_str() : nullptr;
    out->witness_lhs_form = e.has_witness ? e.witness_lhs.c_str() : nullptr;
    out->witness_rhs_form = e.has_witness ? e.witness_rhs.c_str() : nullptr;
    return SCL_OK;
}

}  // extern "C"
