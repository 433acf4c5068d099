#include "scl/axioms.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "exhaustive.hpp"
#include "scl/errors.hpp"
#include "scl/syntax.hpp"
#include "scl/translate.hpp"

namespace scl {

const char* to_string(Signature s) {
    switch (s) {
        case Signature::Cp: return "CP";
        case Signature::Scl: return "SCL";
        case Signature::SclIff: return "SCL+liff";
        case Signature::SclIffXor: return "SCL+liff+lxor";
        case Signature::Nand: return "lnand";
        case Signature::Mixed: return "mixed";
    }
    return "?";
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::PassedFreshAtoms: return "passed (fresh atoms)";
        case Verdict::PassedExhaustive: return "passed (exhaustive)";
        case Verdict::RefutedByFreshAtoms: return "refuted (fresh atoms)";
        case Verdict::RefutedExhaustive: return "refuted (exhaustive)";
    }
    return "?";
}

bool is_refuted(Verdict v) { return v == Verdict::RefutedByFreshAtoms || v == Verdict::RefutedExhaustive; }

std::pair<Term, Term> instantiate(const Schema& s, const Substitution& sub) {
    auto apply = [&](const Term& t) {
        std::unordered_map<const void*, Term> memo;
        auto go = [&](auto&& self, const Term& n) -> Term {
            if (n.is_closed()) {
                return n;
            }
            auto it = memo.find(n.identity());
            if (it != memo.end()) {
                return it->second;
            }
            Term out = n;
            switch (n.op()) {
                case Op::Var: {
                    auto b = sub.find(n.name());
                    if (b == sub.end()) {
                        throw MissingBindingError(n.name());
                    }
                    out = b->second;
                    break;
                }
                case Op::Cond:
                    out = Term::cond(self(self, n.child(0)), self(self, n.child(1)), self(self, n.child(2)));
                    break;
                case Op::Not:
                    out = Term::negate(self(self, n.child(0)));
                    break;
                default:
                    out = Term::binary(n.op(), self(self, n.child(0)), self(self, n.child(1)));
                    break;
            }
            memo.emplace(n.identity(), out);
            return out;
        };
        return go(go, t);
    };
    return {apply(s.lhs), apply(s.rhs)};
}

namespace {

std::vector<std::string> schema_variables(const Schema& s) {
    std::vector<std::string> vars = variables_of(s.lhs);
    for (std::string& v : variables_of(s.rhs)) {
        if (std::find(vars.begin(), vars.end(), v) == vars.end()) {
            vars.push_back(std::move(v));
        }
    }
    std::sort(vars.begin(), vars.end());
    return vars;
}

std::vector<std::string> schema_atoms(const Schema& s) {
    std::vector<std::string> out;
    for (const Term* t : {&s.lhs, &s.rhs}) {
        for (const Atom& a : atoms_of(*t)) {
            if (std::find(out.begin(), out.end(), a.name()) == out.end()) {
                out.push_back(a.name());
            }
        }
    }
    return out;
}

bool allowed(Signature sig, Op op) {
    switch (op) {
        case Op::True:
        case Op::False:
        case Op::Undef:
        case Op::Atom:
        case Op::Var:
            return true;
        default:
            break;
    }
    switch (sig) {
        case Signature::Cp: return op == Op::Cond;
        case Signature::Scl: return op == Op::Not || op == Op::And || op == Op::Or;
        case Signature::SclIff: return op == Op::Not || op == Op::And || op == Op::Or || op == Op::Iff;
        case Signature::SclIffXor:
            return op == Op::Not || op == Op::And || op == Op::Or || op == Op::Iff || op == Op::Xor;
        case Signature::Nand: return op == Op::Nand;
        case Signature::Mixed: return true;
    }
    return false;
}

void check_signature(const Schema& s, const Mode& mode) {
    for (const Term* side : {&s.lhs, &s.rhs}) {
        if (!mode.three_valued && contains_op(*side, Op::Undef)) {
            throw SignatureError("schema " + s.name + " uses U; check it in three-valued mode");
        }
        for (Op op : {Op::Cond, Op::Not, Op::And, Op::Or, Op::Iff, Op::Xor, Op::Nand, Op::Nor}) {
            if (!allowed(s.signature, op) && contains_op(*side, op)) {
                throw SignatureError("schema " + s.name + " uses a connective outside its " +
                                     to_string(s.signature) + " signature");
            }
        }
    }
}

std::uint64_t power(std::uint64_t base, std::size_t exp, bool& saturated) {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && out > UINT64_MAX / base) {
            saturated = true;
            return UINT64_MAX;
        }
        out *= base;
    }
    return out;
}

}  // namespace

Substitution fresh_substitution(const Schema& s) {
    std::vector<std::string> taken = schema_atoms(s);
    Substitution sub;
    int next = 1;
    for (const std::string& var : schema_variables(s)) {
        std::string name;
        do {
            name = "v" + std::to_string(next++);
        } while (std::find(taken.begin(), taken.end(), name) != taken.end());
        sub.emplace(var, Term::atom(name));
    }
    return sub;
}

CheckResult check_schema(const Schema& s, const Mode& mode, const Strategy& strategy) {
    if (strategy.kind == Strategy::Kind::Exhaustive && (strategy.k < 1 || strategy.k > 3)) {
        throw std::invalid_argument("exhaustive atom budget must be between 1 and 3");
    }
    check_signature(s, mode);

    Substitution fresh = fresh_substitution(s);
    auto [l, r] = instantiate(s, fresh);
    BasicForm lf = normalize(l, mode);
    BasicForm rf = normalize(r, mode);
    if (!(lf == rf)) {
        return CheckResult{Verdict::RefutedByFreshAtoms, Witness{fresh, lf, rf}, 0, 0, {}};
    }
    if (strategy.kind == Strategy::Kind::FreshAtoms) {
        return CheckResult{Verdict::PassedFreshAtoms, std::nullopt, 0, 0, {}};
    }

    std::vector<std::string> vars = schema_variables(s);
    const detail::Domain& d = detail::domain(strategy.k, mode.three_valued, schema_atoms(s));
    CheckResult out{Verdict::PassedExhaustive, std::nullopt, strategy.k, 0, {}};
    bool saturated = false;

    if (mode.congruence == Congruence::Free) {
        // bf of an instance is the fresh-atom form with each fresh atom's
        // node replaced by the image's form (see graft), so equal fresh-atom
        // forms settle every tuple at once.
        out.count = power(d.forms.size(), vars.size(), saturated);
        out.note = "free congruence: all tuples covered by grafting onto the fresh-atom forms";
    } else {
        detail::SweepResult sw = detail::sweep(to_core(s.lhs), to_core(s.rhs), vars, d, strategy.budget);
        saturated = sw.saturated;
        out.count = sw.covered;
        if (sw.refuted) {
            Substitution sub;
            for (const auto& [var, f] : sw.witness) {
                sub.emplace(var, render(d.forms[f]));
            }
            auto [wl, wr] = instantiate(s, sub);
            BasicForm wlf = normalize(wl, mode);
            BasicForm wrf = normalize(wr, mode);
            if (wlf == wrf) {
                throw InvariantError("exhaustive sweep reported a counterexample that mbf does not confirm");
            }
            out.verdict = Verdict::RefutedExhaustive;
            out.witness = Witness{std::move(sub), wlf, wrf};
        } else if (sw.budget_exceeded) {
            out.verdict = Verdict::PassedFreshAtoms;
            out.note = "budget exceeded after " + std::to_string(sw.evaluations) +
                       " evaluations; exhaustive sweep incomplete";
        }
    }
    if (saturated) {
        out.note += out.note.empty() ? "" : "; ";
        out.note += "instantiation count saturated at 2^64-1";
    }
    return out;
}

}  // namespace scl
