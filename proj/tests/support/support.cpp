#include "support.hpp"

#include <set>

#include "scl/congruence.hpp"

namespace scl::test {

namespace {

OPtr leaf(const char* s) { return std::make_shared<const OTree>(OTree{s, nullptr, nullptr}); }

const OPtr kT = leaf("T");
const OPtr kF = leaf("F");
const OPtr kU = leaf("U");

// The tree of t where a true outcome continues as p and a false one as q.
OPtr go(const Term& t, const OPtr& p, const OPtr& q) {
    switch (t.op()) {
        case Op::True: return p;
        case Op::False: return q;
        case Op::Undef: return kU;
        case Op::Atom: return std::make_shared<const OTree>(OTree{t.name(), p, q});
        case Op::Var: throw std::logic_error("oracle_bf on an open term");
        case Op::Cond: return go(t.child(1), go(t.child(0), p, q), go(t.child(2), p, q));
        case Op::Not: return go(t.child(0), q, p);
        default: break;
    }
    const Term& x = t.child(0);
    const Term& y = t.child(1);
    switch (t.op()) {
        case Op::And: return go(x, go(y, p, q), q);
        case Op::Or: return go(x, p, go(y, p, q));
        case Op::Iff: return go(x, go(y, p, q), go(y, q, p));
        case Op::Xor: return go(x, go(y, q, p), go(y, p, q));
        case Op::Nand: return go(x, go(y, q, p), p);
        case Op::Nor: return go(x, q, go(y, q, p));
        default: throw std::logic_error("oracle_bf: unknown operator");
    }
}

OPtr walk(const OPtr& p, std::map<std::string, bool>& known) {
    if (!p->t) return p;
    auto it = known.find(p->label);
    if (it != known.end()) return walk(it->second ? p->t : p->f, known);
    known[p->label] = true;
    OPtr l = walk(p->t, known);
    known[p->label] = false;
    OPtr r = walk(p->f, known);
    known.erase(p->label);
    return std::make_shared<const OTree>(OTree{p->label, l, r});
}

}  // namespace

std::string show(const OPtr& p) {
    if (!p->t) return p->label;
    return p->label + "(" + show(p->t) + "," + show(p->f) + ")";
}

OPtr oracle_bf(const Term& t) { return go(t, kT, kF); }

OPtr oracle_mf(const OPtr& p) {
    std::map<std::string, bool> known;
    return walk(p, known);
}

std::vector<Atom> atoms(int n) {
    std::vector<Atom> out;
    for (int i = 0; i < n; ++i) out.emplace_back(std::string(1, static_cast<char>('a' + i)));
    return out;
}

Term Gen::term(Signature sig, const std::vector<Atom>& as, int max_height, bool with_u) {
    if (max_height <= 1 || below(4) == 0) {
        if (sig == Signature::SclNoConst || below(3) != 0) return Term::atom(as[below(static_cast<int>(as.size()))]);
        int k = below(with_u ? 3 : 2);
        return k == 0 ? Term::t() : k == 1 ? Term::f() : Term::u();
    }
    auto sub = [&] { return term(sig, as, max_height - 1, with_u); };
    switch (sig) {
        case Signature::Full: {
            int k = below(8);
            if (k == 0) {
                Term x = sub(), y = sub(), z = sub();
                return Term::cond(x, y, z);
            }
            if (k == 1) return Term::negate(sub());
            static constexpr Op ops[] = {Op::And, Op::Or, Op::Iff, Op::Xor, Op::Nand, Op::Nor};
            Term x = sub();
            return Term::binary(ops[k - 2], x, sub());
        }
        case Signature::Scl:
        case Signature::SclNoConst: {
            int k = below(3);
            if (k == 0) return Term::negate(sub());
            Term x = sub();
            return k == 1 ? Term::conj(x, sub()) : Term::disj(x, sub());
        }
        case Signature::Nand: {
            Term x = sub();
            return Term::lnand(x, sub());
        }
    }
    return Term::t();
}

BasicForm Gen::basic_form(const std::vector<Atom>& as, int max_height, bool with_u) {
    if (max_height <= 1 || below(5) == 0) {
        int k = below(with_u ? 3 : 2);
        return k == 0 ? BasicForm::leaf_t() : k == 1 ? BasicForm::leaf_f() : BasicForm::leaf_u();
    }
    BasicForm l = basic_form(as, max_height - 1, with_u);
    BasicForm r = basic_form(as, max_height - 1, with_u);
    return BasicForm::node(as[below(static_cast<int>(as.size()))], l, r);
}

Term Gen::context(const Term& fill, const std::vector<Atom>& as, int max_height) {
    Term out = fill;
    int layers = 1 + below(3);
    for (int i = 0; i < layers; ++i) {
        Term other = term(Signature::Full, as, max_height);
        switch (below(5)) {
            case 0: out = Term::negate(out); break;
            case 1: out = Term::conj(out, other); break;
            case 2: out = Term::disj(other, out); break;
            case 3: out = Term::cond(other, out, term(Signature::Full, as, max_height)); break;
            default: out = Term::lnand(other, out); break;
        }
    }
    return out;
}

std::vector<Term> all_scl_terms(const std::vector<Atom>& as, int h) {
    std::vector<Term> base{Term::t(), Term::f()};
    for (const Atom& a : as) base.push_back(Term::atom(a));
    std::vector<Term> level = base;
    for (int i = 1; i < h; ++i) {
        std::vector<Term> next = base;
        for (const Term& x : level) next.push_back(Term::negate(x));
        for (const Term& x : level) {
            for (const Term& y : level) {
                next.push_back(Term::conj(x, y));
                next.push_back(Term::disj(x, y));
            }
        }
        level = std::move(next);
    }
    return level;
}

std::string trace_signature(const Term& t, const std::vector<Atom>& as) {
    std::string out;
    for (std::size_t bits = 0; bits < (std::size_t{1} << as.size()); ++bits) {
        Valuation v;
        for (std::size_t i = 0; i < as.size(); ++i) v[as[i]] = (bits >> i) & 1;
        Trace tr = trace_eval(t, v);
        out += to_string(tr.value);
        for (const Atom& a : tr.inspected) out += " " + a.name();
        out += ";";
    }
    return out;
}

}  // namespace scl::test
