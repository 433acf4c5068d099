#include "scl/translate.hpp"

#include <unordered_map>

#include "scl/errors.hpp"

namespace scl {

namespace {

const char* op_name(Op op) {
    switch (op) {
        case Op::Cond: return "conditional";
        case Op::Not: return "negation";
        case Op::And: return "&&";
        case Op::Or: return "||";
        case Op::Iff: return "<->";
        case Op::Xor: return "^^";
        case Op::Nand: return "~&";
        case Op::Nor: return "~|";
        default: return "leaf";
    }
}

// Bottom-up rewrite memoized on node identity, so shared subterms stay shared.
template <class F>
class Rewriter {
public:
    explicit Rewriter(F step) : step_(std::move(step)) {}

    Term operator()(const Term& t) {
        auto it = memo_.find(t.identity());
        if (it != memo_.end()) {
            return it->second;
        }
        Term out = step_(*this, t);
        memo_.emplace(t.identity(), out);
        return out;
    }

private:
    F step_;
    std::unordered_map<const void*, Term> memo_;
};

template <class F>
Term rewrite(const Term& t, F step) {
    Rewriter<F> r(std::move(step));
    return r(t);
}

Term core_not(Term x) { return Term::cond(Term::f(), std::move(x), Term::t()); }

}  // namespace

Term to_core(const Term& t) {
    return rewrite(t, [](auto& self, const Term& n) -> Term {
        switch (n.op()) {
            case Op::True:
            case Op::False:
            case Op::Undef:
            case Op::Atom:
            case Op::Var:
                return n;
            case Op::Cond:
                return Term::cond(self(n.child(0)), self(n.child(1)), self(n.child(2)));
            case Op::Not:
                return core_not(self(n.child(0)));
            default:
                break;
        }
        Term x = self(n.child(0));
        Term y = self(n.child(1));
        switch (n.op()) {
            case Op::And: return Term::cond(y, x, Term::f());
            case Op::Or: return Term::cond(Term::t(), x, y);
            case Op::Iff: return Term::cond(y, x, core_not(y));
            case Op::Xor: {
                Term ny = core_not(y);
                return Term::cond(ny, x, core_not(ny));
            }
            case Op::Nand: return Term::cond(core_not(y), x, Term::t());
            case Op::Nor: return Term::cond(Term::f(), x, core_not(y));
            default: return n;
        }
    });
}

Term encode_nand(const Term& t) {
    return rewrite(t, [](auto& self, const Term& n) -> Term {
        switch (n.op()) {
            case Op::True:
            case Op::False:
            case Op::Undef:
            case Op::Atom:
            case Op::Var:
                return n;
            case Op::Not:
                return Term::lnand(self(n.child(0)), Term::t());
            case Op::And:
                return Term::lnand(Term::lnand(self(n.child(0)), self(n.child(1))), Term::t());
            case Op::Or:
                return Term::lnand(Term::lnand(self(n.child(0)), Term::t()),
                                   Term::lnand(self(n.child(1)), Term::t()));
            case Op::Nand:
                return Term::lnand(self(n.child(0)), self(n.child(1)));
            default:
                throw UnsupportedConnective(std::string("encode_nand: cannot encode ") +
                                            op_name(n.op()) +
                                            "; normalize and use the munbf route instead");
        }
    });
}

Term decode_nand(const Term& t) {
    return rewrite(t, [](auto& self, const Term& n) -> Term {
        switch (n.op()) {
            case Op::True:
            case Op::False:
            case Op::Undef:
            case Op::Atom:
            case Op::Var:
                return n;
            case Op::Nand:
                return Term::negate(Term::conj(self(n.child(0)), self(n.child(1))));
            default:
                throw UnsupportedConnective(std::string("decode_nand: expected a ~& term, found ") +
                                            op_name(n.op()));
        }
    });
}

}  // namespace scl
