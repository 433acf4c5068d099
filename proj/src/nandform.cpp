#include "scl/nandform.hpp"

#include <json.hpp>
#include <unordered_map>

#include "scl/errors.hpp"

namespace scl {

namespace {

using Memo = std::unordered_map<const void*, Munbf>;

// Leaf-preserving transcription between the two tree types.
template <class To, class From>
To transcribe(const From& p, std::unordered_map<const void*, To>& memo) {
    switch (p.kind()) {
        case From::Kind::True: return To::leaf_t();
        case From::Kind::False: return To::leaf_f();
        case From::Kind::Undef: return To::leaf_u();
        case From::Kind::Node: break;
    }
    auto it = memo.find(p.identity());
    if (it != memo.end()) {
        return it->second;
    }
    To out = To::node(p.atom(), transcribe<To>(p.on_true(), memo), transcribe<To>(p.on_false(), memo));
    memo.emplace(p.identity(), out);
    return out;
}

Munbf assume_rec(const Munbf& p, const Atom& a, bool value, Memo& memo) {
    if (p.is_leaf()) {
        return p;
    }
    auto it = memo.find(p.identity());
    if (it != memo.end()) {
        return it->second;
    }
    Munbf out = p.atom() == a ? (value ? p.on_true() : p.on_false())
                              : Munbf::node(p.atom(), assume_rec(p.on_true(), a, value, memo),
                                            assume_rec(p.on_false(), a, value, memo));
    memo.emplace(p.identity(), out);
    return out;
}

Munbf combine(const Munbf& p, const Munbf& q) {
    switch (p.kind()) {
        case Munbf::Kind::True: return complement_leaves(q);
        case Munbf::Kind::False: return Munbf::leaf_t();
        case Munbf::Kind::Undef: return Munbf::leaf_u();
        case Munbf::Kind::Node: break;
    }
    const Atom& a = p.atom();
    return Munbf::node(a, assume(combine(p.on_true(), q), a, true),
                       assume(combine(p.on_false(), q), a, false));
}

class NandBuilder {
public:
    Munbf operator()(const Term& t) {
        auto it = memo_.find(t.identity());
        if (it != memo_.end()) {
            return it->second;
        }
        Munbf out = build(t);
        memo_.emplace(t.identity(), out);
        return out;
    }

private:
    Munbf build(const Term& t) {
        switch (t.op()) {
            case Op::True: return Munbf::leaf_t();
            case Op::False: return Munbf::leaf_f();
            case Op::Undef: return Munbf::leaf_u();
            case Op::Atom: return Munbf::node(Atom(t.name()), Munbf::leaf_t(), Munbf::leaf_f());
            case Op::Var: throw OpenTermError(t.name());
            case Op::Nand: return combine((*this)(t.child(0)), (*this)(t.child(1)));
            default:
                throw UnsupportedConnective(
                    "nand_nf: only T, F, U, atoms and ~& are accepted; run to-nand first");
        }
    }

    std::unordered_map<const void*, Munbf> memo_;
};

}  // namespace

Munbf assume(const Munbf& p, const Atom& a, bool value) {
    Memo memo;
    return assume_rec(p, a, value, memo);
}

Munbf complement_leaves(const Munbf& p) {
    Memo memo;
    auto go = [&](auto&& self, const Munbf& n) -> Munbf {
        switch (n.kind()) {
            case Munbf::Kind::True: return Munbf::leaf_f();
            case Munbf::Kind::False: return Munbf::leaf_t();
            case Munbf::Kind::Undef: return n;
            case Munbf::Kind::Node: break;
        }
        auto it = memo.find(n.identity());
        if (it != memo.end()) {
            return it->second;
        }
        Munbf out = Munbf::node(n.atom(), self(self, n.on_true()), self(self, n.on_false()));
        memo.emplace(n.identity(), out);
        return out;
    };
    return go(go, p);
}

Munbf nand_nf(const Term& t) {
    if (!t.is_closed()) {
        std::vector<std::string> vars = variables_of(t);
        throw OpenTermError(vars.front());
    }
    Munbf out = NandBuilder()(t);
    if (!is_munbf(out)) {
        throw InvariantError("nand_nf produced a tree that is not an mUNBF");
    }
    return out;
}

Munbf to_munbf(const MemBasicForm& p) {
    std::unordered_map<const void*, Munbf> memo;
    return transcribe<Munbf>(p.form(), memo);
}

MemBasicForm from_munbf(const Munbf& q) {
    std::unordered_map<const void*, BasicForm> memo;
    return MemBasicForm(transcribe<BasicForm>(q, memo));
}

bool is_munbf(const Munbf& q) { return is_path_distinct(q); }

Term render(const Munbf& q) {
    std::unordered_map<const void*, Term> memo;
    auto go = [&](auto&& self, const Munbf& n) -> Term {
        switch (n.kind()) {
            case Munbf::Kind::True: return Term::t();
            case Munbf::Kind::False: return Term::f();
            case Munbf::Kind::Undef: return Term::u();
            case Munbf::Kind::Node: break;
        }
        auto it = memo.find(n.identity());
        if (it != memo.end()) {
            return it->second;
        }
        Term a = Term::atom(n.atom());
        Term out = Term::lnand(Term::lnand(a, self(self, n.on_true())),
                               Term::lnand(Term::lnand(a, Term::t()), self(self, n.on_false())));
        memo.emplace(n.identity(), out);
        return out;
    };
    return go(go, q);
}

namespace {

nlohmann::ordered_json munbf_json(const Munbf& q) {
    switch (q.kind()) {
        case Munbf::Kind::True: return {{"leaf", "T"}};
        case Munbf::Kind::False: return {{"leaf", "F"}};
        case Munbf::Kind::Undef: return {{"leaf", "U"}};
        case Munbf::Kind::Node: break;
    }
    nlohmann::ordered_json j;
    j["nnode"] = q.atom().name();
    j["t"] = munbf_json(q.on_true());
    j["f"] = munbf_json(q.on_false());
    return j;
}

}  // namespace

std::string to_json(const Munbf& q) { return munbf_json(q).dump(); }

}  // namespace scl
