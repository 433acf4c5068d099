#include "scl/normalform.hpp"

#include <json.hpp>
#include <unordered_map>

#include "scl/errors.hpp"

namespace scl {

namespace {

using Memo = std::unordered_map<const void*, BasicForm>;

void check_height(const BasicForm& p, std::size_t limit) {
    if (p.height() > limit) {
        throw DepthLimitError(limit);
    }
}

BasicForm subst_rec(const BasicForm& p, const BasicForm& q, const BasicForm& r, Memo& memo) {
    switch (p.kind()) {
        case BasicForm::Kind::True: return q;
        case BasicForm::Kind::False: return r;
        case BasicForm::Kind::Undef: return p;
        case BasicForm::Kind::Node: break;
    }
    auto it = memo.find(p.identity());
    if (it != memo.end()) {
        return it->second;
    }
    BasicForm out =
        BasicForm::node(p.atom(), subst_rec(p.on_true(), q, r, memo), subst_rec(p.on_false(), q, r, memo));
    memo.emplace(p.identity(), out);
    return out;
}

class BfBuilder {
public:
    explicit BfBuilder(std::size_t limit) : limit_(limit) {}

    BasicForm operator()(const Term& t) {
        auto it = memo_.find(t.identity());
        if (it != memo_.end()) {
            return it->second;
        }
        BasicForm out = build(t);
        memo_.emplace(t.identity(), out);
        return out;
    }

private:
    BasicForm sub(const BasicForm& p, const BasicForm& q, const BasicForm& r) const {
        BasicForm out = subst_tf(p, q, r, limit_);
        return out;
    }

    BasicForm negation(const BasicForm& x) const {
        return sub(x, BasicForm::leaf_f(), BasicForm::leaf_t());
    }

    BasicForm build(const Term& t) {
        switch (t.op()) {
            case Op::True: return BasicForm::leaf_t();
            case Op::False: return BasicForm::leaf_f();
            case Op::Undef: return BasicForm::leaf_u();
            case Op::Atom: return BasicForm::node(Atom(t.name()), BasicForm::leaf_t(), BasicForm::leaf_f());
            case Op::Var: throw OpenTermError(t.name());
            case Op::Cond: return sub((*this)(t.child(1)), (*this)(t.child(0)), (*this)(t.child(2)));
            case Op::Not: return negation((*this)(t.child(0)));
            default: break;
        }
        BasicForm x = (*this)(t.child(0));
        BasicForm y = (*this)(t.child(1));
        switch (t.op()) {
            case Op::And: return sub(x, y, BasicForm::leaf_f());
            case Op::Or: return sub(x, BasicForm::leaf_t(), y);
            case Op::Iff: return sub(x, y, negation(y));
            case Op::Xor: {
                BasicForm ny = negation(y);
                return sub(x, ny, negation(ny));
            }
            case Op::Nand: return sub(x, negation(y), BasicForm::leaf_t());
            case Op::Nor: return sub(x, BasicForm::leaf_f(), negation(y));
            default: throw InvariantError("bf: unhandled operator");
        }
    }

    std::size_t limit_;
    std::unordered_map<const void*, BasicForm> memo_;
};

BasicForm reduce_rec(const BasicForm& p, const Atom& a, Side side, Memo& memo) {
    if (p.is_leaf()) {
        return p;
    }
    auto it = memo.find(p.identity());
    if (it != memo.end()) {
        return it->second;
    }
    BasicForm out = p;
    if (p.atom() == a) {
        out = reduce_rec(side == Side::AssumeTrue ? p.on_true() : p.on_false(), a, side, memo);
    } else {
        BasicForm l = reduce_rec(p.on_true(), a, side, memo);
        BasicForm r = reduce_rec(p.on_false(), a, side, memo);
        if (l.identity() != p.on_true().identity() || r.identity() != p.on_false().identity()) {
            out = BasicForm::node(p.atom(), std::move(l), std::move(r));
        }
    }
    memo.emplace(p.identity(), out);
    return out;
}

// The keys here are fresh trees built by reduce, so the memo holds on to
// them; a freed key's address could otherwise come back as a different tree.
using PinnedMemo = std::unordered_map<const void*, std::pair<BasicForm, BasicForm>>;

BasicForm mf_rec(const BasicForm& p, PinnedMemo& memo) {
    if (p.is_leaf()) {
        return p;
    }
    auto it = memo.find(p.identity());
    if (it != memo.end()) {
        return it->second.second;
    }
    BasicForm out = BasicForm::node(p.atom(), mf_rec(reduce(p.on_true(), p.atom(), Side::AssumeTrue), memo),
                                    mf_rec(reduce(p.on_false(), p.atom(), Side::AssumeFalse), memo));
    memo.emplace(p.identity(), std::make_pair(p, out));
    return out;
}

std::string first_variable(const Term& t) {
    std::vector<std::string> vars = variables_of(t);
    return vars.empty() ? std::string("?") : vars.front();
}

}  // namespace

BasicForm subst_tf(const BasicForm& p, const BasicForm& q, const BasicForm& r, std::size_t depth_limit) {
    Memo memo;
    BasicForm out = subst_rec(p, q, r, memo);
    check_height(out, depth_limit);
    return out;
}

BasicForm bf(const Term& t, std::size_t depth_limit) {
    if (!t.is_closed()) {
        throw OpenTermError(first_variable(t));
    }
    if (t.height() > depth_limit) {
        throw DepthLimitError(depth_limit);
    }
    return BfBuilder(depth_limit)(t);
}

BasicForm reduce(const BasicForm& p, const Atom& a, Side side) {
    Memo memo;
    return reduce_rec(p, a, side, memo);
}

BasicForm mf(const BasicForm& p) {
    PinnedMemo memo;
    return mf_rec(p, memo);
}

bool is_mem_basic(const BasicForm& p) { return is_path_distinct(p); }

MemBasicForm::MemBasicForm(BasicForm p) : form_(std::move(p)) {
    if (!is_mem_basic(form_)) {
        throw InvariantError("tree repeats an atom on some path, so it is not a mem-basic form");
    }
}

MemBasicForm mbf(const Term& t, std::size_t depth_limit) {
    return MemBasicForm(mf(bf(t, depth_limit)));
}

Term render(const BasicForm& p) {
    std::unordered_map<const void*, Term> memo;
    auto go = [&](auto&& self, const BasicForm& n) -> Term {
        switch (n.kind()) {
            case BasicForm::Kind::True: return Term::t();
            case BasicForm::Kind::False: return Term::f();
            case BasicForm::Kind::Undef: return Term::u();
            case BasicForm::Kind::Node: break;
        }
        auto it = memo.find(n.identity());
        if (it != memo.end()) {
            return it->second;
        }
        Term out = Term::cond(self(self, n.on_true()), Term::atom(n.atom()), self(self, n.on_false()));
        memo.emplace(n.identity(), out);
        return out;
    };
    return go(go, p);
}

BasicForm graft(const BasicForm& p, const std::map<std::string, BasicForm>& images, std::size_t depth_limit) {
    Memo memo;
    auto go = [&](auto&& self, const BasicForm& n) -> BasicForm {
        if (n.is_leaf()) {
            return n;
        }
        auto it = memo.find(n.identity());
        if (it != memo.end()) {
            return it->second;
        }
        BasicForm l = self(self, n.on_true());
        BasicForm r = self(self, n.on_false());
        auto image = images.find(n.atom().name());
        BasicForm out = image == images.end() ? BasicForm::node(n.atom(), l, r)
                                              : subst_tf(image->second, l, r, depth_limit);
        memo.emplace(n.identity(), out);
        return out;
    };
    BasicForm out = go(go, p);
    check_height(out, depth_limit);
    return out;
}

std::vector<BasicForm> enumerate_mem_forms(const std::vector<Atom>& atoms, bool three_valued) {
    std::vector<BasicForm> out{BasicForm::leaf_t(), BasicForm::leaf_f()};
    if (three_valued) {
        out.push_back(BasicForm::leaf_u());
    }
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        std::vector<Atom> rest = atoms;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        std::vector<BasicForm> sub = enumerate_mem_forms(rest, three_valued);
        for (const BasicForm& l : sub) {
            for (const BasicForm& r : sub) {
                out.push_back(BasicForm::node(atoms[i], l, r));
            }
        }
    }
    return out;
}

namespace {

nlohmann::ordered_json form_json(const BasicForm& p) {
    switch (p.kind()) {
        case BasicForm::Kind::True: return {{"leaf", "T"}};
        case BasicForm::Kind::False: return {{"leaf", "F"}};
        case BasicForm::Kind::Undef: return {{"leaf", "U"}};
        case BasicForm::Kind::Node: break;
    }
    nlohmann::ordered_json j;
    j["atom"] = p.atom().name();
    j["t"] = form_json(p.on_true());
    j["f"] = form_json(p.on_false());
    return j;
}

}  // namespace

std::string to_json(const BasicForm& p) { return form_json(p).dump(); }

}  // namespace scl
