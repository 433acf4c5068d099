#include "scl/term.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace scl {

namespace {

bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

Atom::Atom(std::string name) : name_(std::move(name)) {
    if (!is_valid(name_)) {
        throw std::invalid_argument("not an atom name: '" + name_ + "'");
    }
}

bool Atom::is_valid(std::string_view name) {
    if (name.empty() || !is_lower(name.front())) {
        return false;
    }
    return std::all_of(name.begin() + 1, name.end(),
                       [](char c) { return is_lower(c) || is_digit(c) || c == '_'; });
}

bool is_variable_name(std::string_view name) {
    if (name.empty() || !is_upper(name.front())) {
        return false;
    }
    if (name == "T" || name == "F" || name == "U") {
        return false;
    }
    return std::all_of(name.begin() + 1, name.end(), [](char c) {
        return is_lower(c) || is_upper(c) || is_digit(c) || c == '_';
    });
}

std::size_t arity(Op op) {
    switch (op) {
        case Op::True:
        case Op::False:
        case Op::Undef:
        case Op::Atom:
        case Op::Var:
            return 0;
        case Op::Not:
            return 1;
        case Op::Cond:
            return 3;
        default:
            return 2;
    }
}

bool is_binary(Op op) { return arity(op) == 2; }

struct Term::Node {
    Op op;
    std::string name;
    std::vector<Term> children;
    bool closed;
    std::size_t height;
};

Term Term::make(Op op, std::string name, std::vector<Term> children) {
    bool closed = op != Op::Var;
    std::size_t height = 0;
    for (const Term& c : children) {
        closed = closed && c.node_->closed;
        height = std::max(height, c.node_->height);
    }
    return Term(std::make_shared<const Node>(
        Node{op, std::move(name), std::move(children), closed, height + 1}));
}

Term Term::t() {
    static const Term k = make(Op::True, {}, {});
    return k;
}

Term Term::f() {
    static const Term k = make(Op::False, {}, {});
    return k;
}

Term Term::u() {
    static const Term k = make(Op::Undef, {}, {});
    return k;
}

Term Term::atom(const Atom& a) { return make(Op::Atom, a.name(), {}); }

Term Term::atom(std::string name) { return atom(Atom(std::move(name))); }

Term Term::var(std::string name) {
    if (!is_variable_name(name)) {
        throw std::invalid_argument("not a variable name: '" + name + "'");
    }
    return make(Op::Var, std::move(name), {});
}

Term Term::cond(Term then_branch, Term guard, Term else_branch) {
    return make(Op::Cond, {}, {std::move(then_branch), std::move(guard), std::move(else_branch)});
}

Term Term::negate(Term x) { return make(Op::Not, {}, {std::move(x)}); }
Term Term::conj(Term x, Term y) { return binary(Op::And, std::move(x), std::move(y)); }
Term Term::disj(Term x, Term y) { return binary(Op::Or, std::move(x), std::move(y)); }
Term Term::liff(Term x, Term y) { return binary(Op::Iff, std::move(x), std::move(y)); }
Term Term::lxor(Term x, Term y) { return binary(Op::Xor, std::move(x), std::move(y)); }
Term Term::lnand(Term x, Term y) { return binary(Op::Nand, std::move(x), std::move(y)); }
Term Term::lnor(Term x, Term y) { return binary(Op::Nor, std::move(x), std::move(y)); }

Term Term::binary(Op op, Term x, Term y) {
    if (!is_binary(op)) {
        throw std::invalid_argument("Term::binary called with a non-binary operator");
    }
    return make(op, {}, {std::move(x), std::move(y)});
}

Op Term::op() const { return node_->op; }
const std::string& Term::name() const { return node_->name; }
const Term& Term::child(std::size_t i) const { return node_->children.at(i); }
bool Term::is_closed() const { return node_->closed; }
std::size_t Term::height() const { return node_->height; }

bool Term::is_constant() const {
    return node_->op == Op::True || node_->op == Op::False || node_->op == Op::Undef;
}

bool operator==(const Term& a, const Term& b) {
    if (a.node_ == b.node_) {
        return true;
    }
    const Term::Node& x = *a.node_;
    const Term::Node& y = *b.node_;
    if (x.op != y.op || x.height != y.height || x.closed != y.closed || x.name != y.name) {
        return false;
    }
    for (std::size_t i = 0; i < x.children.size(); ++i) {
        if (!(x.children[i] == y.children[i])) {
            return false;
        }
    }
    return true;
}

Term dual(const Term& t) {
    switch (t.op()) {
        case Op::True:
            return Term::f();
        case Op::False:
            return Term::t();
        case Op::Undef:
        case Op::Atom:
        case Op::Var:
            return t;
        case Op::Cond:
            return Term::cond(dual(t.child(2)), dual(t.child(1)), dual(t.child(0)));
        case Op::Not:
            return Term::negate(dual(t.child(0)));
        case Op::And:
            return Term::disj(dual(t.child(0)), dual(t.child(1)));
        case Op::Or:
            return Term::conj(dual(t.child(0)), dual(t.child(1)));
        case Op::Iff:
            return Term::lxor(dual(t.child(0)), dual(t.child(1)));
        case Op::Xor:
            return Term::liff(dual(t.child(0)), dual(t.child(1)));
        case Op::Nand:
            return Term::lnor(dual(t.child(0)), dual(t.child(1)));
        case Op::Nor:
            return Term::lnand(dual(t.child(0)), dual(t.child(1)));
    }
    return t;
}

namespace {

// Visits leaves of kind `want` in first-occurrence order; Cond guard first.
// Shared subterms are visited once, which cannot change first-occurrence order.
void collect_names(const Term& t, Op want, std::unordered_set<const void*>& seen_nodes,
                   std::unordered_set<std::string>& seen_names, std::vector<std::string>& out) {
    if (!seen_nodes.insert(t.identity()).second) {
        return;
    }
    if (t.op() == want) {
        if (seen_names.insert(t.name()).second) {
            out.push_back(t.name());
        }
        return;
    }
    if (t.op() == Op::Cond) {
        collect_names(t.child(1), want, seen_nodes, seen_names, out);
        collect_names(t.child(0), want, seen_nodes, seen_names, out);
        collect_names(t.child(2), want, seen_nodes, seen_names, out);
        return;
    }
    for (std::size_t i = 0; i < t.arity(); ++i) {
        collect_names(t.child(i), want, seen_nodes, seen_names, out);
    }
}

std::vector<std::string> names_of(const Term& t, Op want) {
    std::unordered_set<const void*> seen_nodes;
    std::unordered_set<std::string> seen_names;
    std::vector<std::string> out;
    collect_names(t, want, seen_nodes, seen_names, out);
    return out;
}

}  // namespace

std::vector<Atom> atoms_of(const Term& t) {
    std::vector<Atom> out;
    for (std::string& n : names_of(t, Op::Atom)) {
        out.emplace_back(std::move(n));
    }
    return out;
}

std::vector<std::string> variables_of(const Term& t) { return names_of(t, Op::Var); }

namespace {

bool contains_op_impl(const Term& t, Op op, std::unordered_set<const void*>& seen) {
    if (t.op() == op) {
        return true;
    }
    if (!seen.insert(t.identity()).second) {
        return false;
    }
    for (std::size_t i = 0; i < t.arity(); ++i) {
        if (contains_op_impl(t.child(i), op, seen)) {
            return true;
        }
    }
    return false;
}

}  // namespace

bool contains_op(const Term& t, Op op) {
    std::unordered_set<const void*> seen;
    return contains_op_impl(t, op, seen);
}

}  // namespace scl
