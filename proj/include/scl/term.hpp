#pragma once

// Terms of sequential propositional logic: the conditional p <| q |> r
// ("if q then p else r"), the left-sequential connectives, the constants
// T, F, U, atoms and schema variables.
//
// Terms are immutable values backed by shared nodes, so copying is cheap and
// subterms may be shared. Equality is structural.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace scl {

inline constexpr std::size_t kDefaultDepthLimit = 10'000;

class Atom {
public:
    // Throws std::invalid_argument unless `name` matches [a-z][a-z0-9_]*.
    explicit Atom(std::string name);

    static bool is_valid(std::string_view name);

    const std::string& name() const { return name_; }

    friend bool operator==(const Atom&, const Atom&) = default;
    friend auto operator<=>(const Atom&, const Atom&) = default;

private:
    std::string name_;
};

// [A-Z][A-Za-z0-9_]*, excluding the constant names T, F and U.
bool is_variable_name(std::string_view name);

enum class Op : std::uint8_t {
    True,
    False,
    Undef,
    Atom,
    Var,
    Cond,  // children: then, guard, else
    Not,
    And,
    Or,
    Iff,
    Xor,
    Nand,
    Nor,
};

std::size_t arity(Op op);
bool is_binary(Op op);

class Term {
public:
    static Term t();
    static Term f();
    static Term u();
    static Term atom(const Atom& a);
    static Term atom(std::string name);
    // Throws std::invalid_argument on a name outside the variable class.
    static Term var(std::string name);
    static Term cond(Term then_branch, Term guard, Term else_branch);
    static Term negate(Term x);
    static Term conj(Term x, Term y);
    static Term disj(Term x, Term y);
    static Term liff(Term x, Term y);
    static Term lxor(Term x, Term y);
    static Term lnand(Term x, Term y);
    static Term lnor(Term x, Term y);
    static Term binary(Op op, Term x, Term y);

    Op op() const;
    // Atom or variable name; empty for every other node.
    const std::string& name() const;
    std::size_t arity() const { return scl::arity(op()); }
    const Term& child(std::size_t i) const;

    bool is_closed() const;
    bool is_constant() const;
    // Longest root-to-leaf path counted in nodes; a leaf has height 1.
    std::size_t height() const;

    // Stable address of the shared node, usable as a memo key.
    const void* identity() const { return node_.get(); }

    friend bool operator==(const Term& a, const Term& b);

private:
    struct Node;
    explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    static Term make(Op op, std::string name, std::vector<Term> children);

    std::shared_ptr<const Node> node_;
};

// T<->F swapped, Cond outer arguments reversed, And<->Or, Iff<->Xor, Nand<->Nor.
Term dual(const Term& t);

// Atoms in first-occurrence order; for Cond the guard is visited before the branches.
std::vector<Atom> atoms_of(const Term& t);

// Variable names in first-occurrence order (same traversal as atoms_of).
std::vector<std::string> variables_of(const Term& t);

bool contains_op(const Term& t, Op op);

}  // namespace scl
