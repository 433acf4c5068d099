#pragma once

// Binary decision trees with T/F/U leaves, the carrier of both basic forms
// and memorising U-NAND basic forms. The tag only keeps the two apart in the
// type system; their meaning differs, their shape does not.
//
// Nodes are shared, so a tree of exponential size may occupy little memory.
// Everything that walks a tree memoizes on node identity for that reason.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "scl/term.hpp"

namespace scl {

template <class Tag>
class DecisionTree {
public:
    enum class Kind : std::uint8_t { True, False, Undef, Node };

    static DecisionTree leaf_t() {
        static const DecisionTree k(Kind::True);
        return k;
    }
    static DecisionTree leaf_f() {
        static const DecisionTree k(Kind::False);
        return k;
    }
    static DecisionTree leaf_u() {
        static const DecisionTree k(Kind::Undef);
        return k;
    }
    static DecisionTree leaf(Kind k) {
        switch (k) {
            case Kind::True: return leaf_t();
            case Kind::False: return leaf_f();
            default: return leaf_u();
        }
    }
    static DecisionTree node(Atom a, DecisionTree on_true, DecisionTree on_false) {
        std::size_t h = 1 + std::max(on_true.height(), on_false.height());
        return DecisionTree(std::make_shared<const Rep>(
            Rep{Kind::Node, std::move(a), std::make_pair(std::move(on_true), std::move(on_false)), h}));
    }

    Kind kind() const { return rep_->kind; }
    bool is_leaf() const { return rep_->kind != Kind::Node; }
    // Only meaningful on nodes.
    const Atom& atom() const { return rep_->atom; }
    const DecisionTree& on_true() const { return rep_->children->first; }
    const DecisionTree& on_false() const { return rep_->children->second; }
    // Leaves have height 1.
    std::size_t height() const { return rep_->height; }
    const void* identity() const { return rep_.get(); }

    friend bool operator==(const DecisionTree& a, const DecisionTree& b) {
        if (a.rep_ == b.rep_) {
            return true;
        }
        // Pairs already shown equal; only worth keeping for trees big enough
        // that sharing can make a naive walk blow up.
        if (a.height() <= 12) {
            return equal(a, b, nullptr);
        }
        std::set<std::pair<const void*, const void*>> known;
        return equal(a, b, &known);
    }

private:
    struct Rep;

    explicit DecisionTree(Kind k);
    explicit DecisionTree(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}

    static bool equal(const DecisionTree& a, const DecisionTree& b,
                      std::set<std::pair<const void*, const void*>>* known) {
        if (a.rep_ == b.rep_) {
            return true;
        }
        if (a.kind() != b.kind() || a.height() != b.height()) {
            return false;
        }
        if (a.is_leaf()) {
            return true;
        }
        if (a.atom() != b.atom()) {
            return false;
        }
        if (known && known->count({a.identity(), b.identity()})) {
            return true;
        }
        bool same = equal(a.on_true(), b.on_true(), known) &&
                    equal(a.on_false(), b.on_false(), known);
        if (same && known) {
            known->insert({a.identity(), b.identity()});
        }
        return same;
    }

    std::shared_ptr<const Rep> rep_;
};

template <class Tag>
struct DecisionTree<Tag>::Rep {
    Kind kind;
    Atom atom;
    // Empty for leaves.
    std::optional<std::pair<DecisionTree, DecisionTree>> children;
    std::size_t height;
};

template <class Tag>
DecisionTree<Tag>::DecisionTree(Kind k)
    : rep_(std::make_shared<const Rep>(Rep{k, Atom("leaf"), std::nullopt, 1})) {}

struct BasicFormTag {};
struct MunbfTag {};

using BasicForm = DecisionTree<BasicFormTag>;
using Munbf = DecisionTree<MunbfTag>;

// True iff no atom repeats along any root-to-leaf path. Checked per node
// ("the node's atom does not occur below it"), which is equivalent and
// linear in the number of shared nodes.
template <class Tag>
bool is_path_distinct(const DecisionTree<Tag>& p) {
    using Tree = DecisionTree<Tag>;
    std::unordered_map<const void*, std::set<std::string>> below;
    bool ok = true;
    auto visit = [&](auto&& self, const Tree& t) -> const std::set<std::string>& {
        auto it = below.find(t.identity());
        if (it != below.end()) {
            return it->second;
        }
        std::set<std::string> atoms;
        if (!t.is_leaf()) {
            const auto& l = self(self, t.on_true());
            const auto& r = self(self, t.on_false());
            if (l.count(t.atom().name()) || r.count(t.atom().name())) {
                ok = false;
            }
            atoms = l;
            atoms.insert(r.begin(), r.end());
            atoms.insert(t.atom().name());
        }
        return below.emplace(t.identity(), std::move(atoms)).first->second;
    };
    visit(visit, p);
    return ok;
}

}  // namespace scl
