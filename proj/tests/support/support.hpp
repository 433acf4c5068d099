#pragma once

// Test-side oracles and generators. The oracles deliberately share no code
// with the library's normalizers: the basic-form oracle is written in
// continuation style over its own tree type, and the mem oracle walks the
// tree with an explicit context instead of applying reductions.

#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "scl/decision_tree.hpp"
#include "scl/term.hpp"

namespace scl::test {

// A tree of the oracle's own: "T", "F", "U" or atom(true, false).
struct OTree {
    std::string label;
    std::shared_ptr<const OTree> t, f;
};
using OPtr = std::shared_ptr<const OTree>;

std::string show(const OPtr& p);

// Mirrors a library tree into the oracle's notation for comparison.
template <class Tag>
std::string show(const DecisionTree<Tag>& p) {
    switch (p.kind()) {
        case DecisionTree<Tag>::Kind::True: return "T";
        case DecisionTree<Tag>::Kind::False: return "F";
        case DecisionTree<Tag>::Kind::Undef: return "U";
        case DecisionTree<Tag>::Kind::Node: break;
    }
    return p.atom().name() + "(" + show(p.on_true()) + "," + show(p.on_false()) + ")";
}

// bf in continuation style: the tree of t with T continuing into p and F into q.
OPtr oracle_bf(const Term& t);

// mf by walking the tree with the atoms already decided on the path.
OPtr oracle_mf(const OPtr& p);

inline std::string oracle_bf_key(const Term& t) { return show(oracle_bf(t)); }
inline std::string oracle_mbf_key(const Term& t) { return show(oracle_mf(oracle_bf(t))); }

std::vector<Atom> atoms(int n);

enum class Signature { Full, Scl, SclNoConst, Nand };

struct Gen {
    explicit Gen(std::uint64_t seed) : rng(seed) {}

    // Closed term of height <= max_height (leaves have height 1).
    Term term(Signature sig, const std::vector<Atom>& as, int max_height, bool with_u = false);
    // Random basic form of height <= max_height.
    BasicForm basic_form(const std::vector<Atom>& as, int max_height, bool with_u = false);
    // A context C[.] with one hole, filled by `fill`.
    Term context(const Term& fill, const std::vector<Atom>& as, int max_height);
    int below(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

    std::mt19937_64 rng;
};

// Every closed {!, &&, ||, T, F}-term over `as` of height <= h.
std::vector<Term> all_scl_terms(const std::vector<Atom>& as, int h);

// Value and first-inspection order under every total valuation of `as`.
std::string trace_signature(const Term& t, const std::vector<Atom>& as);

}  // namespace scl::test
