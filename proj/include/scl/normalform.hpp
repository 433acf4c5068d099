#pragma once

// Basic forms (free valuation congruence) and mem-basic forms (memorising
// valuation congruence), with U leaves for the three-valued variant.

#include <map>
#include <string>
#include <vector>

#include "scl/decision_tree.hpp"
#include "scl/term.hpp"

namespace scl {

// p[T -> q, F -> r]. U leaves of p stay put: once the guard is undefined the
// branches never run.
BasicForm subst_tf(const BasicForm& p, const BasicForm& q, const BasicForm& r,
                   std::size_t depth_limit = kDefaultDepthLimit);

// Throws OpenTermError on variables and DepthLimitError when either the term
// or the resulting tree is taller than `depth_limit`.
BasicForm bf(const Term& t, std::size_t depth_limit = kDefaultDepthLimit);

enum class Side { AssumeTrue, AssumeFalse };

// Left (AssumeTrue) or right (AssumeFalse) a-reduction: every a-node is
// replaced by its true or false branch.
BasicForm reduce(const BasicForm& p, const Atom& a, Side side);

BasicForm mf(const BasicForm& p);

bool is_mem_basic(const BasicForm& p);

// A basic form with no atom repeated on any path.
class MemBasicForm {
public:
    // Throws InvariantError if `p` is not mem-basic.
    explicit MemBasicForm(BasicForm p);

    const BasicForm& form() const { return form_; }

    friend bool operator==(const MemBasicForm& a, const MemBasicForm& b) {
        return a.form_ == b.form_;
    }

private:
    BasicForm form_;
};

MemBasicForm mbf(const Term& t, std::size_t depth_limit = kDefaultDepthLimit);

// Node(a, l, r) becomes l <| a |> r.
Term render(const BasicForm& p);

// Replaces each node on an atom listed in `images` by that atom's image, with
// the image's T and F leaves continuing into the node's (rewritten) branches.
// With a fresh atom standing for a variable this is exactly bf of the
// substituted term.
BasicForm graft(const BasicForm& p, const std::map<std::string, BasicForm>& images,
                std::size_t depth_limit = kDefaultDepthLimit);

// Every mem-basic form over `atoms`, U leaves included when `three_valued`.
// The count obeys c(0) = leaves, c(k) = leaves + k * c(k-1)^2.
std::vector<BasicForm> enumerate_mem_forms(const std::vector<Atom>& atoms, bool three_valued);

// {"leaf":"T"} | {"atom":"a","t":...,"f":...}
std::string to_json(const BasicForm& p);

}  // namespace scl
