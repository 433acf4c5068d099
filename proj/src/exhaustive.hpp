#pragma once

// Exhaustive checking of a schema under memorising congruence over every
// tuple of mem-basic forms on k shared atoms.
//
// Enumerating |D|^n tuples directly is hopeless for four or five variables
// (74^4 is about 3e7). Instead the sweep evaluates the mem-basic form of an
// instantiated side compositionally, asking of each variable only "how does
// your form behave given what is already known about the domain atoms". Each
// variable carries a set of candidate forms; when a read sees candidates that
// behave differently in the current memory state, the set is split by
// behaviour and each part is explored separately. A completed evaluation
// covers every tuple in the product of the candidate sets at once.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scl/normalform.hpp"

namespace scl::detail {

struct Domain {
    std::vector<Atom> atoms;
    std::vector<BasicForm> forms;
    // class_of[state][form]: behaviour class of the form in a memory state.
    // A state gives each domain atom one of unknown/true/false, encoded in
    // base 3 with atom i as digit i (0 unknown, 1 true, 2 false).
    std::vector<std::vector<std::uint32_t>> class_of;
    // The mem-basic form each class evaluates to in its state.
    std::vector<BasicForm> class_form;
};

// Atoms v1..vk, skipping names in `avoid`. Cached; safe to call concurrently.
const Domain& domain(int k, bool three_valued, const std::vector<std::string>& avoid);

// Mem-basic form of `core` (no derived connectives) with each variable
// replaced by the domain form of the given index, evaluated from an empty
// memory. Equals mbf of the instantiated term.
BasicForm sem(const Term& core, const std::map<std::string, std::size_t>& assignment,
              const Domain& d);

struct SweepResult {
    bool refuted = false;
    // Domain form index per variable; set when refuted.
    std::map<std::string, std::size_t> witness;
    std::uint64_t covered = 0;
    bool saturated = false;
    std::uint64_t evaluations = 0;
    bool budget_exceeded = false;
};

SweepResult sweep(const Term& lhs_core, const Term& rhs_core, const std::vector<std::string>& vars,
                  const Domain& d, std::uint64_t budget);

}  // namespace scl::detail
