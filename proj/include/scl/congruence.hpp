#pragma once

// Deciding free and memorising valuation congruence, evaluating closed terms
// under a valuation, and exporting decision trees.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "scl/normalform.hpp"

namespace scl {

enum class Congruence { Free, Mem };

struct Mode {
    Congruence congruence = Congruence::Mem;
    // Admits U in schemas and U leaves in enumerated domains. Normalization
    // itself always handles U.
    bool three_valued = false;

    friend bool operator==(const Mode&, const Mode&) = default;
};

std::string describe(const Mode& mode);

// bf under Free, mbf under Mem. Throws OpenTermError.
BasicForm normalize(const Term& t, const Mode& mode);

// Throws OpenTermError if either side has variables.
bool equiv(const Term& p, const Term& q, const Mode& mode);

enum class Truth { True, False, Undef };

const char* to_string(Truth v);

using Valuation = std::map<Atom, bool>;

// "a=1,b=0". Whitespace around items is ignored; an empty string is the
// empty valuation. Throws ParseError.
Valuation parse_valuation(std::string_view text);

// Walks mbf(t). Throws UnboundAtomError for an atom on the path that `v` lacks.
Truth eval(const Term& t, const Valuation& v);

struct Trace {
    Truth value;
    // Atoms in the order they were first inspected.
    std::vector<Atom> inspected;

    friend bool operator==(const Trace&, const Trace&) = default;
};

// Interprets t directly: left to right, short-circuiting, remembering each
// atom's first value. No normalization is involved.
Trace trace_eval(const Term& t, const Valuation& v);

// Graphviz digraph; nodes named n<preorder index>, leaves drawn as boxes,
// edges labelled T and F.
std::string to_dot(const BasicForm& p);

}  // namespace scl
