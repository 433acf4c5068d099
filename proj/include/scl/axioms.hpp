#pragma once

// Equation schemas, the built-in tables, and semantic validity checking.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scl/congruence.hpp"

namespace scl {

// Which connectives a schema is written in. Checked against the schema's
// terms; U is governed separately by Mode::three_valued.
enum class Signature {
    Cp,         // conditional, T, F
    Scl,        // !, &&, ||, T, F
    SclIff,     // Scl plus <->
    SclIffXor,  // SclIff plus ^^
    Nand,       // ~&, T, F
    Mixed,      // anything; used for equations relating two signatures
};

const char* to_string(Signature s);

struct Schema {
    std::string name;
    Term lhs;
    Term rhs;
    Signature signature = Signature::Mixed;
    // Overrides the table's mode; only the negative table needs this.
    std::optional<Mode> mode;
};

struct SchemaTable {
    std::string name;
    std::string description;
    std::vector<Schema> schemas;
    Mode mode;
    // The negative table lists equations that must be refuted.
    bool expect_refuted = false;
};

using Substitution = std::map<std::string, Term>;

// Simultaneous substitution into both sides. Throws MissingBindingError for
// a variable without a binding.
std::pair<Term, Term> instantiate(const Schema& s, const Substitution& sub);

enum class Verdict {
    PassedFreshAtoms,
    PassedExhaustive,
    RefutedByFreshAtoms,
    // Found by the exhaustive sweep although fresh atoms passed.
    RefutedExhaustive,
};

const char* to_string(Verdict v);
bool is_refuted(Verdict v);

struct Witness {
    Substitution substitution;
    BasicForm lhs_form;
    BasicForm rhs_form;
};

struct CheckResult {
    Verdict verdict;
    std::optional<Witness> witness;
    // Atom budget and instantiations covered, for the exhaustive strata.
    int k = 0;
    std::uint64_t count = 0;
    std::string note;
};

struct Strategy {
    enum class Kind { FreshAtoms, Exhaustive };
    Kind kind = Kind::FreshAtoms;
    int k = 2;
    std::uint64_t budget = 1'000'000;

    static Strategy fresh_atoms() { return {}; }
    static Strategy exhaustive(int k = 2, std::uint64_t budget = 1'000'000) {
        return {Kind::Exhaustive, k, budget};
    }
};

// Fresh atoms v1, v2, ... (skipping any atom the schema mentions) are bound
// to the variables in sorted name order.
Substitution fresh_substitution(const Schema& s);

// Throws SignatureError when the schema uses U outside three-valued mode or a
// connective outside its declared signature; std::invalid_argument when
// k is outside [1, 3].
CheckResult check_schema(const Schema& s, const Mode& mode, const Strategy& strategy);

const std::vector<SchemaTable>& builtin_tables();

// nullptr when there is no such table. Underscores match hyphens.
const SchemaTable* find_table(const std::string& name);

}  // namespace scl
