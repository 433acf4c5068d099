// The built-in equation tables.
//
// Variables x, y, z, u, v, w are written X, Y, Z, S, V, W: U is the
// undefined constant and cannot double as a variable. X' abbreviates
// X ~& T, and where a conditional-only equation needs a negation it is
// spelled out as F <| X |> T.

#include <algorithm>
#include <stdexcept>

#include "scl/axioms.hpp"
#include "scl/syntax.hpp"

namespace scl {

namespace {

constexpr Mode kFree{Congruence::Free, false};
constexpr Mode kMem{Congruence::Mem, false};
constexpr Mode kMemU{Congruence::Mem, true};

struct Row {
    const char* name;
    const char* lhs;
    const char* rhs;
    Signature signature;
    std::optional<Mode> mode = std::nullopt;
};

SchemaTable table(std::string name, std::string description, Mode mode, std::initializer_list<Row> rows,
                  bool expect_refuted = false) {
    SchemaTable t{std::move(name), std::move(description), {}, mode, expect_refuted};
    for (const Row& r : rows) {
        t.schemas.push_back(Schema{r.name, parse(r.lhs), parse(r.rhs), r.signature, r.mode});
    }
    if (t.schemas.empty()) {
        throw std::logic_error("empty builtin table " + t.name);
    }
    return t;
}

constexpr Signature kCp = Signature::Cp;
constexpr Signature kScl = Signature::Scl;
constexpr Signature kIff = Signature::SclIff;
constexpr Signature kXor = Signature::SclIffXor;
constexpr Signature kNand = Signature::Nand;
constexpr Signature kMixed = Signature::Mixed;

std::vector<SchemaTable> make_tables() {
    std::vector<SchemaTable> out;

    out.push_back(table("CP", "conditional propositions, free valuation congruence", kFree, {
        {"CP1", "X <| T |> Y", "X", kCp},
        {"CP2", "X <| F |> Y", "Y", kCp},
        {"CP3", "T <| X |> F", "X", kCp},
        {"CP4", "X <| (Y <| Z |> S) |> V", "(X <| Y |> V) <| Z |> (X <| S |> V)", kCp},
    }));

    out.push_back(table("CPmem", "the memorising axiom, its dual, and derived variants", kMem, {
        {"CPmem", "X <| Y |> (Z <| S |> (V <| Y |> W))", "X <| Y |> (Z <| S |> W)", kCp},
        {"CPmem-dual", "((W <| Y |> V) <| S |> Z) <| Y |> X", "(W <| S |> Z) <| Y |> X", kCp},
        {"mem1", "(X <| Y |> (Z <| S |> V)) <| S |> W", "(X <| Y |> Z) <| S |> W", kCp},
        {"con1", "(X <| Y |> Z) <| Y |> S", "X <| Y |> S", kCp},
        {"con2", "X <| Y |> (Z <| Y |> S)", "X <| Y |> S", kCp},
    }));

    out.push_back(table("EqFSCL", "free short-circuit logic for closed terms", kFree, {
        {"Neg", "F", "!T", kScl},
        {"Or", "X || Y", "!(!X && !Y)", kScl},
        {"Tand", "T && X", "X", kScl},
        {"F3", "!!X", "X", kScl},
        {"F5", "X && T", "X", kScl},
        {"F6", "F && X", "F", kScl},
        {"F7", "(X && Y) && Z", "X && (Y && Z)", kScl},
        {"F8", "!X && F", "X && F", kScl},
        {"F9", "(X && F) || Y", "(X || T) && Y", kScl},
        {"F10", "(X && Y) || (Z && F)", "(X || (Z && F)) && (Y || (Z && F))", kScl},
    }));

    out.push_back(table("EqMSCL", "memorising short-circuit logic", kMem, {
        {"Neg", "F", "!T", kScl},
        {"Or", "X || Y", "!(!X && !Y)", kScl},
        {"Tand", "T && X", "X", kScl},
        {"Abs", "X && (X || Y)", "X", kScl},
        {"Mem", "(X || Y) && Z", "(!X && (Y && Z)) || (X && Z)", kScl},
    }));

    out.push_back(table("EqMSCL-consequences",
                        "consequences of EqMSCL, definitions of the connectives, the conditional recovered", kMem, {
        {"F3", "!!X", "X", kScl},
        {"F5", "X && T", "X", kScl},
        {"F6", "F && X", "F", kScl},
        {"F7", "(X && Y) && Z", "X && (Y && Z)", kScl},
        {"F8", "!X && F", "X && F", kScl},
        {"F9", "(X && F) || Y", "(X || T) && Y", kScl},
        {"F10", "(X && Y) || (Z && F)", "(X || (Z && F)) && (Y || (Z && F))", kScl},
        {"C1", "X && (Y && X)", "X && Y", kScl},
        {"C2", "X && (Y && !X)", "X && (Y && F)", kScl},
        {"M1", "(X && Y) || (!X && Z)", "(!X || Y) && (X || Z)", kScl},
        {"M2", "(X && Y) || (!X && Z)", "(!X && Z) || (X && Y)", kScl},
        {"M3", "((X && Y) || (!X && Z)) && S", "(X && (Y && S)) || (!X && (Z && S))", kScl},
        {"Dis", "X && (Y || Z)", "(X && Y) || (X && Z)", kScl},
        {"corres", "(X && Y) || (!X && Z)", "(X || Z) && (!X || Y)", kScl},
        {"M3-dual-or", "((X && Y) || (!X && Z)) || S", "(X && (Y || S)) || (!X && (Z || S))", kScl},
        {"defcorres", "(X && Y) || (!X && Z)", "Y <| X |> Z", kMixed},
        {"negdef", "!X", "F <| X |> T", kMixed},
        {"anddef", "X && Y", "Y <| X |> F", kMixed},
        {"eq0", "!T", "F", kScl},
        {"eq2", "X || Y", "T <| X |> Y", kMixed},
        {"F9-step1", "(X && F) || Y", "T <| (F <| X |> F) |> Y", kMixed},
        {"F9-step2", "T <| (F <| X |> F) |> Y", "Y <| X |> Y", kCp},
        {"F9-step3", "Y <| X |> Y", "Y <| (T <| X |> T) |> F", kCp},
        {"F9-step4", "Y <| (T <| X |> T) |> F", "(X || T) && Y", kMixed},
    }));

    out.push_back(table("EqMSCL-lI", "memorising short-circuit logic with left-sequential iff", kMem, {
        {"Or", "X || Y", "!(!X && !Y)", kIff},
        {"Abs", "X && (X || Y)", "X", kIff},
        {"Assoc", "(X && Y) && Z", "X && (Y && Z)", kIff},
        {"Tx", "T <-> X", "X", kIff},
        {"xF", "X <-> F", "!X", kIff},
        {"AndIff", "(X && Y) <-> Z", "(X && (Y <-> Z)) || (!X && !Z)", kIff},
    }));

    out.push_back(table("EqMSCL-lI-consequences",
                        "consequences with <-> and its dual ^^, and the associativity proof of <->", kMem, {
        {"T-iff-comm", "T <-> X", "X <-> T", kIff},
        {"F-iff-comm", "F <-> X", "X <-> F", kIff},
        {"not-iff", "!(X <-> Y)", "X <-> !Y", kIff},
        {"iff-not-not", "!X <-> !Y", "X <-> Y", kIff},
        {"orT-iff", "(X || T) <-> Y", "(X || T) && Y", kIff},
        {"iff-assoc", "(X <-> Y) <-> Z", "X <-> (Y <-> Z)", kIff},
        {"Cor20", "(X <-> Y) && (Z && F)", "(X || (!Y && (Z && F))) && (Y && (Z && F))", kIff},
        {"liff-def", "X <-> Y", "Y <| X |> (F <| Y |> T)", kMixed},
        {"liff-bool", "X <-> Y", "(X && Y) || (!X && !Y)", kIff},
        {"liff-cond-not", "X <-> Y", "Y <| X |> !Y", kMixed},
        {"lxor-def", "X ^^ Y", "X <-> !Y", kXor},
        {"lxor-cond", "X ^^ Y", "(F <| Y |> T) <| X |> Y", kMixed},
        {"not-lxor", "!(X ^^ Y)", "X <-> Y", kXor},
        {"lxor-bool", "X ^^ Y", "(X && !Y) || (!X && Y)", kXor},
        {"Tx-dual", "F ^^ X", "X", kXor},
        {"xF-dual", "X ^^ T", "!X", kXor},
        {"AndIff-dual", "(X || Y) ^^ Z", "(X || (Y ^^ Z)) && (!X || !Z)", kXor},
        {"not-by-iff-l", "!X", "F <-> X", kIff},
        {"not-by-iff-r", "!X", "X <-> F", kIff},
        {"not-by-xor-l", "!X", "T ^^ X", kXor},
        {"not-by-xor-r", "!X", "X ^^ T", kXor},
        {"xor-by-iff", "X ^^ Y", "!(X <-> Y)", kXor},
        {"prime-cond", "F <| (X <| Y |> (F <| X |> T)) |> T", "X <| (F <| Y |> T) |> (F <| X |> T)", kCp},
        {"iff-assoc-step1", "(X <-> Y) <-> Z", "Z <| (Y <| X |> (F <| Y |> T)) |> (F <| Z |> T)", kMixed},
        {"iff-assoc-step2", "Z <| (Y <| X |> (F <| Y |> T)) |> (F <| Z |> T)",
         "(Z <| Y |> (F <| Z |> T)) <| X |> (Z <| (F <| Y |> T) |> (F <| Z |> T))", kCp},
        {"iff-assoc-step3", "(Z <| Y |> (F <| Z |> T)) <| X |> (Z <| (F <| Y |> T) |> (F <| Z |> T))",
         "(Z <| Y |> (F <| Z |> T)) <| X |> (F <| (Z <| Y |> (F <| Z |> T)) |> T)", kCp},
        {"iff-assoc-step4", "(Z <| Y |> (F <| Z |> T)) <| X |> (F <| (Z <| Y |> (F <| Z |> T)) |> T)",
         "X <-> (Y <-> Z)", kMixed},
    }));

    out.push_back(table("EqMSCL-lN", "memorising short-circuit logic over left-sequential nand", kMem, {
        {"N1", "F", "T ~& T", kNand},
        {"N2", "(T ~& X) ~& (X ~& Y)", "X", kNand},
        {"N3", "(X ~& (Y ~& T)) ~& Z", "((X ~& ((Y ~& Z) ~& T)) ~& ((X ~& T) ~& Z)) ~& T", kNand},
    }));

    out.push_back(table("EqMSCL-lN-consequences",
                        "translated EqMSCL axioms, their simplifications, characterisations of the conditional",
                        kMem, {
        {"elf", "(X ~& T) ~& (Y ~& T)", "(((X ~& T) ~& (Y ~& T)) ~& T) ~& T", kNand},
        {"twaalf", "(T ~& X) ~& T", "X", kNand},
        {"dertien", "(X ~& ((X ~& T) ~& (Y ~& T))) ~& T", "X", kNand},
        {"veertien", "(((X ~& T) ~& (Y ~& T)) ~& Z) ~& T",
         "((((X ~& T) ~& ((Y ~& Z) ~& T)) ~& T) ~& T) ~& (((X ~& Z) ~& T) ~& T)", kNand},
        {"vijftien", "(X ~& T) ~& T", "X", kNand},
        {"zestien", "T ~& X", "X ~& T", kNand},
        {"zeventien", "X ~& ((X ~& T) ~& Y)", "X ~& T", kNand},
        {"cond-swap", "(X ~& Y) ~& ((X ~& T) ~& Z)", "((X ~& T) ~& Z) ~& (X ~& Y)", kNand},
        {"cond-M", "(X ~& Y) ~& ((X ~& T) ~& Z)", "(((X ~& T) ~& (Z ~& T)) ~& (X ~& (Y ~& T))) ~& T", kNand},
        {"char1", "Y <| X |> Z", "(X ~& Y) ~& (X' ~& Z)", kMixed},
        {"char2", "Y <| X |> Z", "(X' ~& Z) ~& (X ~& Y)", kMixed},
        {"char3", "Y <| X |> Z", "((X' ~& Z') ~& (X ~& Y'))'", kMixed},
        {"char4", "Y <| X |> Z", "((X ~& Y') ~& (X' ~& Z'))'", kMixed},
        {"b1", "((X ~& Y) ~& (X' ~& Z)) ~& V", "(X ~& (Y ~& V)) ~& (X' ~& (Z ~& V))", kNand},
        {"b2", "F ~& X", "T", kNand},
        {"b3", "X' ~& (X' ~& F)", "X", kNand},
        {"b4", "X ~& ((X ~& Y) ~& (X' ~& Z))", "X ~& Y", kNand},
        {"b5", "X ~& ((Y ~& Z) ~& (Y' ~& W))", "X ~& ((Y ~& (X ~& Z')) ~& (Y' ~& (X ~& W')))", kNand},
        {"nand-def", "X ~& Y", "(F <| Y |> T) <| X |> T", kMixed},
        {"nand-not-and", "X ~& Y", "!(X && Y)", kMixed},
        {"nand-cond", "X ~& Y", "F <| (Y <| X |> F) |> T", kMixed},
        {"1l", "!X", "X ~& T", kMixed},
        {"2l", "X && Y", "(X ~& Y) ~& T", kMixed},
        {"3l", "X || Y", "(X ~& T) ~& (Y ~& T)", kMixed},
        {"lnor-def", "X ~| Y", "F <| X |> (F <| Y |> T)", kMixed},
        {"lnor-nand", "X ~| Y", "((X ~& T) ~& (Y ~& T)) ~& T", kMixed},
    }));

    out.push_back(table("U", "the axioms for the undefined constant", kMemU, {
        {"CP-U", "X <| U |> Y", "U", kCp},
        {"Und", "!U", "U", kScl},
        {"NU", "U ~& X", "U", kNand},
    }));

    out.push_back(table("U-consequences", "derived laws for the undefined constant", kMemU, {
        {"U-and", "U && X", "U", kScl},
        {"U-or", "U || X", "U", kScl},
        {"U-iff", "U <-> X", "U", kIff},
        {"F-and-U", "F && U", "F", kScl},
        {"F-nand-U", "F ~& U", "T", kNand},
    }));

    out.push_back(table("negative", "equations that must be refuted", kMem, {
        {"and-comm", "X && Y", "Y && X", kScl, kMem},
        {"or-T", "X || T", "T", kScl, kMem},
        {"C1-free", "X && (Y && X)", "X && Y", kScl, kFree},
    }, true));

    return out;
}

}  // namespace

const std::vector<SchemaTable>& builtin_tables() {
    static const std::vector<SchemaTable> tables = make_tables();
    return tables;
}

// "EqMSCL_lN" finds "EqMSCL-lN".
const SchemaTable* find_table(const std::string& name) {
    std::string key = name;
    std::replace(key.begin(), key.end(), '_', '-');
    for (const SchemaTable& t : builtin_tables()) {
        if (t.name == key) {
            return &t;
        }
    }
    return nullptr;
}

}  // namespace scl
