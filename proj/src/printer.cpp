#include <json.hpp>

#include "scl/syntax.hpp"

namespace scl {

namespace {

// Binding strength, loosest first. A child printed below the level its
// position demands gets parentheses.
enum Level : int {
    kCond = 0,
    kIff = 1,
    kXor = 2,
    kOr = 3,
    kAnd = 4,
    kNand = 5,
    kUnary = 6,
    kPostfix = 7,
    kPrimary = 8,
};

struct Glyphs {
    const char* cond_open;
    const char* cond_close;
    const char* bang;
    const char* and_;
    const char* or_;
    const char* iff;
    const char* xor_;
    const char* nand;
    const char* nor;
    const char* prime;
};

constexpr Glyphs kAscii{" <| ", " |> ", "!", " && ", " || ", " <-> ", " ^^ ", " ~& ", " ~| ", "'"};
constexpr Glyphs kUnicode{" ◁ ", " ▷ ", "¬", " ∧ᵒ ", " ∨ᵒ ", " ↔ᵒ ", " ⊕ᵒ ", " ⊼ᵒ ", " ⊽ᵒ ", "′"};

bool is_prime(const Term& t) { return t.op() == Op::Nand && t.child(1).op() == Op::True; }

class Printer {
public:
    Printer(const Glyphs& g, bool primes) : g_(g), primes_(primes) {}

    std::string run(const Term& t) {
        emit(t, kCond);
        return std::move(out_);
    }

private:
    int level_of(const Term& t) const {
        switch (t.op()) {
            case Op::Cond: return kCond;
            case Op::Iff: return kIff;
            case Op::Xor: return kXor;
            case Op::Or: return kOr;
            case Op::And: return kAnd;
            case Op::Nand: return primes_ && is_prime(t) ? kPostfix : kNand;
            case Op::Nor: return kNand;
            case Op::Not: return kUnary;
            default: return kPrimary;
        }
    }

    const char* infix(Op op) const {
        switch (op) {
            case Op::Iff: return g_.iff;
            case Op::Xor: return g_.xor_;
            case Op::Or: return g_.or_;
            case Op::And: return g_.and_;
            case Op::Nand: return g_.nand;
            case Op::Nor: return g_.nor;
            default: return "?";
        }
    }

    void emit(const Term& t, int need) {
        int level = level_of(t);
        bool paren = level < need;
        if (paren) out_ += '(';
        switch (t.op()) {
            case Op::True: out_ += 'T'; break;
            case Op::False: out_ += 'F'; break;
            case Op::Undef: out_ += 'U'; break;
            case Op::Atom:
            case Op::Var: out_ += t.name(); break;
            case Op::Cond:
                emit(t.child(0), kIff);
                out_ += g_.cond_open;
                emit(t.child(1), kIff);
                out_ += g_.cond_close;
                emit(t.child(2), kIff);
                break;
            case Op::Not:
                out_ += g_.bang;
                emit(t.child(0), kUnary);
                break;
            default:
                if (level == kPostfix) {
                    emit(t.child(0), kPostfix);
                    out_ += g_.prime;
                    break;
                }
                emit(t.child(0), level);
                out_ += infix(t.op());
                emit(t.child(1), level + 1);
                break;
        }
        if (paren) out_ += ')';
    }

    const Glyphs& g_;
    bool primes_;
    std::string out_;
};

const char* json_key(Op op) {
    switch (op) {
        case Op::Not: return "not";
        case Op::And: return "and";
        case Op::Or: return "or";
        case Op::Iff: return "iff";
        case Op::Xor: return "xor";
        case Op::Nand: return "nand";
        case Op::Nor: return "nor";
        default: return "?";
    }
}

nlohmann::ordered_json to_json(const Term& t) {
    using nlohmann::ordered_json;
    switch (t.op()) {
        case Op::True: return {{"const", "T"}};
        case Op::False: return {{"const", "F"}};
        case Op::Undef: return {{"const", "U"}};
        case Op::Atom: return {{"atom", t.name()}};
        case Op::Var: return {{"var", t.name()}};
        case Op::Cond: {
            ordered_json inner;
            inner["then"] = to_json(t.child(0));
            inner["if"] = to_json(t.child(1));
            inner["else"] = to_json(t.child(2));
            ordered_json j;
            j["cond"] = std::move(inner);
            return j;
        }
        case Op::Not: {
            ordered_json j;
            j["not"] = to_json(t.child(0));
            return j;
        }
        default: {
            ordered_json j;
            j[json_key(t.op())] = ordered_json::array({to_json(t.child(0)), to_json(t.child(1))});
            return j;
        }
    }
}

}  // namespace

std::string print(const Term& t, PrintOptions options) {
    switch (options.style) {
        case Style::Json: return to_json(t).dump();
        case Style::Unicode: return Printer(kUnicode, options.primes).run(t);
        case Style::Ascii: break;
    }
    return Printer(kAscii, options.primes).run(t);
}

}  // namespace scl
