#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <sstream>

#include "scl/errors.hpp"
#include "scl/syntax.hpp"

namespace scl {

ParseError::ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected,
                       std::string found)
    : Error([&] {
          std::ostringstream msg;
          msg << line << ":" << column << ": expected ";
          if (expected.size() > 1) {
              msg << "one of ";
          }
          for (std::size_t i = 0; i < expected.size(); ++i) {
              msg << (i ? ", " : "") << expected[i];
          }
          msg << " but found " << found;
          return msg.str();
      }()),
      line_(line),
      column_(column),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

AtomCaseError::AtomCaseError(std::size_t line, std::size_t column, std::string identifier)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": identifier '" + identifier +
            "' is neither an atom ([a-z][a-z0-9_]*) nor a variable ([A-Z][A-Za-z0-9_]*)"),
      line_(line),
      column_(column),
      identifier_(std::move(identifier)) {}

namespace {

enum class Tok {
    True,
    False,
    Undef,
    Atom,
    Var,
    LParen,
    RParen,
    Bang,
    And,
    Or,
    Iff,
    Xor,
    Nand,
    Nor,
    CondOpen,
    CondClose,
    Prime,
    End,
    Invalid,
};

const char* describe(Tok k) {
    switch (k) {
        case Tok::True: return "'T'";
        case Tok::False: return "'F'";
        case Tok::Undef: return "'U'";
        case Tok::Atom: return "atom";
        case Tok::Var: return "variable";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::Bang: return "'!'";
        case Tok::And: return "'&&'";
        case Tok::Or: return "'||'";
        case Tok::Iff: return "'<->'";
        case Tok::Xor: return "'^^'";
        case Tok::Nand: return "'~&'";
        case Tok::Nor: return "'~|'";
        case Tok::CondOpen: return "'<|'";
        case Tok::CondClose: return "'|>'";
        case Tok::Prime: return "'''";
        case Tok::End: return "end of input";
        case Tok::Invalid: return "invalid character";
    }
    return "?";
}

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

struct Spelling {
    std::string_view text;
    Tok kind;
};

// Longest spellings first where one is a prefix of another.
constexpr std::array<Spelling, 27> kSpellings{{
    {"<->", Tok::Iff},
    {"<|", Tok::CondOpen},
    {"|>", Tok::CondClose},
    {"||", Tok::Or},
    {"&&", Tok::And},
    {"^^", Tok::Xor},
    {"~&", Tok::Nand},
    {"~|", Tok::Nor},
    {"!", Tok::Bang},
    {"(", Tok::LParen},
    {")", Tok::RParen},
    {"'", Tok::Prime},
    {"¬", Tok::Bang},
    {"∧ᵒ", Tok::And},
    {"∧", Tok::And},
    {"∨ᵒ", Tok::Or},
    {"∨", Tok::Or},
    {"↔ᵒ", Tok::Iff},
    {"↔", Tok::Iff},
    {"⊕ᵒ", Tok::Xor},
    {"⊕", Tok::Xor},
    {"⊼ᵒ", Tok::Nand},
    {"⊼", Tok::Nand},
    {"⊽ᵒ", Tok::Nor},
    {"⊽", Tok::Nor},
    {"◁", Tok::CondOpen},
    {"▷", Tok::CondClose},
}};

constexpr std::string_view kPrimeUnicode = "′";

bool ident_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

std::size_t utf8_length(unsigned char lead) {
    if (lead < 0x80) return 1;
    if ((lead >> 5) == 0x6) return 2;
    if ((lead >> 4) == 0xE) return 3;
    if ((lead >> 3) == 0x1E) return 4;
    return 1;
}

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    std::size_t line = 1;
    std::size_t column = 1;
    auto advance = [&](std::size_t bytes) {
        for (std::size_t k = 0; k < bytes; ++k) {
            unsigned char c = static_cast<unsigned char>(text[i + k]);
            if (c == '\n') {
                ++line;
                column = 1;
            } else if ((c & 0xC0) != 0x80) {
                ++column;
            }
        }
        i += bytes;
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        std::size_t tl = line;
        std::size_t tc = column;
        if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) {
            std::size_t j = i;
            while (j < text.size() && ident_char(text[j])) {
                ++j;
            }
            std::string word(text.substr(i, j - i));
            Tok kind;
            if (word == "T") {
                kind = Tok::True;
            } else if (word == "F") {
                kind = Tok::False;
            } else if (word == "U") {
                kind = Tok::Undef;
            } else if (Atom::is_valid(word)) {
                kind = Tok::Atom;
            } else if (is_variable_name(word)) {
                kind = Tok::Var;
            } else {
                throw AtomCaseError(tl, tc, word);
            }
            advance(j - i);
            out.push_back({kind, std::move(word), tl, tc});
            continue;
        }
        std::string_view rest = text.substr(i);
        if (rest.starts_with(kPrimeUnicode)) {
            advance(kPrimeUnicode.size());
            out.push_back({Tok::Prime, std::string(kPrimeUnicode), tl, tc});
            continue;
        }
        auto hit = std::find_if(kSpellings.begin(), kSpellings.end(),
                                [&](const Spelling& s) { return rest.starts_with(s.text); });
        if (hit != kSpellings.end()) {
            advance(hit->text.size());
            out.push_back({hit->kind, std::string(hit->text), tl, tc});
            continue;
        }
        std::size_t len = std::min(utf8_length(static_cast<unsigned char>(c)), rest.size());
        out.push_back({Tok::Invalid, std::string(rest.substr(0, len)), tl, tc});
        advance(len);
    }
    out.push_back({Tok::End, {}, line, column});
    return out;
}

struct BinaryOp {
    Tok token;
    Op op;
    int level;
};

constexpr std::array<BinaryOp, 6> kBinaryOps{{
    {Tok::Iff, Op::Iff, 1},
    {Tok::Xor, Op::Xor, 2},
    {Tok::Or, Op::Or, 3},
    {Tok::And, Op::And, 4},
    {Tok::Nand, Op::Nand, 5},
    {Tok::Nor, Op::Nor, 5},
}};

class Parser {
public:
    Parser(std::vector<Token> tokens, std::size_t depth_limit)
        : tokens_(std::move(tokens)), depth_limit_(depth_limit) {}

    Term parse_all() {
        Term t = parse_cond();
        if (!accept(Tok::End)) {
            // Anything that could legally continue the term is also expected here.
            fail();
        }
        return t;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }

    void note_expected(Tok k) {
        if (pos_ > furthest_) {
            furthest_ = pos_;
            expected_.clear();
        }
        if (pos_ == furthest_) {
            expected_.insert(k);
        }
    }

    bool accept(Tok k) {
        if (peek().kind == k) {
            ++pos_;
            return true;
        }
        note_expected(k);
        return false;
    }

    void expect(Tok k) {
        if (!accept(k)) {
            fail();
        }
    }

    [[noreturn]] void fail() const {
        const Token& at = tokens_[std::max(furthest_, pos_)];
        std::vector<std::string> names;
        for (Tok k : expected_) {
            names.emplace_back(describe(k));
        }
        std::string found = at.kind == Tok::End ? "end of input" : "'" + at.text + "'";
        throw ParseError(at.line, at.column, std::move(names), std::move(found));
    }

    Term checked(Term t) const {
        if (t.height() > depth_limit_) {
            throw DepthLimitError(depth_limit_);
        }
        return t;
    }

    Term parse_cond() {
        Term lhs = parse_binary(1);
        if (!accept(Tok::CondOpen)) {
            return lhs;
        }
        Term guard = parse_binary(1);
        expect(Tok::CondClose);
        Term rhs = parse_binary(1);
        return checked(Term::cond(std::move(lhs), std::move(guard), std::move(rhs)));
    }

    std::optional<BinaryOp> peek_binary() {
        for (const BinaryOp& b : kBinaryOps) {
            if (peek().kind == b.token) {
                return b;
            }
            note_expected(b.token);
        }
        return std::nullopt;
    }

    Term parse_binary(int min_level) {
        Term lhs = parse_unary();
        while (true) {
            std::optional<BinaryOp> b = peek_binary();
            if (!b || b->level < min_level) {
                return lhs;
            }
            ++pos_;
            Term rhs = parse_binary(b->level + 1);
            lhs = checked(Term::binary(b->op, std::move(lhs), std::move(rhs)));
        }
    }

    Term parse_unary() {
        std::size_t negations = 0;
        while (accept(Tok::Bang)) {
            ++negations;
        }
        Term t = parse_postfix();
        for (std::size_t k = 0; k < negations; ++k) {
            t = checked(Term::negate(std::move(t)));
        }
        return t;
    }

    Term parse_postfix() {
        Term t = parse_primary();
        while (accept(Tok::Prime)) {
            t = checked(Term::lnand(std::move(t), Term::t()));
        }
        return t;
    }

    Term parse_primary() {
        const Token& tok = peek();
        switch (tok.kind) {
            case Tok::True: ++pos_; return Term::t();
            case Tok::False: ++pos_; return Term::f();
            case Tok::Undef: ++pos_; return Term::u();
            case Tok::Atom: ++pos_; return Term::atom(tok.text);
            case Tok::Var: ++pos_; return Term::var(tok.text);
            case Tok::LParen: {
                ++pos_;
                if (++nesting_ > depth_limit_) {
                    throw DepthLimitError(depth_limit_);
                }
                Term inner = parse_cond();
                expect(Tok::RParen);
                --nesting_;
                return inner;
            }
            default:
                for (Tok k : {Tok::True, Tok::False, Tok::Undef, Tok::Atom, Tok::Var, Tok::LParen,
                              Tok::Bang}) {
                    note_expected(k);
                }
                fail();
        }
    }

    std::vector<Token> tokens_;
    std::size_t depth_limit_;
    std::size_t pos_ = 0;
    std::size_t nesting_ = 0;
    std::size_t furthest_ = 0;
    std::set<Tok> expected_;
};

}  // namespace

Term parse(std::string_view text, std::size_t depth_limit) {
    return Parser(lex(text), depth_limit).parse_all();
}

}  // namespace scl
