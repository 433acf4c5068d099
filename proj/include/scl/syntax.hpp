#pragma once

// Concrete syntax: parsing and printing of terms.
//
// Grammar (loosest to tightest):
//   cond    := iff ( "<|" iff "|>" iff )?
//   iff     := xor ( "<->" xor )*
//   xor     := or ( "^^" or )*
//   or      := and ( "||" and )*
//   and     := nand ( "&&" nand )*
//   nand    := unary ( ("~&" | "~|") unary )*
//   unary   := "!" unary | postfix
//   postfix := primary "'"*          -- x' abbreviates x ~& T
//   primary := "T" | "F" | "U" | atom | variable | "(" cond ")"

#include <string>
#include <string_view>

#include "scl/term.hpp"

namespace scl {

// Throws ParseError, AtomCaseError, or DepthLimitError when parentheses or
// prefix operators nest deeper than `depth_limit`.
Term parse(std::string_view text, std::size_t depth_limit = kDefaultDepthLimit);

enum class Style { Ascii, Unicode, Json };

struct PrintOptions {
    Style style = Style::Ascii;
    // Render t ~& T as t' (t′ in unicode).
    bool primes = false;
};

std::string print(const Term& t, PrintOptions options = {});

inline std::string print(const Term& t, Style style) { return print(t, PrintOptions{style, false}); }

}  // namespace scl
