#pragma once

// Memorising U-NAND basic forms. NNode(a, P, Q) stands for
// (a ~& P) ~& (a' ~& Q) with a absent from P and Q: "if a then P else Q"
// written with the sequential NAND alone.

#include <string>

#include "scl/decision_tree.hpp"
#include "scl/normalform.hpp"

namespace scl {

// value = true: every a-node is replaced by its first branch (T_a);
// value = false: by its second branch (F_a).
Munbf assume(const Munbf& p, const Atom& a, bool value);

// Swaps T and F leaves, keeps U. The tree-level meaning of priming a whole form.
Munbf complement_leaves(const Munbf& p);

// Normal form of a closed term over T, F, U, atoms and ~&, following the
// induction of the completeness proof:
//   T ~& Q = complement_leaves(Q),  F ~& Q = T,  U ~& Q = U,
//   NNode(a, P1, P2) ~& Q = NNode(a, T_a(P1 ~& Q), F_a(P2 ~& Q)).
// Throws UnsupportedConnective or OpenTermError.
Munbf nand_nf(const Term& t);

// The bijection between mem-basic forms and mUNBFs and its inverse.
Munbf to_munbf(const MemBasicForm& p);
MemBasicForm from_munbf(const Munbf& q);

bool is_munbf(const Munbf& q);

// NNode(a, P, Q) becomes (a ~& P) ~& ((a ~& T) ~& Q).
Term render(const Munbf& q);

// {"leaf":"T"} | {"nnode":"a","t":...,"f":...}
std::string to_json(const Munbf& q);

}  // namespace scl
