#pragma once

// Moving between signatures: eliminating derived connectives into the
// conditional core, and encoding into / decoding from the sequential NAND.

#include "scl/term.hpp"

namespace scl {

// Replaces every derived connective by its defining conditional:
//   !x       = F <| x |> T
//   x && y   = y <| x |> F
//   x || y   = T <| x |> y
//   x <-> y  = y <| x |> (F <| y |> T)
//   x ^^ y   = x <-> !y
//   x ~& y   = (F <| y |> T) <| x |> T
//   x ~| y   = F <| x |> (F <| y |> T)
// Variables pass through untouched.
Term to_core(const Term& t);

// !x = x ~& T,  x && y = (x ~& y) ~& T,  x || y = (x ~& T) ~& (y ~& T).
// Existing ~& nodes are kept. Throws UnsupportedConnective on Cond, <->, ^^ and ~|.
Term encode_nand(const Term& t);

// x ~& y = !(x && y). Throws UnsupportedConnective on anything but ~&.
Term decode_nand(const Term& t);

}  // namespace scl
