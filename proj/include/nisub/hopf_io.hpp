#pragma once

#include "nisub/hopf.hpp"

#include <iosfwd>

namespace nisub {

/// Versioned sparse structure-tensor format, one record per line:
///   nisub-hopf 1
///   name <text>
///   dim <n>
///   label <i> <text>
///   unit <i> <q>            counit <i> <q>
///   mult <i> <j> <k> <q>    (coefficient of e_k in e_i e_j)
///   comult <i> <j> <k> <q>  (coefficient of e_j (x) e_k in Delta(e_i))
///   antipode <i> <j> <q>    (coefficient of e_j in S(e_i))
///   star <i> <j> <q>        (coefficient of e_j in e_i*)
///   end
/// Coefficients are exact fractions p or p/q. Blank lines and lines starting
/// with '#' are ignored. Records after `dim` may appear in any order.
void write_hopf(std::ostream& out, const HopfAlgebra& h);
/// Throws ParseError with the offending line.
HopfAlgebra read_hopf(std::istream& in);

}  // namespace nisub
