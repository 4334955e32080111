#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lbz {

// Exact rational scalar. All coefficient arithmetic in the library is exact;
// mpq_class keeps values canonical (coprime, positive denominator) under
// arithmetic as long as inputs are canonical.
using Rat = mpq_class;

// num/den with canonicalization (mpq_class(n, d) leaves that to the caller).
inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
Rat rat_from_string(std::string_view text);

// "p" or "p/q", canonical form. Deterministic; used by every output format.
std::string rat_to_string(const Rat& r);

} // namespace lbz
