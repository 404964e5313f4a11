#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>

namespace hd {

// Exact scalar. All coding-critical arithmetic runs on these; doubles are
// opt-in where only plotting accuracy matters.
using rat = mpq_class;

inline int sign_of(const rat& q) { return sgn(q); }

// Lowest-terms rational from machine integers.
rat make_rat(long long num, long long den = 1);

// Combined numerator+denominator size in bits, the quantity the resource
// budget is measured against.
std::size_t bit_size(const rat& q);
std::size_t bit_size(const mpz_class& z);

// Accepts "p/q" (q > 0 after normalization) and plain/decimal literals such
// as "-1.5" or "0.25"; decimals convert exactly.
rat parse_rat(const std::string& text);

// Canonical lowest-terms form, "p" when the denominator is 1, else "p/q".
std::string to_string(const rat& q);

// Shortest decimal that round-trips through a double.
std::string format_double(double v);

double to_double(const rat& q);

// The rational with the smallest denominator in [lo, hi] (Stern-Brocot
// descent). Used to snap bisection brackets onto exact roots and to pick
// well-conditioned sample points inside branch intervals.
rat simplest_in_interval(const rat& lo, const rat& hi);

// Rationalizes a double if a nearby small-denominator rational exists within
// max_err; used to recognize exactly periodic points after float refinement.
std::optional<rat> snap_to_rational(double v, double max_err, unsigned long max_den);

}  // namespace hd
