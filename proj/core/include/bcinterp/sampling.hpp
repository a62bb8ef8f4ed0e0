#ifndef BCINTERP_SAMPLING_HPP
#define BCINTERP_SAMPLING_HPP

#include <cstdint>

#include "bcinterp/alphabet.hpp"
#include "bcinterp/subst.hpp"

namespace bcinterp {

/*
 * Seeded generic-parameter sampling. Identical seeds give identical
 * points, so every randomized verification is reproducible; genericity is
 * rejected-sampled through check_generic at the stated bound.
 */

struct GenericPoint {
  Rat qh, th, s;
};

GenericPoint sample_generic_point(std::uint64_t seed, long bound = 64);

struct KoornwinderPoint {
  Rat qh, th;
  Rat r[4];  // square roots of the parameters a_i
};

// self_dual forces a1 = a2 a3 a4 (r1 = r2 r3 r4).
KoornwinderPoint sample_koornwinder_point(std::uint64_t seed, bool self_dual, long bound = 64);

// Context factories binding the sampled values (s stays symbolic; see the
// q-calculus notes on parameter shifts).
Context make_point_context(int nx, int ny, const GenericPoint& point, bool bind_s = true);
Context make_koornwinder_context(int nx, const KoornwinderPoint& point);

}  // namespace bcinterp

#endif
