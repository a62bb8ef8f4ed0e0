#include "bcinterp/sampling.hpp"

#include <random>

namespace bcinterp {

namespace {

Rat draw_rat(std::mt19937_64& rng) {
  static const long primes[] = {2, 3, 5, 7, 11, 13};
  std::uniform_int_distribution<int> pick(0, 5);
  std::uniform_int_distribution<int> expd(1, 2);
  std::uniform_int_distribution<int> coin(0, 1);
  long p = primes[pick(rng)], q = primes[pick(rng)];
  if (p == q) q = primes[(pick(rng) + 1) % 6];
  Rat r = rat(p, q);
  if (expd(rng) == 2) r *= rat(p, 1);
  if (coin(rng)) r = Rat(1) / r;
  return r;
}

}  // namespace

GenericPoint sample_generic_point(std::uint64_t seed, long bound) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    GenericPoint p{draw_rat(rng), draw_rat(rng), draw_rat(rng)};
    if (check_generic(Rat(p.qh * p.qh), Rat(p.th * p.th), p.s, bound)) return p;
  }
  throw Error("generic parameter sampling failed");
}

KoornwinderPoint sample_koornwinder_point(std::uint64_t seed, bool self_dual, long bound) {
  std::mt19937_64 rng(seed ^ 0xd1b54a32d192ed03ULL);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    KoornwinderPoint p;
    p.qh = draw_rat(rng);
    p.th = draw_rat(rng);
    for (int i = 0; i < 4; ++i) p.r[i] = draw_rat(rng);
    if (self_dual) p.r[0] = Rat(p.r[1] * p.r[2] * p.r[3]);
    Rat q(p.qh * p.qh), t(p.th * p.th);
    std::vector<Rat> extras;
    Rat a1p(1);
    for (int i = 0; i < 4; ++i) {
      extras.push_back(Rat(p.r[i] * p.r[i]));
      a1p *= p.r[i];
    }
    extras.push_back(a1p);  // dual parameter a1' = r1 r2 r3 r4
    if (check_generic(q, t, extras[0], extras, bound)) return p;
  }
  throw Error("koornwinder parameter sampling failed");
}

Context make_point_context(int nx, int ny, const GenericPoint& point, bool bind_s) {
  Context ctx(nx, ny);
  ctx.bind_value(ctx.qh(), point.qh);
  ctx.bind_value(ctx.th(), point.th);
  if (bind_s) ctx.bind_value(ctx.s(), point.s);
  return ctx;
}

Context make_koornwinder_context(int nx, const KoornwinderPoint& point) {
  Context ctx(nx, 0);
  ctx.bind_value(ctx.qh(), point.qh);
  ctx.bind_value(ctx.th(), point.th);
  for (int i = 0; i < 4; ++i) ctx.bind_value(ctx.r(i), point.r[i]);
  return ctx;
}

}  // namespace bcinterp
