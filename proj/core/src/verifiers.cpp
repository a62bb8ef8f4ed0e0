#include "bcinterp/verifiers.hpp"

#include <algorithm>

#include "bcinterp/koornwinder.hpp"
#include "bcinterp/parallel.hpp"
#include "bcinterp/qintegral.hpp"
#include "bcinterp/refuter.hpp"
#include "bcinterp/sampling.hpp"

namespace bcinterp {

namespace {

std::vector<int> xvars(const Context& ctx, int n) {
  std::vector<int> v;
  for (int i = 0; i < n; ++i) v.push_back(ctx.x(i));
  return v;
}

std::uint64_t case_seed(std::uint64_t base, const std::string& id, int point) {
  std::uint64_t h = base ^ 1469598103934665603ULL;
  for (char c : id) {
    h ^= static_cast<std::uint64_t>(static_cast<unsigned char>(c));
    h *= 1099511628211ULL;
  }
  h ^= static_cast<std::uint64_t>(point) * 0x9e3779b97f4a7c15ULL;
  return h == 0 ? 1 : h;
}

bool symbolic_cell(const Partition& mu, int n) { return mu.weight() <= 3 && n <= 2; }

// Routes are compared pairwise; at specialized points the genericity of
// the sampled values guarantees the linear solve stays regular.
bool routes_agree(const Context& ctx, const Partition& mu, int n) {
  auto vars = xvars(ctx, n);
  RatFun a = pstar_solve(ctx, mu, vars);
  RatFun b = pstar_comb(ctx, mu, vars);
  RatFun c = pstar_branch(ctx, mu, vars);
  return a.eq(b) && b.eq(c);
}

using Cases = std::vector<VerifyCase>;

void add_routes(Cases& out, const SuiteOptions& opt) {
  long maxw = opt.max_weight < 0 ? 4 : opt.max_weight;
  for (int n = 1; n <= 3; ++n) {
    if (opt.n > 0 && n != opt.n) continue;
    for (const auto& mu : partitions_upto(maxw, n)) {
      std::string id = "routes n=" + std::to_string(n) + " mu=(" + mu.to_string() + ")";
      if (symbolic_cell(mu, n)) {
        out.push_back({id + " symbolic", [mu, n] {
                         Context ctx(n);
                         return routes_agree(ctx, mu, n);
                       }});
      } else {
        int points = opt.spec_points;
        std::uint64_t seed = opt.seed;
        out.push_back({id + " at " + std::to_string(points) + " generic points",
                       [mu, n, points, seed, id] {
                         for (int p = 0; p < points; ++p) {
                           GenericPoint pt = sample_generic_point(case_seed(seed, id, p));
                           Context ctx = make_point_context(n, 0, pt);
                           if (!routes_agree(ctx, mu, n)) return false;
                         }
                         return true;
                       }});
      }
    }
  }
}

void add_vanishing(Cases& out, const SuiteOptions& opt) {
  long maxw = opt.max_weight < 0 ? 4 : opt.max_weight;
  for (int n = 1; n <= 3; ++n) {
    if (opt.n > 0 && n != opt.n) continue;
    for (const auto& mu : partitions_upto(maxw, n)) {
      std::string id = "vanishing n=" + std::to_string(n) + " mu=(" + mu.to_string() + ")";
      if (symbolic_cell(mu, n)) {
        out.push_back({id + " symbolic", [mu, n] {
                         Context ctx(n);
                         auto vars = xvars(ctx, n);
                         return definition_slice_check(ctx, mu, vars,
                                                       pstar_solve(ctx, mu, vars));
                       }});
      } else {
        int points = opt.spec_points;
        std::uint64_t seed = opt.seed;
        out.push_back({id + " at " + std::to_string(points) + " generic points",
                       [mu, n, points, seed, id] {
                         for (int p = 0; p < points; ++p) {
                           GenericPoint pt = sample_generic_point(case_seed(seed, id, p));
                           Context ctx = make_point_context(n, 0, pt);
                           auto vars = xvars(ctx, n);
                           if (!definition_slice_check(ctx, mu, vars, pstar_comb(ctx, mu, vars)))
                             return false;
                         }
                         return true;
                       }});
      }
    }
  }
  if (opt.n <= 1) {
    long mmax = opt.max_weight < 0 ? 6 : opt.max_weight;
    for (long m = 0; m <= mmax; ++m) {
      out.push_back({"vanishing closed-form f_" + std::to_string(m) + " = pstar_solve", [m] {
                       Context ctx(1);
                       Partition mu = m == 0 ? Partition() : Partition{std::vector<long>{m}};
                       return f_closed_form(ctx, m).eq(pstar_solve(ctx, mu, xvars(ctx, 1)));
                     }});
    }
  }
}

void add_shifts(Cases& out, const SuiteOptions& opt) {
  long maxw = opt.max_weight < 0 ? 3 : opt.max_weight;
  for (int n = 1; n <= 3; ++n) {
    if (opt.n > 0 && n != opt.n) continue;
    for (const auto& mu : partitions_upto(maxw, n)) {
      std::string tail = " n=" + std::to_string(n) + " mu=(" + mu.to_string() + ")";
      if (mu.part(n) > 0)
        out.push_back({"shift p21" + tail, [mu, n] {
                         Context ctx(n);
                         return verify_shift_p21(ctx, mu, xvars(ctx, n));
                       }});
      else
        out.push_back({"shift p22" + tail, [mu, n] {
                         Context ctx(n);
                         return verify_shift_p22(ctx, mu, xvars(ctx, n));
                       }});
      out.push_back({"shift p23" + tail, [mu, n] {
                       Context ctx(n);
                       return verify_shift_p23(ctx, mu, xvars(ctx, n));
                     }});
    }
  }
}

void add_topterm(Cases& out, const SuiteOptions& opt) {
  long maxw = opt.max_weight < 0 ? 4 : opt.max_weight;
  for (int n = 1; n <= 3; ++n) {
    if (opt.n > 0 && n != opt.n) continue;
    for (const auto& mu : partitions_upto(maxw, n)) {
      std::string id = "topterm n=" + std::to_string(n) + " mu=(" + mu.to_string() + ")";
      if (symbolic_cell(mu, n)) {
        out.push_back({id + " symbolic", [mu, n] {
                         Context ctx(n);
                         return top_term_check(ctx, mu, xvars(ctx, n));
                       }});
      } else {
        int points = opt.spec_points;
        std::uint64_t seed = opt.seed;
        out.push_back({id + " at " + std::to_string(points) + " generic points",
                       [mu, n, points, seed, id] {
                         for (int p = 0; p < points; ++p) {
                           GenericPoint pt = sample_generic_point(case_seed(seed, id, p));
                           Context ctx = make_point_context(n, 0, pt);
                           if (!top_term_check(ctx, mu, xvars(ctx, n))) return false;
                         }
                         return true;
                       }});
      }
    }
  }
}

void add_limits(Cases& out, const SuiteOptions& opt) {
  long maxw = opt.max_weight < 0 ? 3 : opt.max_weight;
  for (int n = 1; n <= 3; ++n) {
    if (opt.n > 0 && n != opt.n) continue;
    for (const auto& mu : partitions_upto(maxw, n)) {
      std::string id = "limits n=" + std::to_string(n) + " mu=(" + mu.to_string() + ")";
      if (n <= 2) {
        out.push_back({id + " symbolic", [mu, n] {
                         Context ctx(n);
                         auto vars = xvars(ctx, n);
                         return limit_check(ctx, mu, vars, LimitDirection::SInfinity) &&
                                limit_check(ctx, mu, vars, LimitDirection::SZero);
                       }});
      } else {
        // s must stay symbolic (the limits grade by the s-exponent).
        int points = opt.spec_points;
        std::uint64_t seed = opt.seed;
        out.push_back({id + " at " + std::to_string(points) + " generic (q,t) points",
                       [mu, n, points, seed, id] {
                         for (int p = 0; p < points; ++p) {
                           GenericPoint pt = sample_generic_point(case_seed(seed, id, p));
                           Context ctx = make_point_context(n, 0, pt, false);
                           auto vars = xvars(ctx, n);
                           if (!limit_check(ctx, mu, vars, LimitDirection::SInfinity)) return false;
                           if (!limit_check(ctx, mu, vars, LimitDirection::SZero)) return false;
                         }
                         return true;
                       }});
      }
    }
  }
}

void add_branch_props(Cases& out, const SuiteOptions& opt) {
  long maxw = opt.max_weight < 0 ? 3 : opt.max_weight;
  for (int n = 2; n <= 3; ++n) {
    if (opt.n > 0 && n != opt.n) continue;
    for (const auto& mu : partitions_upto(maxw, n)) {
      std::string tail = " n=" + std::to_string(n) + " mu=(" + mu.to_string() + ")";
      out.push_back({"branch coefficients" + tail, [mu, n] {
                       Context ctx(Context::Options{0, 0, true, {}});
                       Term u = ctx.gen_term(ctx.u(), 1);
                       Subst uinv(ctx);
                       uinv.set_monomial(ctx.u(), Rat(1),
                                         {{ctx.u(), -1}, {ctx.th(), -2 * (2 * n - 2)}, {ctx.s(), -2}});
                       for (const auto& nu : partitions_upto(mu.weight(), n)) {
                         RatFun c = branch_coeff(ctx, mu, nu, n, u);
                         bool window = interlaces(nu, mu) && nu.length() <= n - 1;
                         if (window == c.is_zero()) return false;  // zero iff outside
                         if (!substitute(c, uinv).eq(c)) return false;
                       }
                       return true;
                     }});
    }
  }
  // Lemma 5.5 vanishing slice.
  long lamw = 4;
  for (int n = 1; n <= 3; ++n) {
    if (opt.n > 0 && n != opt.n) continue;
    for (const auto& mu : partitions_upto(maxw, n)) {
      std::string id =
          "lemma55 n=" + std::to_string(n) + " mu=(" + mu.to_string() + ") |la|<=" +
          std::to_string(lamw);
      out.push_back({id, [mu, n, lamw] {
                       Context ctx(n);
                       auto vars = xvars(ctx, n);
                       for (const auto& la : partitions_upto(lamw, n))
                         if (!lemma55_check(ctx, mu, la, vars)) return false;
                       return true;
                     }});
    }
  }
}

void add_pieri(Cases& out, const SuiteOptions& opt) {
  long maxw = opt.max_weight < 0 ? 3 : opt.max_weight;
  for (int n = 1; n <= 3; ++n) {
    if (opt.n > 0 && n != opt.n) continue;
    for (const auto& mu : partitions_upto(maxw, n)) {
      std::string id = "pieri n=" + std::to_string(n) + " mu=(" + mu.to_string() + ")";
      if (symbolic_cell(mu, n)) {
        out.push_back({id + " symbolic u,q,t,s", [mu, n] {
                         Context ctx(Context::Options{n, 0, true, {}});
                         return verify_pieri(ctx, mu, xvars(ctx, n));
                       }});
      } else {
        int points = opt.spec_points;
        std::uint64_t seed = opt.seed;
        out.push_back({id + " symbolic u at " + std::to_string(points) + " generic points",
                       [mu, n, points, seed, id] {
                         for (int p = 0; p < points; ++p) {
                           GenericPoint pt = sample_generic_point(case_seed(seed, id, p));
                           Context ctx(Context::Options{n, 0, true, {}});
                           ctx.bind_value(ctx.qh(), pt.qh);
                           ctx.bind_value(ctx.th(), pt.th);
                           ctx.bind_value(ctx.s(), pt.s);
                           if (!verify_pieri(ctx, mu, xvars(ctx, n))) return false;
                         }
                         return true;
                       }});
      }
    }
  }
}

void add_cauchy(Cases& out, const SuiteOptions& opt, bool dual) {
  const char* name = dual ? "dual-cauchy" : "cauchy";
  std::vector<std::pair<int, int>> sym_grid{{1, 1}, {1, 2}, {2, 1}, {2, 2}};
  std::vector<std::pair<int, int>> spec_grid{{2, 3}};
  auto wanted = [&](int n, int m) {
    if (opt.n > 0 && n != opt.n) return false;
    if (opt.m > 0 && m != opt.m) return false;
    return true;
  };
  for (auto [n, m] : sym_grid) {
    if (!wanted(n, m)) continue;
    std::string id = std::string(name) + " (n,m)=(" + std::to_string(n) + "," +
                     std::to_string(m) + ") symbolic";
    out.push_back({id, [n, m, dual] {
                     Context ctx(Context::Options{n, m, false, {}});
                     return dual ? dual_cauchy_check(ctx, n, m) : verify_cauchy(ctx, n, m);
                   }});
  }
  for (auto [n, m] : spec_grid) {
    if (!wanted(n, m)) continue;
    std::string id = std::string(name) + " (n,m)=(" + std::to_string(n) + "," +
                     std::to_string(m) + ")";
    int points = opt.spec_points;
    std::uint64_t seed = opt.seed;
    out.push_back({id + " at " + std::to_string(points) + " generic points",
                   [n, m, dual, points, seed, id] {
                     for (int p = 0; p < points; ++p) {
                       GenericPoint pt = sample_generic_point(case_seed(seed, id, p));
                       Context ctx = make_point_context(n, m, pt);
                       if (!(dual ? dual_cauchy_check(ctx, n, m) : verify_cauchy(ctx, n, m)))
                         return false;
                     }
                     return true;
                   }});
  }
}

void add_integral(Cases& out, const SuiteOptions& opt) {
  long maxw = opt.max_weight < 0 ? 3 : opt.max_weight;
  for (int n = 2; n <= 3; ++n) {
    if (opt.n > 0 && n != opt.n) continue;
    for (int k = 0; k <= 1; ++k) {
      if (opt.k >= 0 && k != opt.k) continue;
      for (const auto& mu : partitions_upto(maxw, n)) {
        if (mu.part(n) != 0) continue;
        std::string id = "integral n=" + std::to_string(n) + " k=" + std::to_string(k) +
                         " mu=(" + mu.to_string() + ")";
        if (n <= 2) {
          out.push_back({id + " symbolic", [mu, n, k] {
                           Context ctx = make_integral_context(n, k);
                           return integral_rep_verify(ctx, mu, n, k);
                         }});
        } else {
          int points = opt.spec_points;
          std::uint64_t seed = opt.seed;
          out.push_back({id + " at " + std::to_string(points) + " generic q-points",
                         [mu, n, k, points, seed, id] {
                           for (int p = 0; p < points; ++p) {
                             GenericPoint pt = sample_generic_point(case_seed(seed, id, p));
                             Context ctx = make_integral_context(n, k);
                             ctx.bind_value(ctx.qh(), pt.qh);
                             if (!integral_rep_verify(ctx, mu, n, k)) return false;
                           }
                           return true;
                         }});
        }
      }
      // Integral route composed with the column strip agrees with the
      // tableau formula (the recursion the representation provides).
      if ((opt.k < 0 || k == opt.k)) {
        std::string rid = "integral route n=" + std::to_string(n) + " k=" + std::to_string(k);
        if (n <= 2) {
          out.push_back({rid + " symbolic", [n, k, maxw] {
                           Context ctx = make_integral_context(n, k);
                           auto vars = xvars(ctx, n);
                           for (const auto& mu : partitions_upto(std::min(maxw, 2L), n))
                             if (!pstar_integral(ctx, mu, n, k).eq(pstar_comb(ctx, mu, vars)))
                               return false;
                           return true;
                         }});
        } else {
          std::uint64_t seed = opt.seed;
          out.push_back({rid + " at a generic q-point", [n, k, seed, rid] {
                           GenericPoint pt = sample_generic_point(case_seed(seed, rid, 0));
                           Context ctx = make_integral_context(n, k);
                           ctx.bind_value(ctx.qh(), pt.qh);
                           auto vars = xvars(ctx, n);
                           for (const auto& mu : partitions_upto(2, n))
                             if (!pstar_integral(ctx, mu, n, k).eq(pstar_comb(ctx, mu, vars)))
                               return false;
                           return true;
                         }});
        }
      }
    }
  }
  if (opt.n <= 0 || opt.n == 2) {
    out.push_back({"integral bound shifts n=2 k=1 symbolic", [] {
                     Context ctx = make_integral_context(2, 1);
                     std::vector<int> xv = xvars(ctx, 2), yv{ctx.y(0)};
                     Subst sh(ctx);
                     sh.set(ctx.s(),
                            ctx.term_mul(ctx.gen_term(ctx.s(), 1), ctx.gen_term(ctx.th(), 1)));
                     RatFun inner = substitute(pstar_comb(ctx, Partition::parse("1"), yv), sh);
                     RatFun base = iterated_integral(ctx, xv, yv, inner, 1,
                                                     standard_bounds(ctx, xv), {0});
                     for (int r = 1; r <= 2; ++r)
                       for (int sp = 1; sp <= 2; ++sp) {
                         QIntegralBounds b;
                         b.lower = ctx.term_mul(ctx.gen_term(ctx.qh(), -2 * sp),
                                                ctx.gen_term(ctx.x(1), 1));
                         b.upper = ctx.term_mul(ctx.gen_term(ctx.qh(), 2 * (r + 1)),
                                                ctx.gen_term(ctx.x(0), 1));
                         if (!iterated_integral(ctx, xv, yv, inner, 1, {b}, {0}).eq(base))
                           return false;
                       }
                     return true;
                   }});
  }
  if (opt.n <= 0 || opt.n == 3) {
    std::uint64_t seed = opt.seed;
    out.push_back({"integral order independence n=3", [seed] {
                     GenericPoint pt = sample_generic_point(case_seed(seed, "order", 0));
                     Context ctx = make_integral_context(3, 0);
                     ctx.bind_value(ctx.qh(), pt.qh);
                     std::vector<int> xv = xvars(ctx, 3), yv{ctx.y(0), ctx.y(1)};
                     Subst sh(ctx);
                     sh.set(ctx.s(),
                            ctx.term_mul(ctx.gen_term(ctx.s(), 1), ctx.gen_term(ctx.th(), 1)));
                     RatFun inner = substitute(pstar_comb(ctx, Partition::parse("1"), yv), sh);
                     auto bounds = standard_bounds(ctx, xv);
                     return iterated_integral(ctx, xv, yv, inner, 0, bounds, {1, 0})
                         .eq(iterated_integral(ctx, xv, yv, inner, 0, bounds, {0, 1}));
                   }});
  }
}

void add_binomial(Cases& out, const SuiteOptions& opt) {
  int points = opt.spec_points;
  std::uint64_t seed = opt.seed;
  int mmax = opt.max_weight < 0 ? 4 : static_cast<int>(opt.max_weight);
  for (int p = 0; p < points; ++p) {
    std::string id = "binomial n=1 m<=" + std::to_string(mmax) + " point #" +
                     std::to_string(p + 1);
    out.push_back({id, [p, seed, id, mmax] {
                     for (std::uint64_t attempt = 0; attempt < 32; ++attempt) {
                       KoornwinderPoint pt =
                           sample_koornwinder_point(case_seed(seed, id, static_cast<int>(attempt)),
                                                    false);
                       Context ctx = make_koornwinder_context(1, pt);
                       try {
                         return verify_binomial_n1(ctx, mmax);
                       } catch (const DegenerateEigenvalue&) {
                         continue;  // re-sample, per the oracle contract
                       }
                     }
                     return false;
                   }});
  }
  // Structural identities with a symbolic evaluation table, n <= 2.
  for (int n = 1; n <= 2; ++n) {
    for (const auto& la : partitions_upto(3, n)) {
      std::string id = "binomial structure n=" + std::to_string(n) + " la=(" + la.to_string() +
                       ") symbolic e";
      out.push_back({id, [la, n] {
                       auto grid = partitions_upto(la.weight(), n);
                       std::vector<std::string> extras;
                       for (std::size_t i = 0; i < grid.size(); ++i)
                         extras.push_back("e" + std::to_string(i + 1));
                       Context ctx(Context::Options{n, 0, false, extras});
                       KoornwinderParams p = standard_params(ctx, n);
                       EvaluationTable e;
                       for (std::size_t i = 0; i < grid.size(); ++i)
                         e.emplace(grid[i],
                                   grid[i].empty()
                                       ? RatFun::one(ctx.size())
                                       : RatFun(Poly::symbol(ctx.size(),
                                                             ctx.extra(static_cast<int>(i)))));
                       auto vars = xvars(ctx, n);
                       return binomial_rhs_is_one_at_ones(ctx, la, p, e, vars) &&
                              binomial_top_term_check(ctx, la, p, vars);
                     }});
    }
  }
}

void add_duality(Cases& out, const SuiteOptions& opt) {
  std::uint64_t seed = opt.seed;
  int mmax = opt.max_weight < 0 ? 3 : static_cast<int>(opt.max_weight);
  for (int m = 0; m <= mmax; ++m)
    for (int nu = 0; nu <= mmax; ++nu) {
      std::string id = "duality n=1 (la,nu)=(" + std::to_string(m) + "," + std::to_string(nu) +
                       ") self-dual";
      out.push_back({id, [m, nu, seed, id] {
                       for (std::uint64_t attempt = 0; attempt < 32; ++attempt) {
                         KoornwinderPoint pt = sample_koornwinder_point(
                             case_seed(seed, id, static_cast<int>(attempt)), true);
                         Context ctx = make_koornwinder_context(1, pt);
                         try {
                           return verify_duality_n1(ctx, m, nu);
                         } catch (const DegenerateEigenvalue&) {
                           continue;
                         }
                       }
                       return false;
                     }});
    }
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"routes",   "vanishing", "shifts",      "topterm",    "limits", "branching",
          "pieri",    "cauchy",    "dualcauchy",  "integral",   "binomial-n1",
          "duality-n1", "all"};
}

std::vector<VerifyCase> make_suite(const std::string& suite, const SuiteOptions& options) {
  Cases out;
  bool all = suite == "all";
  bool known = all;
  if (all || suite == "routes") add_routes(out, options), known = true;
  if (all || suite == "vanishing") add_vanishing(out, options), known = true;
  if (all || suite == "shifts") add_shifts(out, options), known = true;
  if (all || suite == "topterm") add_topterm(out, options), known = true;
  if (all || suite == "limits") add_limits(out, options), known = true;
  if (all || suite == "branching") add_branch_props(out, options), known = true;
  if (all || suite == "pieri") add_pieri(out, options), known = true;
  if (all || suite == "cauchy") add_cauchy(out, options, false), known = true;
  if (all || suite == "dualcauchy") add_cauchy(out, options, true), known = true;
  if (all || suite == "integral") add_integral(out, options), known = true;
  if (all || suite == "binomial-n1") add_binomial(out, options), known = true;
  if (all || suite == "duality-n1") add_duality(out, options), known = true;
  if (!known) throw Error("unknown suite: " + suite);
  return out;
}

std::vector<VerifyResult> run_cases(const std::vector<VerifyCase>& cases, int workers) {
  std::vector<VerifyResult> results(cases.size());
  parallel_for(cases.size(), workers, [&](std::size_t i) {
    results[i].id = cases[i].id;
    try {
      results[i].pass = cases[i].run();
    } catch (const std::exception& e) {
      results[i].pass = false;
      results[i].error = e.what();
    }
  });
  return results;
}

}  // namespace bcinterp
