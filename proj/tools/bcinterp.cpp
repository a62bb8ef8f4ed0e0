// Command-line front end: compute interpolation and Macdonald polynomials,
// run the verification suites, and emit refutation certificates.
//
// Exit codes: 0 verified/computed, 1 mismatch or invalid certificate,
// 2 usage errors (diagnostics on standard error).

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "bcinterp/koornwinder.hpp"
#include "bcinterp/parallel.hpp"
#include "bcinterp/qintegral.hpp"
#include "bcinterp/refuter.hpp"
#include "bcinterp/sampling.hpp"
#include "bcinterp/serialize.hpp"
#include "bcinterp/verifiers.hpp"

namespace {

using namespace bcinterp;

struct SpecValues {
  std::map<std::string, Rat> values;
};

SpecValues parse_spec(const std::string& text) {
  SpecValues out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw Error("malformed --spec entry: " + item);
    std::string key = item.substr(0, eq);
    auto value = rat_from_string(item.substr(eq + 1));
    if (!value || sgn(*value) == 0) throw Error("malformed --spec value in: " + item);
    out.values[key] = *value;
  }
  return out;
}

// Binds q/t/a1..a4 at the square level and qh/th/s/r1..r4 directly.
void apply_spec(Context& ctx, const SpecValues& spec) {
  for (const auto& [key, value] : spec.values) {
    if (key == "q")
      ctx.bind_square_value(ctx.qh(), value);
    else if (key == "t")
      ctx.bind_square_value(ctx.th(), value);
    else if (key == "a1" || key == "a2" || key == "a3" || key == "a4") {
      auto root = rat_sqrt(value);
      if (!root) throw Error("--spec " + key + " must be a perfect rational square; bind r" +
                             key.substr(1) + " instead");
      ctx.bind_value(ctx.r(key[1] - '1'), *root);
    } else {
      auto id = ctx.find(key);
      if (!id || *id >= ctx.num_generators()) throw Error("unknown --spec symbol: " + key);
      ctx.bind_value(*id, value);
    }
  }
}

std::vector<int> xvars(const Context& ctx, int n) {
  std::vector<int> v;
  for (int i = 0; i < n; ++i) v.push_back(ctx.x(i));
  return v;
}

int cmd_compute(const std::string& what, const std::string& mu_text, int n,
                const std::string& method, int k, const std::string& format,
                const std::string& spec_text) {
  Partition mu = Partition::parse(mu_text);
  if (n <= 0) throw Error("--n must be positive");
  if (mu.length() > n) throw Error("partition has more parts than variables");
  SpecValues spec = parse_spec(spec_text);
  RatFun value;
  Context ctx(n);
  if (what == "macdonald") {
    apply_spec(ctx, spec);
    value = macdonald_p(ctx, mu, xvars(ctx, n));
  } else if (what == "pstar") {
    if (method == "integral") {
      if (spec.values.count("t") || spec.values.count("th"))
        throw Error("the integral route fixes t = q^(2k+1); do not bind t");
      Context ictx = make_integral_context(n, k);
      apply_spec(ictx, spec);
      value = pstar_integral(ictx, mu, n, k);
      std::cout << (format == "json" ? to_json(value, ictx) : to_text(value, ictx)) << "\n";
      return 0;
    }
    apply_spec(ctx, spec);
    Route route = Route::Comb;
    if (method == "solve")
      route = Route::Solve;
    else if (method == "comb")
      route = Route::Comb;
    else if (method == "branch")
      route = Route::Branch;
    else
      throw Error("unknown method: " + method);
    value = pstar(ctx, mu, xvars(ctx, n), route);
  } else {
    throw Error("unknown compute target: " + what);
  }
  std::cout << (format == "json" ? to_json(value, ctx) : to_text(value, ctx)) << "\n";
  return 0;
}

int cmd_verify(const std::string& suite, const SuiteOptions& options, int workers) {
  auto cases = make_suite(suite, options);
  auto results = run_cases(cases, workers);
  bool all_pass = true;
  for (const auto& r : results) {
    if (r.pass) {
      std::cout << "PASS " << r.id << "\n";
    } else {
      all_pass = false;
      std::cout << "FAIL " << r.id;
      if (!r.error.empty()) std::cout << " [" << r.error << "]";
      std::cout << "\n";
    }
  }
  std::cout << (all_pass ? "OK" : "MISMATCH") << " (" << results.size() << " cases)\n";
  return all_pass ? 0 : 1;
}

int cmd_refute(long d, long deg, long probes, bool json_only) {
  Context ctx(1);
  RefutationCertificate cert = refute(ctx, d, deg, probes);
  if (json_only) {
    std::cout << certificate_to_json(ctx, cert) << "\n";
  } else {
    std::cout << certificate_summary(ctx, cert);
    std::cout << certificate_to_json(ctx, cert) << "\n";
  }
  if (!cert.valid || !check_certificate(ctx, cert)) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"BC-type interpolation polynomial calculator and identity verifier"};
  app.require_subcommand(1);

  // compute
  auto* compute = app.add_subcommand("compute", "compute a polynomial and print it");
  std::string what, mu_text = "0", method = "comb", format = "text", spec_text;
  int n = 1, k = 0;
  compute->add_option("what", what, "pstar | macdonald")->required();
  compute->add_option("--mu", mu_text, "partition, comma separated (e.g. 2,1)");
  compute->add_option("--n", n, "number of variables")->required();
  compute->add_option("--method", method, "solve | comb | branch | integral");
  compute->add_option("--k", k, "integral specialization t = q^(2k+1)");
  compute->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
  compute->add_option("--spec", spec_text, "numeric bindings, e.g. q=1/4,s=5 or qh=1/2,r1=3");

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  SuiteOptions options;
  int workers = 0;
  std::uint64_t seed = 1;
  long max_weight = -1;
  int opt_n = -1, opt_m = -1, opt_k = -1, spec_points = 5;
  verify->add_option("suite", suite, "one of: routes vanishing shifts topterm limits pieri "
                                     "cauchy dualcauchy integral binomial-n1 duality-n1 all")
      ->required();
  verify->add_option("--max-weight", max_weight, "largest |mu| in the grid");
  verify->add_option("--n", opt_n, "restrict to one variable count");
  verify->add_option("--m", opt_m, "second box side (cauchy)");
  verify->add_option("--k", opt_k, "restrict the integral suite to one k");
  verify->add_option("--seed", seed, "seed for the generic-point sampler");
  verify->add_option("--points", spec_points, "generic points per specialized case");
  verify->add_option("--workers", workers, "worker threads (default: BCINTERP_WORKERS or cores)");

  // refute
  auto* refute_cmd = app.add_subcommand("refute", "emit a non-existence certificate");
  std::string target;
  long d = 1, deg = 1, probes = -1;
  bool json_only = false;
  refute_cmd->add_option("target", target, "qde")->required();
  refute_cmd->add_option("--d", d, "order of the hypothetical q-difference equation")->required();
  refute_cmd->add_option("--deg", deg, "degree bound on the extreme coefficients")->required();
  refute_cmd->add_option("--probes", probes, "number of probe points (default deg+1)");
  refute_cmd->add_flag("--json", json_only, "print the JSON certificate only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (compute->parsed()) return cmd_compute(what, mu_text, n, method, k, format, spec_text);
    if (verify->parsed()) {
      options.max_weight = max_weight;
      options.n = opt_n;
      options.m = opt_m;
      options.k = opt_k;
      options.seed = seed;
      options.spec_points = spec_points;
      return cmd_verify(suite, options, workers);
    }
    if (refute_cmd->parsed()) {
      if (target != "qde") throw Error("unknown refutation target: " + target);
      if (probes < 0) probes = deg + 1;
      return cmd_refute(d, deg, probes, json_only);
    }
  } catch (const InsufficientProbes& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
