#include "bcinterp/refuter.hpp"

#include <sstream>

#include <json.hpp>

#include "bcinterp/serialize.hpp"

namespace bcinterp {

namespace {

Poly term_poly(const Context& ctx, const Term& t) { return Poly::from_term(t); }

RatFun f_at(const Context& ctx, const RatFun& f, const Term& point) {
  Subst at(ctx);
  at.set(ctx.x(0), point);
  return substitute(f, at);
}

}  // namespace

RatFun f_closed_form(const Context& ctx, long m) {
  if (m < 0) throw Error("f_m needs m >= 0");
  const int x = ctx.x(0);
  RatFun acc = RatFun::one(ctx.size());
  for (long i = 0; i < m; ++i) {
    Poly first = Poly::symbol(ctx.size(), x) - term_poly(ctx, ctx.gen_term(ctx.qh(), 2 * i));
    Term inv = ctx.term_mul(ctx.gen_term(ctx.qh(), -2 * i),
                            ctx.term_mul(ctx.gen_term(ctx.s(), -2), ctx.gen_term(x, -1)));
    Poly second = Poly::constant(ctx.size(), Rat(1));
    inv.coef = -inv.coef;
    second += term_poly(ctx, inv);
    acc = acc * RatFun(first * second);
  }
  return acc;
}

RefutationCertificate refute(const Context& ctx, long d, long deg_bound, long probe_count) {
  if (d < 1 || deg_bound < 1) throw Error("refute needs d >= 1 and deg_bound >= 1");
  if (probe_count <= deg_bound) throw InsufficientProbes();
  RefutationCertificate cert;
  cert.order = d;
  cert.deg_bound = deg_bound;
  cert.vanishing_pattern_ok = true;
  for (long m = 2 * d; m < 2 * d + probe_count; ++m) {
    cert.probes.push_back(m);
    RatFun fm = f_closed_form(ctx, m);
    // Probe x = q^{m-d}: shifts q^i x with i in [-d, d) are vanishing
    // points of f_m; the leading shift survives with witness f_m(q^m).
    for (long i = -d; i < d; ++i) {
      RatFun v = f_at(ctx, fm, ctx.gen_term(ctx.qh(), 2 * (m - d + i)));
      if (!v.is_zero()) cert.vanishing_pattern_ok = false;
    }
    RatFun witness = f_at(ctx, fm, ctx.gen_term(ctx.qh(), 2 * m));
    if (!witness.eq(norm_H(ctx, Partition{std::vector<long>{m}}, 1)))
      cert.vanishing_pattern_ok = false;
    // Mirrored probe x = 1/(s^2 q^{m-d}): shifts with i in (-d, d] vanish
    // and the surviving i = -d evaluation equals the same witness by the
    // inversion symmetry f_m(1/(s^2 x)) = f_m(x).
    Term mirror = ctx.term_mul(ctx.gen_term(ctx.s(), -2), ctx.gen_term(ctx.qh(), -2 * (m - d)));
    for (long i = -d + 1; i <= d; ++i) {
      RatFun v = f_at(ctx, fm, ctx.term_mul(ctx.gen_term(ctx.qh(), 2 * i), mirror));
      if (!v.is_zero()) cert.vanishing_pattern_ok = false;
    }
    RatFun mirrored = f_at(
        ctx, fm, ctx.term_mul(ctx.gen_term(ctx.s(), -2), ctx.gen_term(ctx.qh(), -2 * m)));
    if (!mirrored.eq(witness)) cert.vanishing_pattern_ok = false;
    cert.witnesses.push_back(std::move(witness));
    cert.roots_plus.push_back(ctx.gen_term(ctx.qh(), 2 * (m - d)));
    cert.roots_minus.push_back(mirror);
  }
  cert.roots_distinct = true;
  for (std::size_t i = 0; i < cert.roots_plus.size(); ++i)
    for (std::size_t j = i + 1; j < cert.roots_plus.size(); ++j) {
      if (cert.roots_plus[i].mono == cert.roots_plus[j].mono) cert.roots_distinct = false;
      if (cert.roots_minus[i].mono == cert.roots_minus[j].mono) cert.roots_distinct = false;
    }
  for (const Term& rp : cert.roots_plus)
    for (const Term& rm : cert.roots_minus)
      if (rp.mono == rm.mono) cert.roots_distinct = false;
  cert.surplus = probe_count > deg_bound;
  bool witnesses_nonzero = true;
  for (const RatFun& w : cert.witnesses)
    if (w.is_zero()) witnesses_nonzero = false;
  cert.valid =
      cert.vanishing_pattern_ok && cert.roots_distinct && cert.surplus && witnesses_nonzero;
  return cert;
}

bool check_certificate(const Context& ctx, const RefutationCertificate& cert) {
  if (cert.order < 1) return false;
  if (static_cast<long>(cert.probes.size()) <= cert.deg_bound) return false;
  for (std::size_t i = 0; i < cert.probes.size(); ++i) {
    long m = cert.probes[static_cast<std::size_t>(i)];
    RatFun expected = f_at(ctx, f_closed_form(ctx, m), ctx.gen_term(ctx.qh(), 2 * m));
    if (expected.is_zero()) return false;
    if (!expected.eq(cert.witnesses[i])) return false;
  }
  for (std::size_t i = 0; i < cert.roots_plus.size(); ++i)
    for (std::size_t j = i + 1; j < cert.roots_plus.size(); ++j)
      if (cert.roots_plus[i].mono == cert.roots_plus[j].mono ||
          cert.roots_minus[i].mono == cert.roots_minus[j].mono)
        return false;
  return cert.vanishing_pattern_ok;
}

std::string certificate_to_json(const Context& ctx, const RefutationCertificate& cert) {
  nlohmann::ordered_json obj;
  obj["order"] = cert.order;
  obj["deg_bound"] = cert.deg_bound;
  obj["probes"] = cert.probes;
  auto term_text = [&](const Term& t) { return to_text(Poly::from_term(t), ctx); };
  nlohmann::ordered_json rp = nlohmann::ordered_json::array(),
                         rm = nlohmann::ordered_json::array(),
                         wit = nlohmann::ordered_json::array();
  for (const Term& t : cert.roots_plus) rp.push_back(term_text(t));
  for (const Term& t : cert.roots_minus) rm.push_back(term_text(t));
  for (const RatFun& w : cert.witnesses) wit.push_back(to_text(w, ctx));
  obj["roots_plus"] = std::move(rp);
  obj["roots_minus"] = std::move(rm);
  obj["witnesses"] = std::move(wit);
  obj["vanishing_pattern_ok"] = cert.vanishing_pattern_ok;
  obj["roots_distinct"] = cert.roots_distinct;
  obj["surplus"] = cert.surplus;
  obj["valid"] = cert.valid;
  return obj.dump(2);
}

std::string certificate_summary(const Context& ctx, const RefutationCertificate& cert) {
  std::ostringstream out;
  out << "No q-difference equation of order " << cert.order
      << " with rational coefficients of degree span <= " << cert.deg_bound
      << " is satisfied by the one-variable interpolation polynomials f_m.\n";
  out << "Probes m = " << cert.probes.front() << ".." << cert.probes.back()
      << ": evaluating the hypothetical relation at x = q^(m-" << cert.order
      << ") kills every shift except the leading one, forcing\n";
  out << "  a_" << cert.order << "(x) = 0 at " << cert.roots_plus.size()
      << " distinct points";
  out << " (and symmetrically a_-" << cert.order << " at the mirrored points 1/(s^2 q^(m-"
      << cert.order << "))).\n";
  out << "Witnesses f_m(q^m) = H((m),1;q,t,s), all nonzero; e.g. m = " << cert.probes.front()
      << ": " << to_text(cert.witnesses.front(), ctx) << "\n";
  out << "Root count " << cert.roots_plus.size() << " > degree bound " << cert.deg_bound
      << ", so both extreme coefficients vanish identically; certificate "
      << (cert.valid ? "VALID" : "INVALID") << ".\n";
  return out.str();
}

}  // namespace bcinterp
