#include "qgen/identities.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qgen/qfamilies.hpp"
#include "qgen/render.hpp"

namespace qgen {

namespace {

using std::size_t;

constexpr std::string_view kNames[] = {"EQ5",      "EQ6",       "EQ10_DIST", "EQ10_ADD", "EQ11",     "EQ12",
                                       "PROP1",    "PROP2",     "EQ17",      "THM3A",    "EQ21",     "THM4_DIST",
                                       "THM4_ADD", "EQ23",      "EQ24",      "EQ25_FINAL"};

size_t param(const ParamTuple& params, std::string_view name) {
  for (const auto& p : params) {
    if (p.name == name) return static_cast<size_t>(p.value);
  }
  throw std::invalid_argument("missing parameter " + std::string(name));
}

RatFn integer(long v) { return RatFn(Rat(v)); }
RatFn binom(size_t n, size_t k) { return RatFn(Rat(binomial(n, k), 1)); }
RatFn sign_pow(size_t a) { return integer(a % 2 == 0 ? 1 : -1); }
RatFn pow(const RatFn& f, size_t k) { return f.pow(static_cast<long>(k)); }

std::vector<long> range(long lo, long hi) {
  std::vector<long> out;
  for (long v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

const std::vector<long> kOddM = {1, 3, 5, 7};

// E_{n,q^m}(y) as a polynomial in X after y is replaced so that
// (q^m)^y = q^a X^k; i.e. Y -> q^a X^k.
PolyX euler_poly_base_changed(size_t n, size_t m, size_t a, size_t k) {
  return q_euler_poly(n).subst_qpow(m).subst_x(RatFn::q_pow(a), k);
}

PolyX genocchi_poly_base_changed(size_t n, size_t m, size_t a, size_t k) {
  return q_genocchi_poly(n).subst_qpow(m).subst_x(RatFn::q_pow(a), k);
}

// ---- classical ----

IdentitySides eq5(const ParamTuple& p) {
  const size_t m = param(p, "m");
  XPoly rhs;
  for (size_t k = 0; k <= m; ++k) {
    const Rat c = Rat(binomial(m, k), 1) * genocchi_number(k + 1) / Rat(static_cast<long>(k + 1));
    rhs = rhs + XPoly(PolyQ::monomial(c, m - k));
  }
  return {euler_poly(m), rhs};
}

IdentitySides eq6(const ParamTuple& p) {
  const size_t m = param(p, "m");
  const size_t n = param(p, "n");
  const Rat nn(static_cast<long>(n));
  const Rat lhs = (nn.pow(static_cast<long>(m)) - nn) * genocchi_number(m);
  Rat rhs;
  for (size_t k = 1; k < m; ++k) {
    rhs += Rat(binomial(m, k), 1) * nn.pow(static_cast<long>(k)) * genocchi_number(k) * alt_power_sum(m - k, n - 1);
  }
  return {RatFn(lhs), RatFn(rhs)};
}

// ---- q-Euler ----

IdentitySides eq10_dist(const ParamTuple& p) {
  const size_t n = param(p, "n");
  const size_t m = param(p, "m");
  PolyX sum;
  for (size_t a = 0; a < m; ++a) sum += euler_poly_base_changed(n, m, a, 1) * (sign_pow(a) * RatFn::q_pow(a));
  return {q_euler_poly(n), sum * (q_two() / q_two(m) * pow(q_int(m), n))};
}

IdentitySides eq10_add(const ParamTuple& p) {
  const size_t n = param(p, "n");
  PolyX rhs;
  for (size_t k = 0; k <= n; ++k) {
    rhs += PolyX::q_bracket_x().pow(n - k) * PolyX::monomial(binom(n, k) * q_euler_number(k), k);
  }
  return {q_euler_poly(n), rhs};
}

IdentitySides eq11(const ParamTuple& p) {
  const size_t n = param(p, "n");
  const size_t m = param(p, "m");
  PolyX sum;
  for (size_t a = 0; a < m; ++a) sum += euler_poly_base_changed(n, m, a, m) * (sign_pow(a) * RatFn::q_pow(a));
  return {q_euler_poly(n).subst_x(1, m) * q_two(m), sum * (q_two() * pow(q_int(m), n))};
}

// sum_{l<n} C(n,l) [m]^l E_{l,q^m} sum_{a=1}^{m-1} (-1)^a q^{a(l+1)} [a]^{n-l}
RatFn eq12_rhs(size_t n, size_t m) {
  RatFn total;
  for (size_t l = 0; l < n; ++l) {
    RatFn inner;
    for (size_t a = 1; a < m; ++a) inner += sign_pow(a) * RatFn::q_pow(a * (l + 1)) * pow(q_int(a), n - l);
    if (inner.is_zero()) continue;
    total += binom(n, l) * pow(q_int(m), l) * q_euler_number(l).subst_qpow(m) * inner;
  }
  return total;
}

IdentitySides eq12(const ParamTuple& p, StarQuotient quotient) {
  const size_t n = param(p, "n");
  const size_t m = param(p, "m");
  const RatFn lhs = q_int_signed(m) * q_euler_number(n) - pow(q_int(m), n) *
                                                             star_quotient(StarVariant::euler, m, n, quotient) *
                                                             q_euler_number(n).subst_qpow(m);
  return {lhs, eq12_rhs(n, m)};
}

IdentitySides prop1(const ParamTuple& p, StarQuotient quotient) {
  const size_t n = param(p, "n");
  const size_t m = param(p, "m");
  return {star_apply(StarVariant::euler, m, n, q_euler_number(n), quotient), eq12_rhs(n, m)};
}

IdentitySides prop2(const ParamTuple& p, bool sign_corrected) {
  const size_t n = param(p, "n");
  const size_t m = param(p, "m");
  RatFn lhs;
  for (size_t l = 0; l < n; ++l) lhs += sign_pow(l) * RatFn::q_pow(l) * pow(q_int(l), m);
  const RatFn shifted = sign_pow(n + 1) * RatFn::q_pow(n) * q_euler_poly(m).eval_int(n);
  const RatFn e = q_euler_number(m);
  const RatFn rhs = (sign_corrected ? shifted + e : shifted - e) / q_two();
  return {lhs, rhs};
}

// ---- q-Genocchi / q-Bernoulli ----

IdentitySides eq17(const ParamTuple& p) {
  const size_t n = param(p, "n");
  const RatFn rhs = q_two() * q_bernoulli_number(n) - integer(2) * pow(q_two(), n) * q_bernoulli_number(n).subst_qpow(2);
  return {q_genocchi_number(n), rhs};
}

IdentitySides thm3a(const ParamTuple& p, GenocchiForm form) {
  const size_t n = param(p, "n");
  // The t^n/n! coefficient of [2]_q t sum (-1)^k q^{k+x} e^{[k+x]_q t} is
  // n q^x E_{n-1,q}(x).
  const PolyX lhs = PolyX::x() * q_euler_poly(n - 1) * integer(static_cast<long>(n));
  return {lhs, q_genocchi_poly(n, form)};
}

IdentitySides eq21(const ParamTuple& p, bool corrected) {
  const size_t n = param(p, "n");
  PolyX rhs;
  for (size_t k = 0; k <= n; ++k) {
    const size_t idx = corrected ? k : n;
    const RatFn g = q_genocchi_number(idx + 1) / integer(static_cast<long>(idx + 1));
    rhs += PolyX::q_bracket_x().pow(n - k) * PolyX::monomial(binom(n, k) * g, corrected ? k : n);
  }
  return {q_euler_poly(n), rhs};
}

// G_{n,q}(x) from G_{n,q^m}((x+a)/m); with_weight keeps the factor q^{a+x}.
IdentitySides thm4_dist(const ParamTuple& p, bool with_weight) {
  const size_t n = param(p, "n");
  const size_t m = param(p, "m");
  PolyX sum;
  for (size_t a = 0; a < m; ++a) {
    PolyX term = genocchi_poly_base_changed(n, m, a, 1) * sign_pow(a);
    if (with_weight) term = term * PolyX::monomial(RatFn::q_pow(a), 1);
    sum += term;
  }
  const RatFn scale = q_two() / q_two(m) * q_int(m).pow(static_cast<long>(n) - 1);
  return {q_genocchi_poly(n), sum * scale};
}

IdentitySides thm4_add(const ParamTuple& p) {
  const size_t n = param(p, "n");
  PolyX rhs;
  for (size_t k = 0; k <= n; ++k) {
    rhs += PolyX::q_bracket_x().pow(n - k) * PolyX::monomial(binom(n, k) * q_genocchi_number(k), k);
  }
  return {q_genocchi_poly(n), rhs};
}

IdentitySides thm4_add_unevaluable(const ParamTuple&) {
  throw std::domain_error("unevaluable: summation upper limit is infinite");
}

IdentitySides eq23(const ParamTuple& p, bool with_weight) {
  const size_t n = param(p, "n");
  const size_t m = param(p, "m");
  PolyX sum;
  for (size_t a = 0; a < m; ++a) {
    PolyX term = genocchi_poly_base_changed(n, m, a, m) * sign_pow(a);
    if (with_weight) term = term * PolyX::monomial(RatFn::q_pow(a), m);
    sum += term;
  }
  const RatFn scale = q_two() / q_two(m) * q_int(m).pow(static_cast<long>(n) - 1);
  return {q_genocchi_poly(n).subst_x(1, m), sum * scale};
}

// [2]_q sum_{k<n} C(n,k) [m]^k G_{j,q^m} sum_{a<m} (-1)^a q^{a(k+shift)} [a]^{n-k}
// with j = k, or j = n when inner_index_n is set.
RatFn genocchi_star_rhs(size_t n, size_t m, size_t shift, bool inner_index_n) {
  RatFn total;
  for (size_t k = 0; k < n; ++k) {
    RatFn inner;
    for (size_t a = 0; a < m; ++a) inner += sign_pow(a) * RatFn::q_pow(a * (k + shift)) * pow(q_int(a), n - k);
    if (inner.is_zero()) continue;
    const RatFn g = q_genocchi_number(inner_index_n ? n : k).subst_qpow(m);
    total += binom(n, k) * pow(q_int(m), k) * g * inner;
  }
  return q_two() * total;
}

IdentitySides eq24(const ParamTuple& p, StarQuotient quotient, size_t shift) {
  const size_t n = param(p, "n");
  const size_t m = param(p, "m");
  const RatFn lhs = q_two(m) * q_int(m) * q_genocchi_number(n) -
                    q_two() * pow(q_int(m), n) * q_genocchi_number(n).subst_qpow(m) *
                        star_quotient(StarVariant::genocchi, m, n, quotient);
  return {lhs, genocchi_star_rhs(n, m, shift, false)};
}

IdentitySides eq25(const ParamTuple& p, StarQuotient quotient, size_t shift, bool inner_index_n) {
  const size_t n = param(p, "n");
  const size_t m = param(p, "m");
  return {star_apply(StarVariant::genocchi, m, n, q_genocchi_number(n), quotient),
          genocchi_star_rhs(n, m, shift, inner_index_n)};
}

ParamSpec n_param(long lo, long hi) { return {"n", lo, false, range(lo, hi)}; }
ParamSpec m_odd() { return {"m", 1, true, kOddM}; }

std::vector<IdentitySpec> build_catalog() {
  using SQ = StarQuotient;
  std::vector<IdentitySpec> c;
  c.push_back({IdentityId::EQ5,
               "E_m(x) = sum_k C(m,k) G_{k+1}/(k+1) x^{m-k}",
               {{"m", 0, false, range(0, 10)}},
               {{"printed", "as printed", true, true, eq5}}});
  c.push_back({IdentityId::EQ6,
               "(n^m - n) G_m = sum_{k=1}^{m-1} C(m,k) n^k G_k Z_{m-k}(n-1), n odd",
               {{"m", 1, false, range(1, 10)}, {"n", 1, true, kOddM}},
               {{"printed", "as printed", true, true, eq6}}});
  c.push_back({IdentityId::EQ10_DIST,
               "E_{n,q}(x) = [2]_q/[2]_{q^m} [m]_q^n sum_a (-1)^a q^a E_{n,q^m}((a+x)/m), m odd",
               {n_param(0, 8), m_odd()},
               {{"printed", "as printed", true, true, eq10_dist}}});
  c.push_back({IdentityId::EQ10_ADD,
               "E_{n,q}(x) = sum_k C(n,k) [x]_q^{n-k} q^{kx} E_{k,q}",
               {n_param(0, 8)},
               {{"printed", "as printed", true, true, eq10_add}}});
  c.push_back({IdentityId::EQ11,
               "[2]_{q^m} E_{n,q}(xm) = [2]_q [m]_q^n sum_a (-1)^a q^a E_{n,q^m}(a/m + x), m odd",
               {n_param(0, 8), m_odd()},
               {{"printed", "as printed", true, true, eq11}}});
  c.push_back(
      {IdentityId::EQ12,
       "[m]_{-q} E_{n,q} - [m]_q^n Q E_{n,q^m} = sum_{l<n} C(n,l) [m]^l E_{l,q^m} sum_{a=1}^{m-1} (-1)^a q^{a(l+1)} [a]^{n-l}",
       {n_param(1, 8), m_odd()},
       {{"printed", "as printed: Q = [m(n+1)]_{-q}/[n+1]_{-q}", false, true,
         [](const ParamTuple& p) { return eq12(p, SQ::printed); }},
        {"corrected", "Q = [2]_{q^{m(n+1)}}/[2]_{q^{n+1}}", true, true,
         [](const ParamTuple& p) { return eq12(p, SQ::corrected); }}}});
  c.push_back({IdentityId::PROP1,
               "(1 - [m]_q^n) * E_{n,q} = sum_{l<n} C(n,l) [m]^l E_{l,q^m} sum_{a=1}^{m-1} (-1)^a q^{a(l+1)} [a]^{n-l}",
               {n_param(1, 8), m_odd()},
               {{"printed", "as printed: * uses [m(n+1)]_{-q}/[n+1]_{-q}", false, true,
                 [](const ParamTuple& p) { return prop1(p, SQ::printed); }},
                {"corrected", "* uses [2]_{q^{m(n+1)}}/[2]_{q^{n+1}}", true, true,
                 [](const ParamTuple& p) { return prop1(p, SQ::corrected); }}}});
  c.push_back({IdentityId::PROP2,
               "sum_{l<n} (-1)^l q^l [l]_q^m = ((-1)^{n+1} q^n E_{m,q}(n) - E_{m,q})/[2]_q",
               {n_param(1, 8), {"m", 1, false, range(1, 8)}},
               {{"printed", "as printed", false, true, [](const ParamTuple& p) { return prop2(p, false); }},
                {"corrected", "sign of the E_{m,q} term: + E_{m,q}", true, true,
                 [](const ParamTuple& p) { return prop2(p, true); }}}});
  c.push_back({IdentityId::EQ17,
               "G_{n,q} = [2]_q B_{n,q} - 2 [2]_q^n B_{n,q^2}",
               {n_param(1, 10)},
               {{"printed", "as printed", true, true, eq17}}});
  c.push_back({IdentityId::THM3A,
               "G_{n,q}(x) = n (1/(1-q))^{n-1} sum_{l<n} C(n-1,l) (-1)^l/(1+q^{l+1}) q^{(l+1)x}",
               {n_param(1, 8)},
               {{"printed", "as printed: no factor [2]_q", false, true,
                 [](const ParamTuple& p) { return thm3a(p, GenocchiForm::without_q_two); }},
                {"corrected", "overall factor [2]_q restored", true, true,
                 [](const ParamTuple& p) { return thm3a(p, GenocchiForm::with_q_two); }}}});
  c.push_back({IdentityId::EQ21,
               "E_{n,q}(x) = sum_k C(n,k) [x]_q^{n-k} q^{nx} G_{n+1,q}/(n+1)",
               {n_param(0, 8)},
               {{"printed", "as printed", false, true, [](const ParamTuple& p) { return eq21(p, false); }},
                {"corrected", "summation index: q^{kx} G_{k+1,q}/(k+1)", true, true,
                 [](const ParamTuple& p) { return eq21(p, true); }}}});
  c.push_back({IdentityId::THM4_DIST,
               "G_{n,q}(x) = [2]_q/[2]_{q^m} [m]_q^{n-1} sum_a (-1)^a q^{a+x} G_{n,q^m}((x+a)/m), m odd",
               {n_param(1, 8), m_odd()},
               {{"printed", "as printed", false, true, [](const ParamTuple& p) { return thm4_dist(p, true); }},
                {"corrected", "weight q^{a+x} removed", true, true,
                 [](const ParamTuple& p) { return thm4_dist(p, false); }}}});
  c.push_back({IdentityId::THM4_ADD,
               "G_{n,q}(x) = sum_{k=0}^{inf} C(n,k) q^{kx} G_{k,q} [x]_q^{n-k}",
               {n_param(0, 8)},
               {{"printed", "as printed: infinite upper limit", false, false, thm4_add_unevaluable},
                {"corrected", "upper limit n", true, true, thm4_add}}});
  c.push_back({IdentityId::EQ23,
               "G_{n,q}(mx) = [2]_q/[2]_{q^m} [m]_q^{n-1} sum_a (-1)^a q^{a+mx} G_{n,q^m}(x + a/m), m odd",
               {n_param(1, 8), m_odd()},
               {{"printed", "as printed", false, true, [](const ParamTuple& p) { return eq23(p, true); }},
                {"corrected", "weight q^{a+mx} removed", true, true,
                 [](const ParamTuple& p) { return eq23(p, false); }}}});
  c.push_back(
      {IdentityId::EQ24,
       "[2]_{q^m}[m]_q G_{n,q} - [2]_q [m]_q^n G_{n,q^m} Q = [2]_q sum_{k<n} C(n,k) [m]^k G_{k,q^m} sum_a (-1)^a q^{a(k+1)} [a]^{n-k}",
       {n_param(1, 8), m_odd()},
       {{"printed", "as printed: Q = [2]_{q^{m(n+1)}}/[2]_{q^{n+1}}, weight q^{a(k+1)}", false, true,
         [](const ParamTuple& p) { return eq24(p, SQ::printed, 1); }},
        {"quotient-only", "Q = [2]_{q^{mn}}/[2]_{q^n}, weight q^{a(k+1)} kept", false, true,
         [](const ParamTuple& p) { return eq24(p, SQ::corrected, 1); }},
        {"exponent-only", "weight q^{ak}, Q kept", false, true,
         [](const ParamTuple& p) { return eq24(p, SQ::printed, 0); }},
        {"corrected", "Q = [2]_{q^{mn}}/[2]_{q^n} and weight q^{ak}", true, true,
         [](const ParamTuple& p) { return eq24(p, SQ::corrected, 0); }}}});
  c.push_back(
      {IdentityId::EQ25_FINAL,
       "([m]_q - [m]_q^n) * G_{n,q} = [2]_q sum_{k<n} C(n,k) [m]^k G_{n,q^m} sum_a (-1)^a q^{a(k+1)} [a]^{n-k}",
       {n_param(1, 8), m_odd()},
       {{"printed", "as printed", false, true, [](const ParamTuple& p) { return eq25(p, SQ::printed, 1, true); }},
        {"k-index", "G_{k,q^m} inside the sum", false, true,
         [](const ParamTuple& p) { return eq25(p, SQ::printed, 1, false); }},
        {"corrected", "G_{k,q^m}, * uses [2]_{q^{mn}}/[2]_{q^n}, weight q^{ak}", true, true,
         [](const ParamTuple& p) { return eq25(p, SQ::corrected, 0, false); }}}});
  return c;
}

void validate(const IdentitySpec& spec, const ParamTuple& params) {
  for (const auto& ps : spec.params) {
    auto it = std::find_if(params.begin(), params.end(), [&](const Param& p) { return p.name == ps.name; });
    if (it == params.end()) throw std::invalid_argument("missing parameter " + ps.name);
    if (it->value < ps.min_value) {
      throw std::invalid_argument("parameter " + ps.name + " must be >= " + std::to_string(ps.min_value));
    }
    if (ps.must_be_odd && it->value % 2 == 0) {
      throw std::invalid_argument(ps.name + " must be odd for this identity");
    }
  }
  for (const auto& p : params) {
    const bool known =
        std::any_of(spec.params.begin(), spec.params.end(), [&](const ParamSpec& ps) { return ps.name == p.name; });
    if (!known) throw std::invalid_argument("unknown parameter " + p.name);
  }
}

// Canonical order: parameter declaration order.
ParamTuple ordered(const IdentitySpec& spec, const ParamTuple& params) {
  ParamTuple out;
  for (const auto& ps : spec.params) {
    for (const auto& p : params) {
      if (p.name == ps.name) out.push_back(p);
    }
  }
  return out;
}

std::string render_difference(const Side& lhs, const Side& rhs) {
  if (lhs.index() != rhs.index()) throw std::logic_error("identity sides have different types");
  if (const auto* l = std::get_if<RatFn>(&lhs)) return to_plain(std::get<RatFn>(rhs) - *l);
  if (const auto* l = std::get_if<PolyX>(&lhs)) return to_plain(std::get<PolyX>(rhs) - *l);
  const auto& lx = std::get<XPoly>(lhs);
  return to_plain((std::get<XPoly>(rhs) - lx).as_poly(), "x");
}

bool spot_consistent(const Side& lhs, const Side& rhs, bool holds) {
  const auto* l = std::get_if<PolyX>(&lhs);
  if (l == nullptr || !holds) return true;
  const auto& r = std::get<PolyX>(rhs);
  for (size_t j = 0; j <= 2; ++j) {
    if (l->eval_int(j) != r.eval_int(j)) return false;
  }
  return true;
}

}  // namespace

std::string_view identity_name(IdentityId id) { return kNames[static_cast<size_t>(id)]; }

std::optional<IdentityId> identity_from_name(std::string_view name) {
  for (size_t i = 0; i < std::size(kNames); ++i) {
    if (kNames[i] == name) return static_cast<IdentityId>(i);
  }
  return std::nullopt;
}

const IdentityVariant* IdentitySpec::find_variant(std::string_view name) const {
  for (const auto& v : variants) {
    if (v.name == name) return &v;
  }
  return nullptr;
}

const std::vector<IdentitySpec>& catalog() {
  static const std::vector<IdentitySpec> specs = build_catalog();
  return specs;
}

const IdentitySpec& identity_spec(IdentityId id) { return catalog().at(static_cast<size_t>(id)); }

IdentitySides build_sides(IdentityId id, std::string_view variant, const ParamTuple& params) {
  const IdentitySpec& spec = identity_spec(id);
  const IdentityVariant* v = spec.find_variant(variant);
  if (v == nullptr) {
    throw std::invalid_argument("unknown variant '" + std::string(variant) + "' for " + std::string(identity_name(id)));
  }
  validate(spec, params);
  return v->build(ordered(spec, params));
}

IdentityReport verify(IdentityId id, std::string_view variant, const ParamTuple& params) {
  const IdentitySpec& spec = identity_spec(id);
  const IdentityVariant* v = spec.find_variant(variant);
  if (v == nullptr) {
    throw std::invalid_argument("unknown variant '" + std::string(variant) + "' for " + std::string(identity_name(id)));
  }
  validate(spec, params);

  IdentityReport report;
  report.id = id;
  report.variant = v->name;
  report.params = ordered(spec, params);
  report.expected_to_hold = v->expected_to_hold;
  report.evaluable = v->evaluable;

  const auto start = std::chrono::steady_clock::now();
  if (!v->evaluable) {
    report.holds_exact = false;
    try {
      v->build(report.params);
      report.difference = "unevaluable";
    } catch (const std::domain_error& e) {
      report.difference = e.what();
    }
  } else {
    const IdentitySides sides = v->build(report.params);
    report.difference = render_difference(sides.lhs, sides.rhs);
    report.holds_exact = report.difference == "0";
    report.spot_consistent = spot_consistent(sides.lhs, sides.rhs, report.holds_exact);
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

std::vector<ParamTuple> enumerate_params(const IdentitySpec& spec, const ParamRanges& ranges) {
  for (const auto& [name, values] : ranges) {
    const bool known =
        std::any_of(spec.params.begin(), spec.params.end(), [&](const ParamSpec& ps) { return ps.name == name; });
    if (!known) {
      throw std::invalid_argument("unknown parameter " + name + " for " + std::string(identity_name(spec.id)));
    }
  }
  std::vector<std::vector<long>> axes;
  for (const auto& ps : spec.params) {
    auto it = ranges.find(ps.name);
    std::vector<long> values = it != ranges.end() ? it->second : ps.defaults;
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    if (values.empty()) return {};
    axes.push_back(std::move(values));
  }
  std::vector<ParamTuple> out;
  std::vector<size_t> idx(axes.size(), 0);
  for (;;) {
    ParamTuple t;
    for (size_t i = 0; i < axes.size(); ++i) t.push_back({spec.params[i].name, axes[i][idx[i]]});
    out.push_back(std::move(t));
    size_t i = axes.size();
    while (i > 0) {
      --i;
      if (++idx[i] < axes[i].size()) break;
      idx[i] = 0;
      if (i == 0) return out;
    }
    if (axes.empty()) return out;
  }
}

std::optional<ParamTuple> first_failure(IdentityId id, std::string_view variant, const ParamRanges& bounds) {
  const IdentitySpec& spec = identity_spec(id);
  for (const auto& values : bounds) {
    if (values.second.empty()) return std::nullopt;
  }
  for (const auto& tuple : enumerate_params(spec, bounds)) {
    if (!verify(id, variant, tuple).holds_exact) return tuple;
  }
  return std::nullopt;
}

SuiteConfig default_suite_config() {
  SuiteConfig config;
  for (const auto& spec : catalog()) config.entries.push_back({std::string(identity_name(spec.id)), {}, {}});
  return config;
}

namespace {

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

long parse_long(std::string_view s) {
  const std::string t = trim(s);
  long v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
    throw std::invalid_argument("not an integer: '" + t + "'");
  }
  return v;
}

std::vector<long> parse_values(std::string_view text) {
  std::vector<long> out;
  std::stringstream ss{std::string(text)};
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_long(item));
    } else {
      const long lo = parse_long(std::string_view(item).substr(0, dots));
      const long hi = parse_long(std::string_view(item).substr(dots + 2));
      for (long v = lo; v <= hi; ++v) out.push_back(v);
    }
  }
  return out;
}

SuiteEntry& entry_for(SuiteConfig& config, const std::string& id) {
  if (!identity_from_name(id)) throw std::invalid_argument("unknown identity id '" + id + "'");
  for (auto& e : config.entries) {
    if (e.id == id) return e;
  }
  config.entries.push_back({id, {}, {}});
  return config.entries.back();
}

}  // namespace

SuiteConfig parse_suite_config(std::string_view text) {
  SuiteConfig config;
  std::stringstream ss{std::string(text)};
  std::string line;
  size_t line_no = 0;
  while (std::getline(ss, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key = trim(std::string_view(stripped).substr(0, eq));
    const std::string value = trim(std::string_view(stripped).substr(eq + 1));
    if (key == "oracle") {
      if (value != "on" && value != "off") {
        throw std::invalid_argument("config line " + std::to_string(line_no) + ": oracle must be on or off");
      }
      config.oracle_arbitration = value == "on";
    } else if (key == "oracle.tol_exp") {
      config.oracle_tol_exp = parse_long(value);
      if (config.oracle_tol_exp < 1) throw std::invalid_argument("oracle.tol_exp must be >= 1");
    } else if (key == "report") {
      config.report_path = value;
    } else if (key == "threads") {
      config.threads = static_cast<size_t>(std::max(1L, parse_long(value)));
    } else if (key == "include" && value == "all") {
      for (const auto& spec : catalog()) entry_for(config, std::string(identity_name(spec.id)));
    } else if (auto dot = key.find('.'); dot == std::string::npos) {
      if (value != "default") {
        throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected '" + key + " = default'");
      }
      entry_for(config, key);
    } else {
      SuiteEntry& e = entry_for(config, key.substr(0, dot));
      const std::string field = key.substr(dot + 1);
      if (field == "variants") {
        std::stringstream vs(value);
        std::string v;
        while (std::getline(vs, v, ',')) e.variants.push_back(trim(v));
      } else {
        e.ranges[field] = parse_values(value);
      }
    }
  }
  return config;
}

std::vector<IdentityReport> run_suite(const SuiteConfig& config) {
  struct Task {
    IdentityId id;
    std::string variant;
    ParamTuple params;
  };
  std::vector<std::pair<IdentityId, const SuiteEntry*>> entries;
  for (const auto& e : config.entries) {
    const auto id = identity_from_name(e.id);
    if (!id) throw std::invalid_argument("unknown identity id '" + e.id + "'");
    entries.emplace_back(*id, &e);
  }
  std::stable_sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<Task> tasks;
  for (const auto& [id, entry] : entries) {
    const IdentitySpec& spec = identity_spec(id);
    for (const auto& name : entry->variants) {
      if (spec.find_variant(name) == nullptr) {
        throw std::invalid_argument("unknown variant '" + name + "' for " + entry->id);
      }
    }
    const auto tuples = enumerate_params(spec, entry->ranges);
    for (const auto& v : spec.variants) {
      if (!entry->variants.empty() &&
          std::find(entry->variants.begin(), entry->variants.end(), v.name) == entry->variants.end()) {
        continue;
      }
      for (const auto& t : tuples) tasks.push_back({id, v.name, t});
    }
  }

  std::vector<IdentityReport> reports(tasks.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < tasks.size(); i = next++) {
      reports[i] = verify(tasks[i].id, tasks[i].variant, tasks[i].params);
    }
  };
  const size_t threads = std::max<size_t>(1, std::min(config.threads, tasks.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return reports;
}

std::string format_params(const ParamTuple& params) {
  std::string out;
  for (const auto& p : params) {
    if (!out.empty()) out += ",";
    out += p.name + "=" + std::to_string(p.value);
  }
  return out;
}

nlohmann::json to_json(const IdentityReport& r, bool include_timing) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& p : r.params) params[p.name] = p.value;
  nlohmann::json j = {{"id", identity_name(r.id)},
                      {"variant", r.variant},
                      {"params", params},
                      {"holds_exact", r.holds_exact},
                      {"evaluable", r.evaluable},
                      {"expected_to_hold", r.expected_to_hold},
                      {"difference", r.difference},
                      {"spot_consistent", r.spot_consistent}};
  if (include_timing) j["elapsed_ms"] = std::chrono::duration<double, std::milli>(r.elapsed).count();
  return j;
}

nlohmann::json to_json(const std::vector<IdentityReport>& reports, bool include_timing) {
  auto arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(to_json(r, include_timing));
  return arr;
}

std::vector<ParityVerdict> parity_table(const std::vector<IdentityReport>& reports) {
  std::vector<ParityVerdict> out;
  for (const auto& r : reports) {
    if (r.id != IdentityId::EQ12 && r.id != IdentityId::PROP1 && r.id != IdentityId::EQ24 &&
        r.id != IdentityId::EQ25_FINAL) {
      continue;
    }
    bool n_even = false;
    for (const auto& p : r.params) {
      if (p.name == "n") n_even = p.value % 2 == 0;
    }
    auto it = std::find_if(out.begin(), out.end(), [&](const ParityVerdict& v) {
      return v.id == r.id && v.variant == r.variant && v.n_even == n_even;
    });
    if (it == out.end()) {
      out.push_back({r.id, r.variant, n_even, 0, 0});
      it = std::prev(out.end());
    }
    ++it->total;
    if (r.holds_exact) ++it->holds;
  }
  return out;
}

std::string summary_table(const std::vector<IdentityReport>& reports) {
  std::ostringstream out;
  out << "identity     variant         holds/total  expected  first failure\n";
  size_t i = 0;
  while (i < reports.size()) {
    size_t j = i;
    size_t holds = 0;
    std::string first;
    while (j < reports.size() && reports[j].id == reports[i].id && reports[j].variant == reports[i].variant) {
      if (reports[j].holds_exact) {
        ++holds;
      } else if (first.empty()) {
        first = format_params(reports[j].params);
        if (!reports[j].evaluable) first += " (unevaluable)";
      }
      ++j;
    }
    char line[160];
    std::snprintf(line, sizeof line, "%-12s %-15s %5zu/%-5zu  %-8s  %s\n", std::string(identity_name(reports[i].id)).c_str(),
                  reports[i].variant.c_str(), holds, j - i, reports[i].expected_to_hold ? "hold" : "-",
                  first.empty() ? "none" : first.c_str());
    out << line;
    i = j;
  }
  const auto parity = parity_table(reports);
  if (!parity.empty()) {
    out << "\nparity of n  identity     variant         holds/total\n";
    for (const auto& v : parity) {
      char line[160];
      std::snprintf(line, sizeof line, "%-12s %-12s %-15s %5zu/%zu\n", v.n_even ? "even" : "odd",
                    std::string(identity_name(v.id)).c_str(), v.variant.c_str(), v.holds, v.total);
      out << line;
    }
  }
  return out.str();
}

bool all_expected_hold(const std::vector<IdentityReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const IdentityReport& r) { return !r.expected_to_hold || r.holds_exact; });
}

}  // namespace qgen
