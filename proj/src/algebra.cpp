#include "skein/algebra.hpp"

#include <random>
#include <stdexcept>

namespace skein {

namespace {

void require_same_group(const SkeinElt& u, const SkeinElt& v) {
  if (!(u.group == v.group)) throw std::invalid_argument("SkeinElt: mismatched group backends");
}

// Adds coeff * x_class(w) to the element, folding the identity class to 2.
void add_class_term(SkeinElt& e, const ClassRep& c, CycCoeff coeff) {
  if (coeff.is_zero()) return;
  if (!c.reliable) e.unreliable_keys = true;
  if (is_identity(e.group, c.word)) {
    e.unit += CycCoeff{2, 0} * coeff;
    return;
  }
  CycCoeff& slot = e.terms[c.word];
  slot += coeff;
  if (slot.is_zero()) e.terms.erase(c.word);
}

}  // namespace

SkeinElt elt_zero(const GroupSpec& g) { return SkeinElt{g, cyc_zero, {}, false}; }

SkeinElt elt_scalar(const GroupSpec& g, CycCoeff c) { return SkeinElt{g, c, {}, false}; }

SkeinElt gen(const GroupSpec& g, const ClassRep& c) {
  SkeinElt e = elt_zero(g);
  add_class_term(e, c, cyc_one);
  return e;
}

SkeinElt gen(const GroupSpec& g, const Word& w) { return gen(g, class_rep(g, w)); }

SkeinElt add(const SkeinElt& u, const SkeinElt& v) {
  require_same_group(u, v);
  SkeinElt out = u;
  out.unit += v.unit;
  out.unreliable_keys = u.unreliable_keys || v.unreliable_keys;
  for (const auto& [w, c] : v.terms) {
    CycCoeff& slot = out.terms[w];
    slot += c;
    if (slot.is_zero()) out.terms.erase(w);
  }
  return out;
}

SkeinElt scale(const SkeinElt& u, CycCoeff k) {
  SkeinElt out = elt_zero(u.group);
  out.unreliable_keys = u.unreliable_keys;
  if (k.is_zero()) return out;
  out.unit = u.unit * k;
  for (const auto& [w, c] : u.terms) out.terms[w] = c * k;
  return out;
}

SkeinElt mul(const SkeinElt& u, const SkeinElt& v) {
  require_same_group(u, v);
  const GroupSpec& g = u.group;
  SkeinElt out = elt_zero(g);
  out.unreliable_keys = u.unreliable_keys || v.unreliable_keys;
  out.unit = u.unit * v.unit;
  for (const auto& [w, c] : v.terms) add_class_term(out, ClassRep{w}, u.unit * c);
  for (const auto& [w, c] : u.terms) add_class_term(out, ClassRep{w}, v.unit * c);
  for (const auto& [gw, gc] : u.terms) {
    for (const auto& [hw, hc] : v.terms) {
      CycCoeff k = gc * hc;
      i64 om = omega_form(g, gw, hw);
      add_class_term(out, class_rep(g, mul(g, gw, hw)), k * a_pow(om));
      add_class_term(out, class_rep(g, mul(g, gw, inv(g, hw))), k * a_pow(-om));
    }
  }
  return out;
}

bool formal_eq(const SkeinElt& u, const SkeinElt& v) {
  return u.group == v.group && u.unit == v.unit && u.terms == v.terms;
}

// --- trace oracle ------------------------------------------------------------

namespace {

i64 mod_pos(i64 x, i64 p) {
  x %= p;
  return x < 0 ? x + p : x;
}

i64 mod_pow(i64 b, i64 e, i64 p) {
  i64 r = 1;
  b = mod_pos(b, p);
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

using Mat2 = std::array<i64, 4>;

Mat2 mat_mul(const Mat2& x, const Mat2& y, i64 p) {
  return {(x[0] * y[0] + x[1] * y[2]) % p, (x[0] * y[1] + x[1] * y[3]) % p,
          (x[2] * y[0] + x[3] * y[2]) % p, (x[2] * y[1] + x[3] * y[3]) % p};
}

// Inverse of a determinant-1 matrix: the adjugate.
Mat2 mat_inv(const Mat2& x, i64 p) {
  return {x[3], mod_pos(-x[1], p), mod_pos(-x[2], p), x[0]};
}

void require_trace_backend(const GroupSpec& g) {
  if (g.kind != GroupKind::Free || !g.omega_zero())
    throw std::invalid_argument("trace_eval: requires a free backend with omega = 0");
}

}  // namespace

TraceAssignment random_trace_assignment(const GroupSpec& g, std::uint64_t seed, i64 prime) {
  require_trace_backend(g);
  TraceAssignment asg;
  asg.p = prime;
  std::mt19937_64 eng(seed);
  auto draw = [&] { return static_cast<i64>(eng() % static_cast<std::uint64_t>(prime)); };
  for (int i = 0; i < g.generators(); ++i) {
    i64 a = draw(), b = draw(), c = draw(), d;
    if (a % prime != 0) {
      d = (1 + b * c) % prime * mod_pow(a, prime - 2, prime) % prime;
    } else {
      // need bc = -1: pick b invertible and solve for c
      while (b % prime == 0) b = draw();
      c = mod_pos(-mod_pow(b, prime - 2, prime), prime);
      d = draw();
    }
    asg.mats.push_back({mod_pos(a, prime), mod_pos(b, prime), mod_pos(c, prime), mod_pos(d, prime)});
  }
  return asg;
}

i64 trace_eval(const SkeinElt& e, const TraceAssignment& asg) {
  require_trace_backend(e.group);
  if (asg.mats.size() != static_cast<size_t>(e.group.generators()))
    throw std::invalid_argument("trace_eval: assignment arity mismatch");
  const i64 p = asg.p;
  // specialization A -> 1 on coefficients
  auto spec1 = [&](CycCoeff c) { return mod_pos(c.re + c.im, p); };
  i64 total = spec1(e.unit);
  for (const auto& [w, c] : e.terms) {
    Mat2 m = {1, 0, 0, 1};
    for (i64 l : w.data) {
      const Mat2& gmat = asg.mats[(l > 0 ? l : -l) - 1];
      m = mat_mul(m, l > 0 ? gmat : mat_inv(gmat, p), p);
    }
    total = (total + spec1(c) * ((m[0] + m[3]) % p)) % p;
  }
  return mod_pos(total, p);
}

GroupSpec abelianized_spec(const GroupSpec& g) {
  if (g.kind == GroupKind::Abelian) return g;
  return GroupSpec::abelian(g.hom_rank(), {}, g.omega);
}

SkeinElt abelianized(const SkeinElt& u) {
  if (u.group.kind == GroupKind::Abelian) return u;
  GroupSpec h = abelianized_spec(u.group);
  SkeinElt out = elt_zero(h);
  out.unit = u.unit;
  for (const auto& [w, c] : u.terms) {
    HomClass cls = homology(u.group, w);
    std::vector<i64> exps(cls.free_part.data(), cls.free_part.data() + cls.free_part.size());
    add_class_term(out, class_rep(h, word_from_exponents(h, exps)), c);
  }
  return out;
}

Eq eq(const SkeinElt& u, const SkeinElt& v, std::uint64_t seed, int assignments, i64 prime) {
  require_same_group(u, v);
  if (formal_eq(u, v)) return Eq::Equal;
  if (u.group.kind == GroupKind::Abelian) return Eq::Unequal;
  if (u.group.kind == GroupKind::Free && u.group.omega_zero()) {
    SkeinElt diff = add(u, scale(v, -cyc_one));
    for (int k = 0; k < assignments; ++k) {
      TraceAssignment asg = random_trace_assignment(u.group, seed + static_cast<std::uint64_t>(k), prime);
      if (trace_eval(diff, asg) != 0) return Eq::Unequal;
    }
    return Eq::ProbablyEqual;
  }
  return Eq::UnequalFormal;
}

}  // namespace skein
