#include "loopcoprod/algebra.hpp"

namespace loopcoprod {

SpaceSpec SpaceSpec::sphere_quotient(int n, GroupPtr g) {
  if (n < 2) fail(Errc::UnsupportedDimension, "sphere dimension must be >= 2");
  if (!g) fail(Errc::BadInput, "null group; use infinite_pi1 for declared-infinite groups");
  if (!g->trivial() && n % 2 == 0)
    fail(Errc::UnsupportedDimension, "non-trivial group requires odd sphere dimension");
  return SpaceSpec{n, std::move(g)};
}

SpaceSpec SpaceSpec::sphere(int n) { return sphere_quotient(n, FiniteGroup::cyclic(1)); }

SpaceSpec SpaceSpec::infinite_pi1(int n) {
  if (n < 2) fail(Errc::Unsupported, "n = 1 is the circle; use the circle operations");
  return SpaceSpec{n, nullptr};
}

bool SpaceSpec::same_space(const SpaceSpec& o) const {
  if (n != o.n) return false;
  if (infinite() || o.infinite()) return infinite() == o.infinite();
  return group == o.group || group->same_as(*o.group);
}

void SpaceSpec::require_same(const SpaceSpec& o) const {
  if (!same_space(o)) fail(Errc::SpaceMismatch, "operands live over different spaces");
}

namespace {

void check_monomial(const SpaceSpec& s, const Monomial& m) {
  if (s.infinite()) fail(Errc::BadInput, "no monomials over a declared-infinite group");
  s.group->check_element(m.g);
  if (m.k < 0) fail(Errc::BadInput, "negative exponent " + std::to_string(m.k));
}

}  // namespace

LoopClass::LoopClass(SpaceSpec space) : space_(std::move(space)) {}

LoopClass LoopClass::monomial(const SpaceSpec& space, int g, long long k, Int coeff) {
  LoopClass out(space);
  out.add_term(mono(g, k), std::move(coeff));
  return out;
}

void LoopClass::add_term(Monomial m, Int coeff) {
  check_monomial(space_, m);
  if (coeff == 0) return;
  auto it = terms_.try_emplace(m, 0).first;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

bool LoopClass::homogeneous() const {
  if (terms_.empty()) return true;
  long long k = terms_.begin()->first.k;
  return terms_.rbegin()->first.k == k;  // terms sorted by (k, g)
}

std::optional<long long> LoopClass::exponent() const {
  if (terms_.empty() || !homogeneous()) return std::nullopt;
  return terms_.begin()->first.k;
}

long long LoopClass::degree() const {
  auto k = exponent();
  if (!k) fail(Errc::NonHomogeneous, "degree of a zero or non-homogeneous class");
  return *k * (space_.n - 1);
}

TensorClass::TensorClass(SpaceSpec space) : space_(std::move(space)) {}

void TensorClass::add_term(TensorTerm t, Int coeff) {
  check_monomial(space_, t.first);
  check_monomial(space_, t.second);
  if (coeff == 0) return;
  auto it = terms_.try_emplace(t, 0).first;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

LoopClass add(const LoopClass& a, const LoopClass& b) {
  a.space().require_same(b.space());
  LoopClass out = a;
  for (const auto& [m, c] : b.terms()) out.add_term(m, c);
  return out;
}

LoopClass subtract(const LoopClass& a, const LoopClass& b) {
  a.space().require_same(b.space());
  LoopClass out = a;
  for (const auto& [m, c] : b.terms()) out.add_term(m, -c);
  return out;
}

LoopClass scale(const LoopClass& a, const Int& c) {
  LoopClass out(a.space());
  for (const auto& [m, v] : a.terms()) out.add_term(m, v * c);
  return out;
}

LoopClass multiply(const LoopClass& a, const LoopClass& b) {
  a.space().require_same(b.space());
  const auto& G = *a.space().group;
  LoopClass out(a.space());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms())
      out.add_term(mono(G.mul(ma.g, mb.g), ma.k + mb.k), ca * cb);
  return out;
}

TensorClass add(const TensorClass& a, const TensorClass& b) {
  a.space().require_same(b.space());
  TensorClass out = a;
  for (const auto& [t, c] : b.terms()) out.add_term(t, c);
  return out;
}

TensorClass subtract(const TensorClass& a, const TensorClass& b) {
  a.space().require_same(b.space());
  TensorClass out = a;
  for (const auto& [t, c] : b.terms()) out.add_term(t, -c);
  return out;
}

TensorClass scale(const TensorClass& a, const Int& c) {
  TensorClass out(a.space());
  for (const auto& [t, v] : a.terms()) out.add_term(t, v * c);
  return out;
}

TensorClass act_tensor(const TensorClass& t, int tau) {
  if (t.space().infinite()) fail(Errc::BadInput, "no group action over a declared-infinite group");
  const auto& G = *t.space().group;
  G.check_element(tau);
  const int tau_inv = G.inverse(tau);
  TensorClass out(t.space());
  for (const auto& [tt, c] : t.terms()) {
    Monomial l = mono(G.mul(tt.first.g, tau), tt.first.k);
    Monomial r = mono(G.mul(tau_inv, tt.second.g), tt.second.k);
    out.add_term({l, r}, c);
  }
  return out;
}

TensorClass contract_right(const TensorClass& t, const LoopClass& a) {
  t.space().require_same(a.space());
  const auto& G = *t.space().group;
  TensorClass out(t.space());
  for (const auto& [tt, c] : t.terms())
    for (const auto& [m, cm] : a.terms()) {
      Monomial r = mono(G.mul(tt.second.g, m.g), tt.second.k + m.k);
      out.add_term({tt.first, r}, c * cm);
    }
  return out;
}

TensorClass contract_left(const TensorClass& t, const LoopClass& a) {
  t.space().require_same(a.space());
  const auto& G = *t.space().group;
  TensorClass out(t.space());
  for (const auto& [tt, c] : t.terms())
    for (const auto& [m, cm] : a.terms()) {
      Monomial l = mono(G.mul(m.g, tt.first.g), m.k + tt.first.k);
      out.add_term({l, tt.second}, c * cm);
    }
  return out;
}

void laurent_add_term(LaurentClass& c, long long k, Int coeff) {
  if (coeff == 0) return;
  auto it = c.try_emplace(k, 0).first;
  it->second += coeff;
  if (it->second == 0) c.erase(it);
}

void laurent_add_term(LaurentTensor& t, long long k1, long long k2, Int coeff) {
  if (coeff == 0) return;
  auto it = t.try_emplace({k1, k2}, 0).first;
  it->second += coeff;
  if (it->second == 0) t.erase(it);
}

LaurentClass laurent_multiply(const LaurentClass& a, const LaurentClass& b) {
  LaurentClass out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) laurent_add_term(out, ka + kb, ca * cb);
  return out;
}

LaurentTensor laurent_contract_right(const LaurentTensor& t, const LaurentClass& a) {
  LaurentTensor out;
  for (const auto& [kk, c] : t)
    for (const auto& [k, cm] : a) laurent_add_term(out, kk.first, kk.second + k, c * cm);
  return out;
}

LaurentTensor laurent_contract_left(const LaurentTensor& t, const LaurentClass& a) {
  LaurentTensor out;
  for (const auto& [kk, c] : t)
    for (const auto& [k, cm] : a) laurent_add_term(out, kk.first + k, kk.second, c * cm);
  return out;
}

LaurentTensor laurent_subtract(const LaurentTensor& a, const LaurentTensor& b) {
  LaurentTensor out = a;
  for (const auto& [kk, c] : b) laurent_add_term(out, kk.first, kk.second, -c);
  return out;
}

}  // namespace loopcoprod
