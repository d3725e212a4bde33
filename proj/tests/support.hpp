#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "modvir/fock.hpp"
#include "modvir/virasoro.hpp"

namespace testing {

using namespace modvir;

inline Ring Q() { return Ring::rationals(); }
inline Ring F(int p) { return Ring::prime_field(p); }
inline Ring Qh() { return Ring::rationals().polynomial(); }

inline Scalar q(const char* text, const Ring& ring = Ring::rationals()) { return ring.parse(text); }

inline VermaModule module(const char* c, const char* h, const Ring& ring = Ring::rationals()) {
  return VermaModule(ModuleParams(ring.parse(c), ring.parse(h)));
}

/// V(c, h) with h formal over Q or F_p.
inline VermaModule formal_module(const char* c, const Ring& base = Ring::rationals()) {
  Ring r = base.polynomial();
  return VermaModule(ModuleParams(r.parse(c), r.variable()));
}

inline VermaVector verma(const Ring& ring,
                         std::initializer_list<std::pair<std::vector<int>, Scalar>> terms) {
  VermaVector v(ring);
  for (const auto& [parts, c] : terms) v.add_term(Partition::from_unsorted(parts), c);
  return v;
}

inline FockVector fock(Sector sector, const Ring& ring,
                       std::initializer_list<std::pair<std::vector<int>, Scalar>> terms) {
  FockVector v(sector, ring);
  for (const auto& [twice_n, c] : terms) v.add_term(FockMonomial(sector, twice_n), c);
  return v;
}

/// Polynomial in h from integer or rational coefficients, constant term first.
inline Scalar poly(std::initializer_list<const char*> coeffs, std::uint32_t p = 0) {
  Ring base = Ring::from_characteristic(p);
  std::vector<Scalar> cs;
  for (const char* c : coeffs) cs.push_back(base.parse(c));
  return Scalar::polynomial(p, cs);
}

}  // namespace testing
