// Copyright (c) the graycal contributors.
// SPDX-License-Identifier: Apache-2.0
#include "graycal/theory.hpp"

#include "graycal/theory_parser.hpp"

namespace graycal {

namespace {

// The theory of pseudomonoids: one object, a multiplication and a unit,
// invertible associator and unitors, pentagon and triangle.
constexpr const char* kPseudomonoid = R"(theory pseudomonoid
object C
arrow P : C C -> C
arrow J : -> C
cell aa [A:C, B:C, X:C] : P(A, P(B, X)) => P(P(A, B), X)
cell aa_inv [A:C, B:C, X:C] : P(P(A, B), X) => P(A, P(B, X))
cell ll [A:C] : P(J(), A) => A
cell ll_inv [A:C] : A => P(J(), A)
cell rr [A:C] : P(A, J()) => A
cell rr_inv [A:C] : A => P(A, J())
equation aa_inv_l [A:C, B:C, X:C] : comp(aa_inv[A, B, X], aa[A, B, X]) = id P(A, P(B, X))
equation aa_inv_r [A:C, B:C, X:C] : comp(aa[A, B, X], aa_inv[A, B, X]) = id P(P(A, B), X)
equation ll_inv_l [A:C] : comp(ll_inv[A], ll[A]) = id P(J(), A)
equation ll_inv_r [A:C] : comp(ll[A], ll_inv[A]) = id A
equation rr_inv_l [A:C] : comp(rr_inv[A], rr[A]) = id P(A, J())
equation rr_inv_r [A:C] : comp(rr[A], rr_inv[A]) = id A
equation pentagon [A:C, B:C, X:C, D:C] : comp(aa[P(A, B), X, D], aa[A, B, P(X, D)]) = comp(P(aa[A, B, X], id D), aa[A, P(B, X), D], P(id A, aa[B, X, D]))
equation triangle [A:C, X:C] : comp(P(rr[A], id X), aa[A, J(), X]) = P(id A, ll[X])
)";

constexpr const char* kExampleG0 = R"(theory example-G0
object A
object B
object C
object D
object E
object F
arrow u : A -> B
arrow g : C D -> E
arrow h : B E -> F
arrow k : -> A
)";

} // namespace

Theory builtin_theory(const std::string& name) {
  const char* src = nullptr;
  if (name == "pseudomonoid")
    src = kPseudomonoid;
  else if (name == "example-G0")
    src = kExampleG0;
  else
    throw GrayError("unknown builtin theory " + name);
  TheoryParse p = parse_theory(src);
  if (!p.theory)
    throw GrayError("builtin theory " + name + " failed to parse:\n" +
                    render_diagnostics(p.diags));
  return *p.theory;
}

} // namespace graycal
