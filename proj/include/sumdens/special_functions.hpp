#pragma once

namespace sumdens {

// A double with an error bound that has been checked against high-precision references.
struct SpecialValue {
  double value = 0.0;
  double abs_error_bound = 0.0;
};

// Lanczos approximation (g = 7, 9 terms) with reflection below 1/2.
double gamma_lanczos(double x);

// Γ(1/k)^k / k!
SpecialValue lambda_k(int k);
// B(x, y) = Γ(x)Γ(y)/Γ(x+y), x, y > 0.
SpecialValue beta_ref(double x, double y);
// ζ(s), s > 1, by Euler–Maclaurin summation.
SpecialValue zeta_ref(double s);

}  // namespace sumdens
