#pragma once

#include <vector>

#include "agqc/gf.hpp"

namespace agqc {

/// Dense univariate polynomial over a field, little-endian coefficients.
using Poly = std::vector<FieldElement>;

Poly poly_trim(Poly a);
int poly_deg(const Poly& a);  // -1 for the zero polynomial
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_derivative(const Poly& a);
Poly poly_gcd(Poly a, Poly b);
FieldElement poly_eval(const Poly& a, const FieldElement& x);

}  // namespace agqc
