#pragma once

#include "tlent/linalg.hpp"

namespace tlent::detail {

// The two quartic sums of the amplitude conditions, without the d² factor:
//   first(μ,β)  = Σ_{λνσ} ᾱ_{νλ} α_{λμ} α_{νσ} ᾱ_{σβ}
//   second(μ,β) = Σ_{λνσ} α_{μλ} ᾱ_{λν} ᾱ_{βσ} α_{σν}
struct QuarticSums {
  CMatrix first;
  CMatrix second;
};

QuarticSums quartic_sums(const CMatrix& alpha);

}  // namespace tlent::detail
