// Walks through the decomposition of x1^2 in R^2 and a random cubic in R^3.
#include <iostream>

#include "cliff/cliff.hpp"

int main() {
  using namespace cliff;

  const CliffordPolynomial p = parse_polynomial("x1^2", 2);
  const DecompositionResult d = fischer_decompose(p);
  std::cout << "P        = " << d.input << '\n'
            << "I        = " << d.infra << "   (sandwich: " << sandwich(d.infra) << ")\n"
            << "Q        = " << d.quotient << '\n'
            << "I + xQx  = " << d.infra + mul_by_x_both(d.quotient) << "\n\n";

  Rng rng(7);
  const CliffordPolynomial cubic = random_polynomial(3, 3, rng, 3);
  const FischerTower tower = fischer_tower(cubic);
  std::cout << "P = " << cubic << '\n';
  for (const auto& layer : tower.layers)
    std::cout << "  s=" << layer.s << "  I_" << tower.k - 2 * layer.s << " = " << layer.infra << '\n';
  std::cout << "reconstructs: " << (tower.reconstruct() == cubic ? "yes" : "no") << '\n';
}
