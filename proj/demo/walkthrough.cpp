// A short tour: c(F) on Gr(2,5), the symbolic g-classes, a derivative complex
// on an abelian threefold and the h^{2,0} bounds it feeds.

#include <iostream>

#include "bggx/bgg_classes.hpp"
#include "bggx/bounds.hpp"
#include "bggx/derivative_complex.hpp"
#include "bggx/hodge_models.hpp"

using namespace bggx;

int main() {
  const int k = 2;
  const int q = 5;
  const auto cF = chern_F(k, q);
  std::cout << "c(F) on Gr(" << k << "," << q << "), by degree:\n";
  for (int d = 0; d <= cF.max_degree(); ++d) {
    std::cout << "  degree " << d << ":";
    for (const auto& [lambda, c] : cF.component(d).terms()) std::cout << "  " << to_string(c) << " s(" << lambda.to_string() << ")";
    std::cout << "\n";
  }
  const auto report = verify_conjecture(k, q);
  std::cout << "mu = (" << report.mu.to_string() << "), coefficient " << to_string(report.mu_coefficient)
            << ", classes above mu vanish: " << (report.above_mu_all_zero ? "yes" : "no") << "\n\n";

  for (int kk = 1; kk <= 3; ++kk) std::cout << "k=" << kk << "  g_1 = " << to_string(g1_closed_form(kk)) << "\n";
  std::cout << "k=3  g_(1,1) - (1/2)(h - beta+)(h - beta-) = " << to_string(chern_G_coeffs(3, 2).g.at(Partition({1, 1})) - g11_factored(3))
            << "\n\n";

  const auto datum = abelian_model(3);
  const SubspaceW W({{Rational(1), Rational(2), Rational(0)}});
  for (int r = 1; r <= 3; ++r) {
    const auto c = build_complex(datum, W, r, 0);
    std::cout << "abelian threefold, dim W = 1, r = " << r << ": homology";
    for (auto h : homology_dims(c)) std::cout << " " << h;
    std::cout << ", exact in the first " << exactness_prefix(c) << " steps\n";
  }

  std::cout << "\nh^{2,0} >= " << to_string(thm11_bound(2, 6).piecewise) << " for a surface with q = 6 (no higher irrational pencil)\n";
  std::cout << "h^{2,0} >= " << to_string(c1_bound(6, 2)) << " from c_1 of F with k = 2\n";
  return 0;
}
