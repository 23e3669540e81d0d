// A short tour: build a few root systems, compute reflection lengths with
// certificates, factor a translation, inspect dimension witnesses, and look
// at length distributions.
#include "coxlen/expr.hpp"
#include "coxlen/oracle.hpp"
#include "coxlen/universal.hpp"

#include <iostream>

using namespace coxlen;

namespace {

void show_length(const RootSystem& rs, const std::string& expr) {
  AffineElement w = parse_element(rs, expr);
  LengthReport rep = length_bounds(rs, w);
  std::cout << "  " << rs.name() << "  " << expr << "  ->  ["
            << rep.lower << ", "
            << (rep.upper ? std::to_string(*rep.upper) : "?") << "]  "
            << certificate_name(rep.certificate);
  if (rep.witness) std::cout << "  via " << print_word(*rep.witness);
  std::cout << "\n";
}

void show_poly(const std::string& label, const LengthPolynomial& p) {
  std::cout << "  " << label << "  [";
  for (std::size_t i = 0; i < p.size(); ++i)
    std::cout << (i ? ", " : "") << p[i];
  std::cout << "]\n";
}

}  // namespace

int main() {
  RootSystem a2 = RootSystem::build("A2");
  RootSystem b2 = RootSystem::build("B2");
  RootSystem d4 = RootSystem::build("D4");

  std::cout << "Positive roots of A2 (index order):\n";
  for (std::size_t p = 0; p < a2.positive_roots().size(); ++p) {
    std::cout << "  r(" << p + 1 << "): ";
    for (const Rat& x : a2.positive_roots()[p])
      std::cout << rat_to_string(x) << " ";
    std::cout << "\n";
  }

  std::cout << "\nReflection lengths with certificates:\n";
  show_length(a2, "t[1,0]");
  show_length(a2, "t[1,-1]");
  show_length(b2, "t[1,1]*r(1,0)");
  show_length(d4, "t[2,2,1,1]");

  std::cout << "\nTranslation dimension in D4 for 2e1 = t[2,2,1,1]:\n";
  DimensionWitness w = integral_expression(d4, {2, 2, 1, 1});
  std::cout << "  k = " << w.k << ", coefficients:";
  for (long long c : w.coefficients) std::cout << " " << c;
  std::cout << "\n  minimal planes: " << minimal_subspaces(d4, {2, 2, 1, 1}).size()
            << "\n";

  std::cout << "\nLength distributions:\n";
  show_poly("Solomon(B2)      ", solomon_polynomial(b2));
  show_poly("f_{[1,0]} over A2", f_lambda_polynomial(a2, {1, 0}, 2));
  show_poly("f_{[1,-1]} over A2", f_lambda_polynomial(a2, {1, -1}, 2));

  std::cout << "\nUniversal group, powers of abc:\n";
  std::string word;
  for (int n = 1; n <= 4; ++n) {
    word += "abc";
    std::cout << "  n = " << n << ": standard " << uc_standard_length(word)
              << ", reflection " << uc_reflection_length(word) << "\n";
  }
  return 0;
}
