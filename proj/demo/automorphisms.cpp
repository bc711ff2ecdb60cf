// Elements, automorphisms and their normal forms.
#include "heis/heis.hpp"

#include <iostream>

int main()
{
  using namespace heis;

  element x = gen_x(), y = gen_y();
  std::cout << "x*y = " << to_string(x * y) << "\n";
  std::cout << "[x,y] = " << to_string(commutator(x, y)) << "\n";
  std::cout << "(2,3,5)^-4 = " << to_string(power(element{2, 3, 5}, -4)) << "\n";

  auto a = rd(1), b = lower_shear(-1);
  auto aba = a * b * a;
  std::cout << "ABA = " << to_string(aba) << "\n";
  std::cout << "ABA(1,0,0) = " << to_string(apply(aba, x)) << "\n";
  std::cout << "(ABA)^4 is identity: " << std::boolalpha << (power(aba, 4) == identity_automorphism())
            << "\n";

  auto w = parse_automorphism("{M=[[2,1],[1,1]], r=7, u=-3}");
  auto f = normal_form(w);
  std::cout << "normal form of " << to_string(w) << ": " << to_string(f) << "\n";
  std::cout << "rebuilt: " << to_string(from_normal_form(f)) << "\n";
  std::cout << "center image: " << to_string(center_image(w)) << ", in Aut+: " << is_aut_plus(w) << "\n";
}
