// Decomposing matrices, lifting them through the section, and cocycles.
#include "heis/heis.hpp"

#include <iostream>

int main()
{
  using namespace heis;

  auto m = parse_matrix("[[5,3],[3,2]]");
  auto left = decompose(m);
  auto right = decompose(m, decompose_strategy::right_nearest);
  std::cout << to_string(m) << " = " << to_string(left) << "\n";
  std::cout << to_string(m) << " = " << to_string(right) << "\n";
  std::cout << "sigma(M) = " << to_string(section(m)) << "\n";
  std::cout << "same lift from both words: " << std::boolalpha
            << (section_of_word(left) == section_of_word(right)) << "\n";

  auto lattice = cocycle_lattice();
  std::cout << "cocycle lattice rank " << lattice.rank() << ", equals coboundaries: "
            << lattice.equals_coboundary_lattice << "\n";

  auto phi = coboundary({3, -2});
  auto twisted = twist(standard_section(), phi);
  std::cout << "phi = " << to_string(phi.values()) << "\n";
  std::cout << "twisted section: " << to_string(twisted) << "\n";
  std::cout << "difference: " << to_string(section_difference(twisted, standard_section()).values())
            << "\n";
  std::cout << "solved: " << to_string(solve_coboundary(phi)) << "\n";
}
