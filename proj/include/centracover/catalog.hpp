#pragma once

#include <string>
#include <vector>

#include "centracover/group.hpp"

namespace centracover {

/// Names of the built-in groups, in catalog order.
const std::vector<std::string>& catalog_names();
bool catalog_has(const std::string& name);

/// Deterministic construction of a catalog group; throws UnknownName.
Group catalog_build(const std::string& name);

Group cyclic_group(int n, std::string name = "", std::string source = "");
/// Dihedral group of order 2 * rotations; elements r^i and r^i s.
Group dihedral_group(int rotations, std::string name = "",
                     std::string source = "");
Group quaternion_group(std::string name = "q8", std::string source = "");
/// Upper unitriangular 3x3 matrices over F_p, the extraspecial group of
/// order p^3 and exponent p (p odd).
Group heisenberg_group(int p, std::string name = "", std::string source = "");
Group special_linear_2_3(std::string name = "sl2_3", std::string source = "");

Group direct_product(const Group& a, const Group& b, std::string name = "",
                     std::string source = "");

/// (A x B) / <(za, zb^-1)> via coset table construction. za and zb must be
/// central (NotCentral) and of equal order (OrderMismatch).
Group central_product(const Group& a, const Group& b, int za, int zb,
                      std::string name = "", std::string source = "");

}  // namespace centracover
