#include "coxeter/catalog.hpp"

namespace coxeter::catalog {

namespace {

std::vector<std::vector<BondOrder>> commuting(std::size_t n) {
  std::vector<std::vector<BondOrder>> m(n, std::vector<BondOrder>(n, 2));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

void set_bond(std::vector<std::vector<BondOrder>>& m, std::size_t i, std::size_t j, BondOrder b) {
  m[i][j] = b;
  m[j][i] = b;
}

}  // namespace

CoxeterSystem type_A(std::size_t n) {
  auto m = commuting(n);
  for (std::size_t i = 0; i + 1 < n; ++i) set_bond(m, i, i + 1, 3);
  return CoxeterSystem(std::move(m));
}

CoxeterSystem type_B(std::size_t n) {
  auto m = commuting(n);
  for (std::size_t i = 0; i + 1 < n; ++i) set_bond(m, i, i + 1, i + 2 == n ? 4 : 3);
  return CoxeterSystem(std::move(m));
}

CoxeterSystem type_H3() {
  auto m = commuting(3);
  set_bond(m, 0, 1, 5);
  set_bond(m, 1, 2, 3);
  return CoxeterSystem(std::move(m));
}

CoxeterSystem dihedral(BondOrder m) {
  auto b = commuting(2);
  set_bond(b, 0, 1, m);
  return CoxeterSystem(std::move(b));
}

CoxeterSystem affine_A2() {
  auto m = commuting(3);
  set_bond(m, 0, 1, 3);
  set_bond(m, 1, 2, 3);
  set_bond(m, 0, 2, 3);
  return CoxeterSystem(std::move(m));
}

CoxeterSystem universal(std::size_t n) {
  auto m = commuting(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) set_bond(m, i, j, kInfiniteBond);
  return CoxeterSystem(std::move(m));
}

}  // namespace coxeter::catalog
