#include "culab/corpus.hpp"

namespace culab {

CuModel zero_inf() { return finite_model(make_table({"0", "inf"}, {{1, 1}, {0, 1}}, {{0, 1}, {1, 1}})); }

CuModel trivial() { return finite_model(make_table({"0"}, {{1}}, {{0}})); }

CuModel sierpinski() { return lsc_model(Space{{"u", "v"}, {1, 0, 1, 1}}); }

CuModel discrete(std::size_t n) {
  Space s;
  s.leq.assign(n * n, 0);
  for (std::size_t p = 0; p < n; ++p) {
    s.points.push_back("p" + std::to_string(p));
    s.leq[p * n + p] = 1;
  }
  return lsc_model(std::move(s));
}

CuModel join_powerset2() {
  return finite_model(make_table({"{}", "{a}", "{b}", "{a,b}"},
                                 {{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}},
                                 {{0, 1, 2, 3}, {1, 1, 3, 3}, {2, 3, 2, 3}, {3, 3, 3, 3}}));
}

std::vector<NamedModel> corpus() {
  std::vector<NamedModel> out;
  for (unsigned k = 1; k <= 4; ++k) out.push_back({"E_" + std::to_string(k), e_k(k)});
  out.push_back({"zero-inf", zero_inf()});
  out.push_back({"trivial", trivial()});
  out.push_back({"nbar", nbar()});
  out.push_back({"lsc-point", discrete(1)});
  out.push_back({"lsc-discrete-2", discrete(2)});
  out.push_back({"sierpinski", sierpinski()});
  out.push_back({"nbar-x-E_1", product(nbar(), e_k(1))});
  out.push_back({"sierpinski-x-zero-inf", product(sierpinski(), zero_inf())});
  out.push_back({"join-powerset-2", join_powerset2()});
  return out;
}

}  // namespace culab
