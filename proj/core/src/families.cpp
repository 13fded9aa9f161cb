#include "bcc/families.hpp"

#include <stdexcept>
#include <string>

namespace bcc::families {

BrauerConfig square() {
  ConfigInput in;
  in.vertices = {{"1", 1}, {"2", 1}, {"3", 1}, {"4", 1}};
  in.polygons = {{"V1", {"1", "3"}},
                 {"V2", {"2", "3"}},
                 {"V3", {"1", "2"}},
                 {"V4", {"1", "4"}}};
  in.orders = {{"1", {"V1", "V3", "V4"}}, {"2", {"V3", "V2"}}, {"3", {"V1", "V2"}}};
  return BrauerConfig(in);
}

BrauerConfig cycle(int m, int N) {
  if (m < 1) throw std::invalid_argument("cycle: m must be >= 1");
  if (N < 1) throw std::invalid_argument("cycle: N must be >= 1");
  if (m == 1) return self_loop(N);

  ConfigInput in;
  auto vname = [](int i) { return std::to_string(i); };
  auto pname = [](int i) { return "V" + std::to_string(i); };
  for (int i = 0; i < m; ++i) in.vertices.push_back({vname(i), N});
  for (int i = 0; i < m; ++i) {
    in.polygons.push_back({pname(i), {vname(i), vname((i + 1) % m)}});
  }
  for (int i = 0; i < m; ++i) {
    in.orders.push_back({vname(i), {pname((i + m - 1) % m), pname(i)}});
  }
  return BrauerConfig(in);
}

BrauerConfig self_loop(int N) {
  if (N < 1) throw std::invalid_argument("self_loop: N must be >= 1");
  ConfigInput in;
  in.vertices = {{"1", N}};
  in.polygons = {{"V", {"1", "1"}}};
  in.orders = {{"1", {"V", "V"}}};
  return BrauerConfig(in);
}

BrauerConfig two_five() {
  ConfigInput in;
  in.vertices = {{"a", 1}};
  in.polygons = {{"V", {"a", "a", "a", "a", "a"}}, {"W", {"a", "a", "a", "a", "a"}}};
  in.orders = {{"a", {"V", "V", "V", "V", "V", "W", "W", "W", "W", "W"}}};
  return BrauerConfig(in);
}

BrauerConfig two_gon() {
  ConfigInput in;
  in.vertices = {{"a", 2}, {"t", 1}};
  in.polygons = {{"V", {"a", "t"}}};
  return BrauerConfig(in);
}

}  // namespace bcc::families
