// Serial against OpenMP timings for the heavy kernels.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "lvl/constants.hpp"
#include "lvl/distance_field.hpp"
#include "lvl/generators.hpp"
#include "lvl/level_set.hpp"

using namespace lvl;

namespace {

double seconds(const std::function<void()>& f, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int k = 0; k < reps; ++k) f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

void row(const std::string& name, const std::function<void(Exec)>& f, int reps) {
  const double s = seconds([&] { f(Exec::serial); }, reps);
  const double p = seconds([&] { f(Exec::parallel); }, reps);
  std::printf("%-28s serial %9.4f s  parallel %9.4f s  speedup %5.2fx\n", name.c_str(), s, p, s / p);
}

}  // namespace

int main() {
  const auto flake = rohde_snowflake({6, 0.3, 4, ChoiceRule::seeded, 1});
  const auto stair = staircase_sharpljc(8);
  Sampler smp;

  row("grid_sample h=0.005", [&](Exec e) { (void)grid_sample(flake, level_box(flake, 0.0, 0.005), 0.005, kDefaultGridCap, e); }, 3);
  row("level_set_exact eps=-0.01", [&](Exec e) { (void)level_set_exact(flake, -0.01, e); }, 3);
  row("level_set_exact staircase", [&](Exec e) { (void)level_set_exact(stair, 1.0 / 64, e); }, 3);
  row("two_point_constant", [&](Exec e) { smp.exec = e; (void)two_point_constant(flake, smp); }, 1);
  row("chord_arc_constant", [&](Exec e) { smp.exec = e; (void)chord_arc_constant(flake, smp); }, 1);
  row("zeta_sup r0=0.5", [&](Exec e) { smp.exec = e; (void)zeta_sup(flake, 0.5, smp); }, 1);
  return 0;
}
