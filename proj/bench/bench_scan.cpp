// Compares the OpenMP kernels against their serial references and reports
// timings plus a result-equality check.
#include <chrono>
#include <cstdio>

#include "k3lat/binform.hpp"
#include "k3lat/criteria.hpp"

using namespace k3lat;

namespace {

template <typename F>
double time_ms(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
  // admissibility scan
  std::vector<AdmissibilityReport> serial, parallel;
  double ts = time_ms([&] { serial = bcns_scan_serial(2, 600); });
  double tp = time_ms([&] { parallel = bcns_scan(2, 600); });
  bool same = serial.size() == parallel.size();
  for (size_t i = 0; same && i < serial.size(); ++i)
    same = serial[i].admissible == parallel[i].admissible &&
           serial[i].involution_class == parallel[i].involution_class;
  std::printf("bcns_scan [2,600]     serial %8.1f ms   parallel %8.1f ms   speedup %.2fx   %s\n",
              ts, tp, ts / tp, same ? "identical" : "MISMATCH");

  // oracle box scan (rank 2, Empty case: the full box is traversed)
  Lattice l = family_lattice(7);
  std::optional<Vec> ws, wp;
  double os = time_ms([&] { ws = brute_oracle_serial(l, -2, std::nullopt, 2000); });
  double op = time_ms([&] { wp = brute_oracle(l, -2, std::nullopt, 2000); });
  std::printf("brute_oracle b=2000   serial %8.1f ms   parallel %8.1f ms   speedup %.2fx   %s\n",
              os, op, os / op, ws == wp ? "identical" : "MISMATCH");

  // rank-3 generic-path scan with a witness present
  Lattice r3 = make_lattice(Mat{{8, 0, 0}, {0, -2, 0}, {0, 0, -2}});
  double gs = time_ms([&] { ws = brute_oracle_serial(r3, 14, std::nullopt, 40); });
  double gp = time_ms([&] { wp = brute_oracle(r3, 14, std::nullopt, 40); });
  std::printf("brute_oracle rank 3   serial %8.1f ms   parallel %8.1f ms   speedup %.2fx   %s\n",
              gs, gp, gs / gp, ws == wp ? "identical" : "MISMATCH");
  return 0;
}
