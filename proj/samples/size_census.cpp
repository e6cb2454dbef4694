// Counts orthogroupoids and orthogonal relational systems by carrier size.
//
//   size_census [max_size] [jobs]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "orthokit.hpp"

using namespace orthokit;

namespace {

std::size_t count_groupoids(std::size_t n, bool zc, Dedup dedup, unsigned jobs) {
  SearchSpec s;
  s.size = n;
  s.zero_commutative = zc;
  s.dedup = dedup;
  s.jobs = jobs;
  std::size_t count = 0;
  for_each_orthogroupoid(s, [&](Groupoid const&) { ++count; });
  return count;
}

std::size_t count_systems(std::size_t n, unsigned jobs) {
  SearchSpec s;
  s.size = n;
  s.jobs = jobs;
  std::size_t count = 0;
  for_each_orthosystem(s, [&](RelationalSystem const&) { ++count; });
  return count;
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t const max = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 6;
  unsigned const jobs = argc > 2 ? static_cast<unsigned>(std::strtoul(argv[2], nullptr, 10)) : 1;
  if (max > enumeration_soft_limit) {
    std::fprintf(stderr, "warning: sizes above %zu take a long time\n", enumeration_soft_limit);
  }

  std::printf("%4s %10s %8s %10s %8s %10s %8s\n", "size", "labelled", "iso", "zc", "zc-iso", "relsys", "seconds");
  for (std::size_t n = 1; n <= max; ++n) {
    auto start = std::chrono::steady_clock::now();
    std::size_t const all = count_groupoids(n, false, Dedup::labelled, jobs);
    std::size_t const iso = count_groupoids(n, false, Dedup::up_to_iso, jobs);
    std::size_t const zc = count_groupoids(n, true, Dedup::labelled, jobs);
    std::size_t const zc_iso = count_groupoids(n, true, Dedup::up_to_iso, jobs);
    std::size_t const rel = count_systems(n, jobs);
    double const secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%4zu %10zu %8zu %10zu %8zu %10zu %8.2f\n", n, all, iso, zc, zc_iso, rel, secs);
  }
}
