// Acceptance driver: one PASS/FAIL line per criterion, details below it.
#include <arh/verify.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <vector>

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> ids;
  app.add_option("--criterion", ids, "Criterion number(s); all when omitted")
      ->check(CLI::Range(1, arh::verify::kCriterionCount));
  CLI11_PARSE(app, argc, argv);
  if (ids.empty())
    for (int i = 1; i <= arh::verify::kCriterionCount; ++i) ids.push_back(i);

  bool ok = true;
  for (int id : ids) {
    const auto rep = arh::verify::run_criterion(id);
    const bool in_time = rep.seconds <= rep.time_limit;
    const bool pass = rep.pass() && in_time;
    ok = ok && pass;
    std::printf("%s criterion %d: %s (%.2f s, limit %.0f s%s)\n", pass ? "PASS" : "FAIL", id, rep.title.c_str(),
                rep.seconds, rep.time_limit, in_time ? "" : ", over time");
    for (const auto& c : rep.checks)
      std::printf("    [%s] %s: %s\n", c.pass ? "ok" : "FAIL", c.name.c_str(), c.detail.c_str());
  }
  return ok ? 0 : 1;
}
