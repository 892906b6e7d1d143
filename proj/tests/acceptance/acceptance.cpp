#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "adelic/suite.hpp"

using namespace adelic;

namespace {

struct Run {
  const char* identity;
  const char* scheme;
  int trials;
};

struct Criterion {
  int number;
  const char* title;
  std::vector<Run> runs;
  double budget_seconds;  ///< 0 for no bound
};

constexpr std::uint64_t kSeed = 20240601;

bool check(const Criterion& c) {
  auto t0 = std::chrono::steady_clock::now();
  int instances = 0;
  std::vector<std::string> notes;
  for (const auto& r : c.runs) {
    try {
      IdentityReport rep = run_identity(r.identity, Scheme::parse(r.scheme), kSeed, r.trials);
      instances += rep.instances;
      for (const auto& f : rep.failures)
        notes.push_back(std::string(r.identity) + " on " + r.scheme + " #" + std::to_string(f.instance) + ": " + f.detail);
    } catch (const Error& e) {
      notes.push_back(std::string(r.identity) + " on " + r.scheme + ": " + e.what());
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (c.budget_seconds > 0 && secs >= c.budget_seconds)
    notes.push_back("runtime " + std::to_string(secs) + " s exceeds " + std::to_string(c.budget_seconds) + " s");
  const bool ok = notes.empty();
  std::printf("criterion %2d: %s  %s (%d instances, %.2f s)\n", c.number, ok ? "PASS" : "FAIL", c.title, instances, secs);
  for (const auto& n : notes) std::printf("    %s\n", n.substr(0, 400).c_str());
  return ok;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "two-variable residue formula fixtures", {{"residue-formula", "A2/Q", 2}}, 1.0},
      {2, "residue theorem on the projective line", {{"residue-theorem", "P1/Q", 25}, {"residue-theorem", "P1/F7", 25}}, 5.0},
      {3, "composed residues through closed points cancel", {{"parshin-2d", "A2/Q", 11}}, 10.0},
      {4, "delta squared vanishes on the plane", {{"delta-squared", "A2/Q", 10}}, 10.0},
      {5, "Leibniz rule for the adele action", {{"leibniz", "P1/Q", 50}, {"leibniz", "A2/Q", 10}}, 0},
      {6, "associativity of the action", {{"associativity", "A2/Q", 25}}, 0},
      {7, "the unit coface acts as a signed coboundary",
       {{"unit-coface-action", "P1/Q", 6}, {"unit-coface-action", "A2/Q", 6}, {"unit-coface-action", "P2/F5", 3}}, 0},
      {8, "regular forms give a chain map", {{"regular-forms-chain-map", "P1/Q", 25}}, 0},
      {9, "trace is linear over downstairs adeles", {{"trace-linearity", "P1/Q", 25}, {"trace-linearity", "P1/F7", 25}}, 0},
      {10, "DG-module structure of dual forms",
       {{"dg-module", "P1/Q", 50},
        {"dg-module", "A2/Q", 10},
        {"double-complex", "P1/Q", 10},
        {"double-complex", "A2/Q", 10}},
       0},
      {11, "line bundle cohomology and Serre duality", {{"cohomology", "P1/Q", 9}, {"serre-duality", "P1/Q", 3}}, 10.0},
      {12, "degree-one adeles match classical adeles", {{"classical-adeles", "P1/Q", 25}}, 0},
  };
  int failed = 0;
  for (const auto& c : criteria)
    if (!check(c)) ++failed;
  std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
