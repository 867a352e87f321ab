// Acceptance gate: one line per criterion, nonzero exit when any fails.
// Universe U = closures with terms of size <= 4, environments of length <= 2,
// sorts <= 1, under the default parameters c = 1, D = 2.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "lambdadelta/lambdadelta.hpp"

using namespace lambdadelta;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(const char* id, const char* name, double limit_s, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  bool pass = o.pass;
  std::string timing = std::to_string(secs).substr(0, std::to_string(secs).find('.') + 3) + "s";
  if (limit_s > 0) {
    timing += " (limit " + std::to_string(static_cast<int>(limit_s)) + "s)";
    if (secs >= limit_s) pass = false;
  }
  if (!pass) ++failures;
  std::printf("%s %-22s %s  %s  %s\n", id, name, pass ? "PASS" : "FAIL", timing.c_str(), o.detail.c_str());
  std::fflush(stdout);
}

SuiteOptions universe_options() {
  SuiteOptions o;
  o.bounds = UniverseBounds{4, 2, 1};
  o.params = Params{};
  o.params.budget = 100000;
  o.oracle_steps = 4;
  return o;
}

Outcome from_suite(const SuiteResult& r) {
  std::string d = "closures=" + std::to_string(r.closures) + " checked=" + std::to_string(r.checked) +
                  " counterexamples=" + std::to_string(r.counterexamples.size());
  if (!r.counterexamples.empty()) d += " first: " + r.counterexamples.front();
  return {r.passed() && r.checked > 0, d};
}

}  // namespace

int main() {
  const Term delta = parse_term("(abst *0 (appl #0 #0))");
  const Term omega = Term::appl(delta, delta);
  const Term reductum = Term::abbr(Term::cast(parse_term("*0"), delta), parse_term("(appl #0 #0)"));
  const Term delta_k = parse_term("(abst *0 (appl *1 (appl #0 #0)))");
  const Term loop = Term::appl(delta_k, delta_k);
  const auto opt = universe_options();

  report("AC1", "worked-example-beta", 1, [&] {
    const bool fwd = cpr_holds(Env{}, omega, reductum);
    const bool back = cpr_holds(Env{}, reductum, omega);
    return Outcome{fwd && back, std::string("forward=") + (fwd ? "yes" : "no") + " back=" + (back ? "yes" : "no")};
  });
  report("AC2", "worked-example-loop", 1, [&] {
    const auto r = fsb_certify(Params{}, Env{}, loop);
    return Outcome{r.status == CertStatus::Cycle,
                   std::string("status=") + to_string(r.status) + " cycle_length=" + std::to_string(r.cycle.size())};
  });
  report("AC3", "diamond", 300, [&] { return from_suite(suite_diamond(opt)); });
  report("AC4", "church-rosser", 600, [&] { return from_suite(suite_church_rosser(opt)); });
  report("AC5", "arity-preservation", 0, [&] { return from_suite(suite_arity_preservation(opt)); });
  report("AC6", "sn-extended", 0, [&] { return from_suite(suite_sn_extended(opt)); });
  report("AC7", "very-big-tree", 900, [&] { return from_suite(suite_very_big_tree(opt)); });
  report("AC8", "subject-reduction", 0, [&] { return from_suite(suite_subject_reduction(opt)); });
  report("AC9", "statics-laws", 0, [&] { return from_suite(suite_statics_laws(opt)); });
  report("AC10", "lleq-laws", 0, [&] { return from_suite(suite_lleq_laws(opt)); });
  report("AC11", "oracle-agreement", 0, [&] { return from_suite(suite_oracle_agreement(opt)); });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
