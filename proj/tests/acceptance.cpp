// Acceptance suite: one test case per criterion, each printing a final
// [PASS]/[FAIL] line. Desk scale throughout: 3 agents, 2 commodities,
// 5 grid points per axis unless a criterion pins something else.

#include <chrono>
#include <iostream>
#include <map>

#include "catch_amalgamated.hpp"

#include "mdsp/mdsp.hpp"

using namespace mdsp;

namespace {

Rational rat(long long num, long long den = 1) { return Rational(num, den); }

constexpr unsigned kWorkers = 2;

struct CriterionGuard {
  int id;
  std::string title;
  bool ok = true;
  double elapsed_ms = -1;

  CriterionGuard(int id_, std::string title_) : id(id_), title(std::move(title_)) {}

  void expect(bool condition, const char* what) {
    ok = ok && condition;
    INFO(what);
    CHECK(condition);
  }

  ~CriterionGuard() {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << title;
    if (elapsed_ms >= 0) std::cout << " (" << elapsed_ms << " ms)";
    std::cout << std::endl;
  }
};

double ms_since(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                   start)
      .count();
}

const Economy& desk_economy() {
  static const Economy econ = make_economy(2, {rat(12), rat(15)}, 3);
  return econ;
}

const PeakGrid& desk_grid() {
  static const PeakGrid grid = make_grid(desk_economy(), 5);
  return grid;
}

// The desk-scale axiom matrix, computed once and shared by criteria 3 and 4.
struct MatrixEntry {
  Rule rule;
  std::vector<AxiomReport> reports;
};

const std::vector<MatrixEntry>& desk_matrix() {
  static const std::vector<MatrixEntry> matrix = [] {
    const Economy& econ = desk_economy();
    const PeakGrid& grid = desk_grid();
    const SweepOptions sweep{kWorkers};
    std::vector<MatrixEntry> out;
    for (Rule& rule : default_rule_catalog(econ)) {
      MatrixEntry entry{std::move(rule), {}};
      entry.reports.push_back(check_same_sided(entry.rule, econ, grid, sweep));
      entry.reports.push_back(check_unanimity(entry.rule, econ, grid, sweep));
      entry.reports.push_back(check_strategy_proof(entry.rule, econ, grid, sweep));
      entry.reports.push_back(check_replacement_monotone(entry.rule, econ, grid, sweep));
      entry.reports.push_back(check_non_bossy(entry.rule, econ, grid, sweep));
      entry.reports.push_back(check_equal_treatment(entry.rule, econ, grid, sweep));
      entry.reports.push_back(check_egalitarian_bound(entry.rule, econ, grid, sweep));
      out.push_back(std::move(entry));
    }
    return out;
  }();
  return matrix;
}

const AxiomReport* find_report(const MatrixEntry& entry, const char* axiom_name) {
  for (const AxiomReport& r : entry.reports)
    if (r.axiom == axiom_name) return &r;
  return nullptr;
}

const MatrixEntry* find_entry(const char* rule_name) {
  for (const MatrixEntry& e : desk_matrix())
    if (e.rule.name == rule_name) return &e;
  return nullptr;
}

bool replay_matches(const Rule& rule, const Economy& econ, const Witness& w) {
  if (!w.profile || !w.truthful) return false;
  if (rule(econ, *w.profile) != *w.truthful) return false;
  if (w.agent && w.misreport && w.deviated) {
    PeakProfile deviated = *w.profile;
    deviated.peaks[*w.agent] = *w.misreport;
    if (rule(econ, deviated) != *w.deviated) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("criterion 1: figure-1 allocation, exact shares and bounds, under 1 ms") {
  CriterionGuard guard(1, "figure-1 uniform allocation with lambda (6, 4)");

  const Economy econ = make_economy(2, {rat(12), rat(15)}, 3);
  const PeakProfile peaks{{{rat(2), rat(2)}, {rat(4), rat(7)}, {rat(8), rat(4)}}};
  const Allocation expected{{{rat(2), rat(4)}, {rat(4), rat(7)}, {rat(6), rat(4)}}};

  auto [alloc, lambdas] = uniform_allocate_with_lambdas(econ, peaks);  // warm-up
  guard.expect(alloc == expected, "exact shares");
  guard.expect(lambdas[0].lambda == 6 && lambdas[0].mode == FillMode::ExcessDemand,
               "first bound");
  guard.expect(lambdas[1].lambda == 4 && lambdas[1].mode == FillMode::ExcessSupply,
               "second bound");

  const auto start = std::chrono::steady_clock::now();
  constexpr int kRuns = 200;
  for (int i = 0; i < kRuns; ++i) {
    const Allocation again = uniform_allocate(econ, peaks);
    if (again != expected) guard.expect(false, "stable across repeats");
  }
  guard.elapsed_ms = ms_since(start) / kRuns;
  guard.expect(guard.elapsed_ms < 1.0, "single allocation under 1 ms");
}

TEST_CASE("criterion 2: example-1 inefficiency, improvement found under 1 s") {
  CriterionGuard guard(2, "example-1 equal split is dominated on the half-step grid");

  const Economy econ = make_economy(2, {rat(18), rat(12)}, 2);
  const PeakProfile peaks{{{rat(27, 2), rat(9)}, {rat(12), rat(21, 2)}}};
  const Allocation alloc = uniform_allocate(econ, peaks);
  guard.expect(alloc == Allocation{{{rat(9), rat(6)}, {rat(9), rat(6)}}},
               "equal split selected");

  const std::vector<QuadraticPreference> prefs = {
      make_quadratic(peaks.peaks[0], {rat(1), rat(3)}),
      make_quadratic(peaks.peaks[1], {rat(3), rat(1)})};

  const auto start = std::chrono::steady_clock::now();
  const auto improvement =
      find_pareto_improvement(alloc, prefs, econ, make_grid_step(econ, rat(1, 2)));
  guard.elapsed_ms = ms_since(start);

  guard.expect(improvement.has_value(), "improvement found");
  if (improvement) {
    guard.expect(is_feasible(*improvement, econ), "improvement feasible");
    bool weak = true, strict = false;
    for (std::size_t i = 0; i < 2; ++i) {
      const Rational before = quad_loss(prefs[i], alloc.shares[i]);
      const Rational after = quad_loss(prefs[i], improvement->shares[i]);
      weak = weak && after <= before;
      strict = strict || after < before;
    }
    guard.expect(weak && strict, "improvement weakly better for all, strictly for one");
  }

  const Allocation specific{{{rat(15, 2), rat(15, 2)}, {rat(21, 2), rat(9, 2)}}};
  guard.expect(is_feasible(specific, econ), "specific allocation feasible");
  guard.expect(quad_strictly_prefers(prefs[0], specific.shares[0], alloc.shares[0]),
               "agent 1 strictly gains at the specific allocation");
  guard.expect(quad_strictly_prefers(prefs[1], specific.shares[1], alloc.shares[1]),
               "agent 2 strictly gains at the specific allocation");
  guard.expect(guard.elapsed_ms < 1000.0, "search under 1 s");
}

TEST_CASE("criterion 3: desk-scale axiom matrix under 60 s") {
  CriterionGuard guard(3, "axiom matrix on 15625 profiles");

  const auto start = std::chrono::steady_clock::now();
  const std::vector<MatrixEntry>& matrix = desk_matrix();
  guard.elapsed_ms = ms_since(start);

  const ProfileSpace space(desk_economy(), desk_grid());
  guard.expect(space.profile_count() == 15625, "profile count");

  const MatrixEntry* uniform = find_entry("uniform");
  guard.expect(uniform != nullptr, "uniform present");
  if (uniform) {
    for (const char* name :
         {axiom::strategy_proofness, axiom::same_sidedness, axiom::unanimity,
          axiom::equal_treatment, axiom::replacement_monotonicity, axiom::non_bossiness,
          axiom::egalitarian_lower_bound}) {
      const AxiomReport* r = find_report(*uniform, name);
      guard.expect(r != nullptr && r->verdict == Verdict::CertifiedOnGrid,
                   "uniform certifies every listed axiom");
    }
    const AxiomReport* sp = find_report(*uniform, axiom::strategy_proofness);
    guard.expect(sp != nullptr && sp->cases_checked == 1171875,
                 "about 1.2M strategy-proofness triples");
  }

  const MatrixEntry* proportional = find_entry("proportional");
  if (proportional) {
    const AxiomReport* sp = find_report(*proportional, axiom::strategy_proofness);
    guard.expect(sp != nullptr && sp->verdict == Verdict::Refuted,
                 "proportional fails strategy-proofness");
    guard.expect(sp != nullptr && sp->witness.has_value() &&
                     replay_matches(proportional->rule, desk_economy(), *sp->witness),
                 "proportional witness replays");
  }

  const MatrixEntry* serial = find_entry("serial");
  if (serial) {
    const AxiomReport* et = find_report(*serial, axiom::equal_treatment);
    const AxiomReport* elb = find_report(*serial, axiom::egalitarian_lower_bound);
    guard.expect(et != nullptr && et->verdict == Verdict::Refuted,
                 "serial fails equal treatment");
    guard.expect(et->witness && replay_matches(serial->rule, desk_economy(), *et->witness),
                 "serial equal-treatment witness replays");
    guard.expect(elb != nullptr && elb->verdict == Verdict::Refuted,
                 "serial fails the egalitarian lower bound");
    guard.expect(
        elb->witness && replay_matches(serial->rule, desk_economy(), *elb->witness),
        "serial egalitarian witness replays");
  }

  const MatrixEntry* constant = find_entry("constant");
  if (constant) {
    const AxiomReport* un = find_report(*constant, axiom::unanimity);
    guard.expect(un != nullptr && un->verdict == Verdict::Refuted,
                 "constant fails unanimity");
    guard.expect(
        un->witness && replay_matches(constant->rule, desk_economy(), *un->witness),
        "constant unanimity witness replays");
  }

  guard.expect(guard.elapsed_ms < 60000.0, "matrix under 60 s");
}

TEST_CASE("criterion 4: implication consistency on every certified rule/grid pair") {
  CriterionGuard guard(4, "no antecedent-certified, consequent-refuted pair");

  for (const MatrixEntry& entry : desk_matrix()) {
    const auto violations = check_implications(entry.reports);
    guard.expect(violations.empty(), "desk grid implications");
  }

  const Economy one = make_economy(1, {rat(10)}, 3);
  const PeakGrid grid = make_grid(one, 5);
  const SweepOptions sweep{kWorkers};
  for (const Rule& rule : default_rule_catalog(one)) {
    std::vector<AxiomReport> reports;
    reports.push_back(check_same_sided(rule, one, grid, sweep));
    reports.push_back(check_unanimity(rule, one, grid, sweep));
    reports.push_back(check_strategy_proof(rule, one, grid, sweep));
    reports.push_back(check_replacement_monotone(rule, one, grid, sweep));
    reports.push_back(check_non_bossy(rule, one, grid, sweep));
    guard.expect(check_implications(reports).empty(), "one-commodity implications");
  }
}

TEST_CASE("criterion 5: option boxes are products of intervals") {
  CriterionGuard guard(5, "box structure for uniform and serial sweeps");

  const auto start = std::chrono::steady_clock::now();
  for (std::size_t l : {std::size_t{1}, std::size_t{2}}) {
    for (std::size_t n : {std::size_t{2}, std::size_t{3}}) {
      const Economy econ =
          l == 1 ? make_economy(1, {rat(12)}, n) : make_economy(2, {rat(12), rat(15)}, n);
      const PeakGrid grid = make_grid(econ, 5);
      const ProfileSpace space(econ, grid);
      const std::vector<Rule> rules = {
          as_rule(UniformRule{}, econ),
          as_rule(SerialRule{identity_orders(econ)}, econ, "serial")};
      for (const Rule& rule : rules) {
        bool all_valid = true;
        for (std::size_t agent = 0; agent < econ.agents; ++agent) {
          for (std::uint64_t cond = 0; cond < space.conditioning_count(); ++cond) {
            std::vector<std::uint32_t> idx;
            space.conditioning_at(cond, agent, idx);
            std::vector<Bundle> others;
            for (std::size_t i = 0; i < econ.agents; ++i)
              if (i != agent) others.push_back(space.choice(idx[i]));
            const OptionBox box = option_box(rule, econ, agent, others, grid);
            all_valid = all_valid && box.box_structure_valid;
          }
        }
        guard.expect(all_valid, "every swept option set has product structure");
      }
    }
  }
  guard.elapsed_ms = ms_since(start);

  const Economy hand = make_economy(1, {rat(10)}, 2);
  const OptionBox box = option_box(as_rule(UniformRule{}, hand), hand, 0, {{rat(4)}},
                                   make_grid(hand, 11));
  guard.expect(box.intervals.size() == 1 && box.intervals[0].first == 5 &&
                   box.intervals[0].second == 6,
               "hand case gives exactly [5, 6]");
}

TEST_CASE("criterion 6: domination verdicts at desk scale under 120 s") {
  CriterionGuard guard(6, "uniform beats constant; serial and uniform incomparable");

  const Economy& econ = desk_economy();
  const PeakGrid& grid = desk_grid();
  const SweepOptions sweep{kWorkers};
  const Rule uniform = as_rule(UniformRule{}, econ);
  const Rule serial = as_rule(SerialRule{identity_orders(econ)}, econ, "serial");
  const Rule constant =
      as_rule(ConstantRule{equal_division_allocation(econ)}, econ, "constant");

  const auto start = std::chrono::steady_clock::now();
  const DominationVerdict beats =
      check_domination(uniform, constant, econ, grid, 0, sweep);
  const DominationVerdict incomparable =
      check_domination(serial, uniform, econ, grid, 0, sweep);
  const DominationVerdict self = check_domination(uniform, uniform, econ, grid, 0, sweep);
  guard.elapsed_ms = ms_since(start);

  guard.expect(beats.relation == DominationRelation::ADominatesB,
               "uniform strictly dominates the constant rule");
  guard.expect(incomparable.relation == DominationRelation::Incomparable,
               "serial vs uniform incomparable");
  guard.expect(!incomparable.evidence.empty(), "incomparability carries evidence");
  guard.expect(self.relation == DominationRelation::Equivalent,
               "uniform equivalent to itself");
  const ProfileSpace space(econ, grid);
  guard.expect(beats.conditioning_profiles == space.conditioning_count(),
               "full conditioning enumeration");
  guard.expect(guard.elapsed_ms < 120000.0, "verdicts under 120 s");
}

TEST_CASE("criterion 7: dominator probes") {
  CriterionGuard guard(7, "no strategy-proof dominator for uniform or skewed sequential");

  const Economy& econ = desk_economy();
  const PeakGrid& grid = desk_grid();
  PuspOptions options;
  options.workers = kWorkers;

  const auto start = std::chrono::steady_clock::now();
  const AxiomReport uniform_probe = pusp_probe(as_rule(UniformRule{}, econ), econ, grid,
                                               options);
  guard.expect(uniform_probe.verdict == Verdict::CertifiedOnGrid,
               "uniform survives the perturbation family");

  const AxiomReport skewed_probe = pusp_probe(
      as_rule(SequentialRule{skewed_reference(econ)}, econ, "sequential(skewed)"), econ,
      grid, options);
  guard.expect(skewed_probe.verdict == Verdict::CertifiedOnGrid,
               "skewed sequential survives the perturbation family");
  guard.elapsed_ms = ms_since(start);

  bool refused = false;
  std::vector<std::string> failed;
  try {
    pusp_probe(as_rule(ConstantRule{equal_division_allocation(econ)}, econ, "constant"),
               econ, grid, options);
  } catch (const HypothesesError& e) {
    refused = true;
    failed = e.failed();
  }
  guard.expect(refused, "constant is refused");
  guard.expect(failed == std::vector<std::string>{axiom::unanimity},
               "refusal names unanimity");
}

TEST_CASE("criterion 8: uniqueness spot-check") {
  CriterionGuard guard(8, "uniform is the unique four-property survivor");

  const Economy& econ = desk_economy();
  const PeakGrid& grid = desk_grid();
  PuspOptions options;
  options.workers = kWorkers;

  const auto start = std::chrono::steady_clock::now();
  const Theorem3Report report =
      theorem3_spotcheck(econ, grid, default_rule_catalog(econ), options);
  guard.elapsed_ms = ms_since(start);

  guard.expect(report.uniform_unique, "uniform unique");
  guard.expect(report.survivors == std::vector<std::string>{"uniform"},
               "survivor list is exactly the uniform rule");

  const std::map<std::string, std::string> expected = {
      {"serial", axiom::equal_treatment},
      {"proportional", axiom::strategy_proofness},
      {"constant", axiom::unanimity},
      {"sequential(skewed)", axiom::equal_treatment}};
  for (const auto& [rule, ax] : expected) {
    bool found = false;
    for (const EliminationRecord& e : report.eliminations)
      found = found || (e.rule == rule && e.axiom == ax);
    guard.expect(found, "elimination reason matches");
  }
  for (const EliminationRecord& e : report.eliminations) {
    if (e.rule == "constant")
      guard.expect(e.detail.find("dominated by the uniform rule") != std::string::npos,
                   "constant is exhibited as dominated");
  }
}

TEST_CASE("criterion 9: reports byte-identical across worker counts") {
  CriterionGuard guard(9, "worker count never changes a byte of output");

  const std::string dir = [] {
    const char* d = std::getenv("MDSP_SOURCE_DIR");
    return d ? std::string(d) : std::string("..");
  }();

  // Full axiom suite over the desk economy.
  {
    const Scenario s = load_scenario(dir + "/scenarios/uniform_axioms_check.json");
    RunOptions w1, w3;
    w1.workers = 1;
    w3.workers = 3;
    guard.expect(run_scenario(s, w1).doc.dump(2) == run_scenario(s, w3).doc.dump(2),
                 "check report identical");
  }
  // Domination verdict.
  {
    const Scenario s = load_scenario(dir + "/scenarios/serial_vs_uniform_dominate.json");
    RunOptions w1, w3;
    w1.workers = 1;
    w3.workers = 3;
    guard.expect(run_scenario(s, w1).doc.dump(2) == run_scenario(s, w3).doc.dump(2),
                 "domination report identical");
  }
  // Dominator probe (reduced grid keeps the double run affordable).
  {
    Json j = Json::parse(R"({
      "command": "pusp",
      "economy": {"omega": ["12", "15"], "agents": 3},
      "rule": {"rule": "uniform"},
      "grid": {"points_per_axis": 3}
    })");
    const Scenario s = scenario_from_json(j);
    RunOptions w1, w4;
    w1.workers = 1;
    w4.workers = 4;
    guard.expect(run_scenario(s, w1).doc.dump(2) == run_scenario(s, w4).doc.dump(2),
                 "probe report identical");
  }
  // Builtin reproduction.
  {
    RunOptions w1, w3;
    w1.workers = 1;
    w3.workers = 3;
    guard.expect(reproduce_builtin("domination-serial-uniform", w1).doc.dump(2) ==
                     reproduce_builtin("domination-serial-uniform", w3).doc.dump(2),
                 "builtin report identical");
  }
}
