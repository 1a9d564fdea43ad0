#include <doctest.h>

#include <map>
#include <set>

#include "ravenlab/core/errors.hpp"
#include "ravenlab/machine/census.hpp"
#include "ravenlab/machine/classify.hpp"
#include "ravenlab/machine/machine_prior.hpp"
#include "ravenlab/machine/program.hpp"
#include "ravenlab/machine/reference_machine.hpp"
#include "ravenlab/confirm/decomposition.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace ravenlab;
using namespace ravenlab::machine;

namespace {

const Hypothesis kH = Hypothesis::all_ravens_black();

ParsedProgram prog(std::vector<Instruction> code) { return ParsedProgram{std::move(code)}; }

Instruction op(Opcode o, std::uint8_t k = 0) { return {o, k}; }

ExecutionBudget budget(std::uint64_t steps, std::size_t output = 64) { return {steps, output}; }

ExecutionOutcome outcome(std::string output, RunStatus status, bool capped = false) {
  ExecutionOutcome o;
  o.output = std::move(output);
  o.status = status;
  o.output_capped = capped;
  return o;
}

// Number of valid programs of exactly n bits: bodies of 3-bit plain opcodes
// (six choices) and 6-bit jumps (eight operands), closed by a 3-bit HALT.
Integer valid_count(unsigned n) {
  std::vector<Integer> body(n + 1, 0);
  body[0] = 1;
  for (unsigned k = 1; k <= n; ++k) {
    if (k >= 3) body[k] += 6 * body[k - 3];
    if (k >= 6) body[k] += 8 * body[k - 6];
  }
  return n >= 3 ? body[n - 3] : Integer(0);
}

}  // namespace

TEST_CASE("program parsing") {
  auto p = parse_program("111");
  REQUIRE(p);
  CHECK(p->code == std::vector<Instruction>{op(Opcode::halt)});
  p = parse_program("000111");
  REQUIRE(p);
  CHECK(p->code == std::vector<Instruction>{op(Opcode::emit_k), op(Opcode::halt)});
  CHECK(run_program(*p, {}).output == "K");
  for (const char* bad : {"", "000", "1", "11", "110", "110010", "111000", "1111", "0001110"}) {
    CHECK_FALSE(parse_program(bad));
  }
  p = parse_program("000100110010111");
  REQUIRE(p);
  CHECK(disassemble(*p) == "EMIT_K INC JNZ(2) HALT");
  CHECK(emitted_symbol(Opcode::emit_g) == 'G');
  CHECK(emitted_symbol(Opcode::inc) == '\0');
}

TEST_CASE("encode inverts parse") {
  for (const auto& bits : enumerate_valid(12).programs) {
    const auto p = parse_program(bits);
    REQUIRE(p);
    CHECK(encode_program(*p) == bits);
  }
}

TEST_CASE("interpreter traces") {
  auto o = run_program(prog({op(Opcode::halt)}), budget(10));
  CHECK(o.output.empty());
  CHECK(o.status == RunStatus::halted);
  CHECK(o.steps_used == 1);

  const auto printer = prog({op(Opcode::emit_k), op(Opcode::inc), op(Opcode::jnz, 2), op(Opcode::halt)});
  o = run_program(printer, budget(10));
  CHECK(o.output == "KKKK");
  CHECK(o.status == RunStatus::running_at_budget);
  CHECK(o.steps_used == 10);
  CHECK_FALSE(o.output_capped);
  o = run_program(printer, budget(10000, 64));
  CHECK(o.output == std::string(64, 'K'));
  CHECK(o.status == RunStatus::running_at_budget);
  CHECK(o.output_capped);

  o = run_program(prog({op(Opcode::inc), op(Opcode::jnz, 1), op(Opcode::halt)}), budget(500));
  CHECK(o.output.empty());
  CHECK(o.status == RunStatus::running_at_budget);
  CHECK(o.steps_used == 500);

  // INC INC DEC JNZ(1): the pair (DEC, R=1) recurs with nothing printed.
  o = run_program(prog({op(Opcode::inc), op(Opcode::inc), op(Opcode::dec), op(Opcode::jnz, 1), op(Opcode::halt)}),
                  budget(10000));
  CHECK(o.output.empty());
  CHECK(o.status == RunStatus::proven_silent_loop);
  CHECK(o.steps_used < 100);

  // A loop that prints is never silent.
  o = run_program(prog({op(Opcode::inc), op(Opcode::emit_g), op(Opcode::dec), op(Opcode::inc), op(Opcode::jnz, 2),
                        op(Opcode::halt)}),
                  budget(10000, 8));
  CHECK(o.output == "GGGGGGGG");
  CHECK(o.status == RunStatus::running_at_budget);

  // DEC floors at zero and JNZ falls through on zero.
  o = run_program(prog({op(Opcode::dec), op(Opcode::jnz, 0), op(Opcode::emit_b), op(Opcode::halt)}), budget(10));
  CHECK(o.output == "B");
  CHECK(o.status == RunStatus::halted);
  CHECK(o.steps_used == 4);

  // Offsets reaching past the first opcode clamp to it.
  o = run_program(prog({op(Opcode::emit_w), op(Opcode::inc), op(Opcode::jnz, 7), op(Opcode::halt)}), budget(9));
  CHECK(o.output == "WWW");

  CHECK_THROWS_AS(budget(0).validate(), ParameterError);
  CHECK_THROWS_AS(budget(1, 0).validate(), ParameterError);
}

TEST_CASE("enumeration") {
  auto e = enumerate_valid(3);
  CHECK(e.programs == std::vector<std::string>{"111"});
  CHECK(e.accounted_mass == Rational(1, 8));
  e = enumerate_valid(2);
  CHECK(e.programs.empty());
  CHECK(e.accounted_mass == 0);

  Rational previous = 0;
  for (unsigned L = 0; L <= 15; ++L) {
    e = enumerate_valid(L);
    std::map<std::size_t, Integer> per_length;
    for (std::size_t i = 0; i < e.programs.size(); ++i) {
      ++per_length[e.programs[i].size()];
      if (i) CHECK(e.programs[i - 1].size() <= e.programs[i].size());
    }
    Rational mass = 0;
    for (unsigned n = 0; n <= L; ++n) {
      CHECK(per_length[n] == valid_count(n));
      mass += Rational(valid_count(n)) * pow2_neg(n);
    }
    CHECK(e.accounted_mass == mass);
    CHECK(e.accounted_mass >= previous);
    CHECK(e.accounted_mass <= 1);
    previous = e.accounted_mass;
  }
  CHECK(enumerate_valid(15).programs.size() == 2587);
}

TEST_CASE("valid programs are prefix-free") {
  std::set<std::string> valid;
  for (unsigned len = 0; len <= 15; ++len) {
    for (unsigned v = 0; v < (1u << len); ++v) {
      std::string bits;
      for (unsigned i = len; i-- > 0;) bits += ((v >> i) & 1u) ? '1' : '0';
      if (parse_program(bits)) valid.insert(bits);
    }
  }
  const auto e = enumerate_valid(15);
  CHECK(std::set<std::string>(e.programs.begin(), e.programs.end()) == valid);
  for (const auto& p : valid) {
    for (std::size_t k = 0; k < p.size(); ++k) CHECK(valid.count(p.substr(0, k)) == 0);
  }
}

TEST_CASE("machine mass bounds") {
  CHECK(machine_mass("", 0, {}) == ProbInterval::unknown());
  CHECK(machine_mass("KG", 0, {}) == ProbInterval::unknown());
  CHECK(machine_mass("", 3, {}).lo() >= Rational(1, 8));
  CHECK(machine_event_mass("", kH, Side::inside, 3, {}).lo() >= Rational(1, 8));
  CHECK(machine_event_mass("W", kH, Side::inside, 15, {}) == ProbInterval::exact(0));
  CHECK(machine_event_mass("KGW", kH, Side::inside, 15, {}) == ProbInterval::exact(0));
  CHECK(machine_mass("", 15, {}).hi() == 1);
  CHECK_THROWS_AS(machine_mass(std::string(9, 'K'), 15, budget(100, 8)), ParameterError);
  CHECK_NOTHROW(machine_mass(std::string(8, 'K'), 15, budget(100, 8)));
  CHECK_THROWS_AS(machine_mass("K", kMaxProgramBits + 1, {}), ParameterError);

  const auto census = fixtures::default_machine();
  for (const auto& x : oracle::all_strings("KWBG", 3)) {
    const auto m = cylinder_mass(*census, x);
    const auto in = event_mass(*census, x, kH, Side::inside);
    const auto out = event_mass(*census, x, kH, Side::outside);
    CHECK(in.lo() + out.lo() <= m.hi());
    CHECK(in.hi() + out.hi() >= m.lo());
    CHECK(in.lo() <= m.lo());
    CHECK(out.lo() <= m.lo());
    CHECK(m == machine_mass(x, 15, {}));
    CHECK(in == machine_event_mass(x, kH, Side::inside, 15, {}));
    const auto km = complexity_upper(x, ComplexityMode::monotone, 15, {});
    if (km) CHECK(m.lo() >= pow2_neg(*km));
  }
}

TEST_CASE("machine mass matches a direct program sum") {
  const auto census = Census::run(RegisterMachine{}, fixtures::machine_config(12, 1000));
  const auto programs = enumerate_valid(12);
  for (const auto& x : oracle::all_strings("KWBG", 2)) {
    Rational yes = 0;
    Rational maybe = 0;
    for (const auto& bits : programs.programs) {
      const auto p = parse_program(bits);
      const auto o = run_program(*p, budget(1000));
      const Rational w = pow2_neg(static_cast<unsigned>(bits.size()));
      if (o.output.starts_with(x)) {
        yes += w;
      } else if (!o.is_final() && x.starts_with(o.output)) {
        maybe += w;
      }
    }
    const auto m = census.mass(Event::cylinder(x));
    CHECK(m.lo() == yes);
    CHECK(m.hi() == yes + maybe + (1 - programs.accounted_mass));
  }
}

TEST_CASE("complexity bounds") {
  CHECK(complexity_upper("", ComplexityMode::monotone, 15, {}) == 3u);
  CHECK(complexity_upper("", ComplexityMode::halting, 15, {}) == 3u);
  CHECK(complexity_upper("K", ComplexityMode::halting, 15, {}) == 6u);
  CHECK(complexity_upper("K", ComplexityMode::monotone, 15, {}) == 6u);
  CHECK(complexity_upper("KG", ComplexityMode::halting, 15, {}) == 9u);
  CHECK_FALSE(complexity_upper("KWBGKWBGKWBG", ComplexityMode::monotone, 15, {}));
  CHECK_FALSE(complexity_upper("K", ComplexityMode::halting, 5, {}));

  const auto census = Census::run(RegisterMachine{}, MachineConfig{});
  for (const auto& x : oracle::all_strings("KWBG", 3)) {
    for (char a : std::string("KWBG")) {
      const auto shorter = census.complexity_upper(x, ComplexityMode::monotone);
      const auto longer = census.complexity_upper(x + a, ComplexityMode::monotone);
      if (longer) {
        REQUIRE(shorter);
        CHECK(*shorter <= *longer);
      }
    }
    const auto km = census.complexity_upper(x, ComplexityMode::monotone);
    const auto k = census.complexity_upper(x, ComplexityMode::halting);
    if (k) {
      REQUIRE(km);
      CHECK(*km <= *k);
    }
  }
  for (std::string x = ""; x.size() < 12; x += 'K') {
    const auto a = census.complexity_upper(x, ComplexityMode::monotone);
    const auto b = census.complexity_upper(x + 'K', ComplexityMode::monotone);
    REQUIRE(a);
    REQUIRE(b);
    CHECK(*a <= *b);
  }
}

TEST_CASE("refinement across budgets is nested") {
  const std::vector<MachineConfig> ladder{fixtures::machine_config(6, 100), fixtures::machine_config(9, 100),
                                          fixtures::machine_config(9, 1000), fixtures::machine_config(12, 1000),
                                          fixtures::machine_config(12, 10000), fixtures::machine_config(15, 10000)};
  std::vector<Census> censuses;
  for (const auto& c : ladder) censuses.push_back(Census::run(RegisterMachine{}, c));
  for (const auto& x : oracle::all_strings("KWBG", 3)) {
    for (Side side : {Side::all, Side::inside, Side::outside}) {
      Event e{x, Continuation::any(), side, kH};
      for (std::size_t i = 1; i < censuses.size(); ++i) {
        CHECK(censuses[i].mass(e).interval().within(censuses[i - 1].mass(e)));
      }
    }
  }
}

TEST_CASE("census is deterministic") {
  const auto a = Census::run(RegisterMachine{}, fixtures::machine_config(12, 2000));
  const auto b = Census::run(RegisterMachine{}, fixtures::machine_config(12, 2000));
  REQUIRE(a.entries().size() == b.entries().size());
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    CHECK(a.entries()[i].bits == b.entries()[i].bits);
    CHECK(a.entries()[i].outcome.output == b.entries()[i].outcome.output);
    CHECK(a.entries()[i].outcome.status == b.entries()[i].outcome.status);
    CHECK(a.entries()[i].outcome.steps_used == b.entries()[i].outcome.steps_used);
  }
  CHECK(a.accounted_mass() == b.accounted_mass());
  CHECK(a.machine_tag() == "ravenlab-register-machine/1");
}

TEST_CASE("program categories") {
  auto c = classify_program(outcome("G", RunStatus::halted), "GK", kH);
  CHECK(c.decided() == Category::E);
  c = classify_program(outcome("GW", RunStatus::halted), "GK", kH);
  CHECK(c.decided() == Category::B);
  c = classify_program(outcome("GW", RunStatus::running_at_budget), "GK", kH);
  CHECK(c.decided() == Category::B);
  c = classify_program(outcome("GB", RunStatus::proven_silent_loop), "GK", kH);
  CHECK(c.decided() == Category::A);
  c = classify_program(outcome("GKW", RunStatus::running_at_budget), "GK", kH);
  CHECK(c.decided() == Category::D);
  c = classify_program(outcome("GKG", RunStatus::halted), "GK", kH);
  CHECK(c.decided() == Category::C);
  c = classify_program(outcome("K", RunStatus::halted), "GK", kH);
  CHECK(c.decided() == Category::outside);

  // Printed x_{1:t} and still running: stopping at x_{<t} is already excluded.
  c = classify_program(outcome("GK", RunStatus::running_at_budget), "GK", kH);
  CHECK_FALSE(c.decided());
  CategorySet cd;
  cd.insert(Category::C);
  cd.insert(Category::D);
  CHECK(c.possible == cd);

  c = classify_program(outcome("G", RunStatus::running_at_budget), "GK", kH);
  CHECK(c.possible.size() == 5);
  CHECK_FALSE(c.possible.contains(Category::outside));
  c = classify_program(outcome("", RunStatus::running_at_budget), "GK", kH);
  CHECK(c.possible.size() == 6);

  CHECK_THROWS_AS(classify_program(outcome("", RunStatus::halted), "", kH), InputError);
  CHECK_THROWS_AS(classify_program(outcome("WK", RunStatus::halted), "WK", kH), InputError);
  CHECK_THROWS_AS(classify_program(outcome("G", RunStatus::running_at_budget, true), "GK", kH), InputError);
}

TEST_CASE("decided categories carry the decomposition lower bounds") {
  const auto config = fixtures::machine_config(12, 1000);
  const auto census = std::make_shared<const Census>(Census::run(RegisterMachine{}, config));
  const MachinePrior prior(census);
  for (const auto& x : oracle::all_strings("KWBG", 3)) {
    if (x.empty() || !kH.admits(x.substr(0, x.size() - 1))) continue;
    std::map<Category, Rational> decided;
    for (const auto& entry : census->entries()) {
      const auto c = classify_program(entry.outcome, x, kH);
      CHECK_FALSE(c.possible.empty());
      if (auto d = c.decided()) decided[*d] += census->weight(entry);
    }
    const auto d = confirm::decompose(prior, x, kH);
    CHECK(d.a.lo() == decided[Category::A]);
    CHECK(d.b.lo() == decided[Category::B]);
    CHECK(d.c.lo() == decided[Category::C]);
    CHECK(d.d.lo() == decided[Category::D]);
    CHECK(d.e.lo() == decided[Category::E]);
  }
}

TEST_CASE("reference prior construction") {
  CHECK_THROWS_AS(make_reference_prior(ReferencePriorKind::xi, {Rational(7, 100), std::nullopt}), ParameterError);
  CHECK_THROWS_AS(make_reference_prior(ReferencePriorKind::rho, {std::nullopt, std::nullopt}), ParameterError);
  CHECK_THROWS_AS(make_reference_prior(ReferencePriorKind::rho, {Rational(1, 3), std::nullopt}), ParameterError);
  CHECK(make_reference_prior(ReferencePriorKind::lambda_h, {})->is_measure());
  const auto xi = make_reference_prior(ReferencePriorKind::xi, {Rational(7, 100), fixtures::machine_config(9, 100)});
  CHECK(cylinder_mass(*xi, "").hi() <= 1);
}
