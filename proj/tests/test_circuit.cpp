#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qudits/circuit.hpp"

#include <string>
#include <vector>

using namespace qudits;

namespace {

const char* kDemoSource =
    "dims 3 3\n"
    "prep 0 1\n"
    "prep 1 1\n"
    "swap 1\n"
    "sum 0 1\n"
    "measure all\n";

int parse_error_line(const std::string& source) {
  try {
    (void)parse_circuit(source);
  } catch (const ParseError& e) {
    return e.span().line;
  }
  return -1;
}

}  // namespace

TEST_CASE("demo circuit parses into six ops") {
  const Circuit c = parse_circuit(kDemoSource);
  REQUIRE(c.dims == std::vector<int>{3, 3});
  REQUIRE(c.ops.size() == 5);  // dims is the header, then 5 statements
  CHECK(c.ops[0].kind == OpKind::Prep);
  CHECK(c.ops[1].kind == OpKind::Prep);
  CHECK(c.ops[2].kind == OpKind::SwapEnc);
  CHECK(c.ops[3].kind == OpKind::GateSum);
  CHECK(c.ops[3].q == 0);
  CHECK(c.ops[3].q2 == 1);
  CHECK(c.ops[4].kind == OpKind::Measure);
  CHECK(c.ops[4].all);
}

TEST_CASE("powers reduce mod d at parse time") {
  const Circuit c = parse_circuit("dims 2\nx 0 ^3\nz 0 ^-1\n");
  CHECK(c.ops[0].power == 1);
  CHECK(c.ops[1].power == 1);
}

TEST_CASE("parse diagnostics carry the offending line") {
  CHECK(parse_error_line("dims 3\nsum 0 0\n") == 2);
  CHECK_THROWS_WITH_AS((void)parse_circuit("dims 3 3\nsum 1 1\n"),
                       doctest::Contains("distinct"), ParseError);
  CHECK(parse_error_line("dims 2\nhadamard 0\n") == 2);          // unknown keyword
  CHECK(parse_error_line("x 0\n") == 1);                         // missing dims
  CHECK(parse_error_line("") == 1);                              // empty file
  CHECK(parse_error_line("dims 2 2\nx 5\n") == 2);               // index out of range
  CHECK(parse_error_line("dims 2\nprep 0 3\n") == 2);            // label out of range
  CHECK(parse_error_line("dims 2\n# c\n\nx 0 ^z\n") == 4);       // bad power
  CHECK(parse_error_line("dims 1\n") == 1);                      // dimension too small
  CHECK(parse_error_line("dims 2\ndims 2\n") == 2);              // duplicate header
  CHECK(parse_error_line("dims 2 2\nmeasure some\n") == 2);      // bad measure target
  CHECK(parse_error_line("dims 2 2\nf 0 back\n") == 2);          // bad f modifier
  CHECK(parse_error_line("dims 2 3\nsum 0 1\n") == 2);           // unequal dims
}

TEST_CASE("parse is whitespace and comment tolerant, CRLF included") {
  const Circuit c = parse_circuit("# header comment\r\ndims 4  # two qudits? no, one\r\n"
                                  "  x 0 ^2   # shift twice\r\n\r\nmeasure 0\r\n");
  CHECK(c.dims == std::vector<int>{4});
  REQUIRE(c.ops.size() == 2);
  CHECK(c.ops[0].power == 2);
}

TEST_CASE("prep after sum on the same qudit is rejected") {
  CHECK_THROWS_WITH_AS((void)parse_circuit("dims 2 2\nswap 1\nsum 0 1\nprep 0 1\n"),
                       doctest::Contains("sum"), ParseError);
  // prep after a sum on other qudits is fine
  CHECK_NOTHROW((void)parse_circuit("dims 2 2 2\nswap 1\nsum 0 1\nprep 2 1\n"));
}

TEST_CASE("pretty-print round trip is a fixed point") {
  const std::vector<std::string> sources = {
      kDemoSource,
      "dims 2\nx 0 ^3\nz 0\nf 0\nf 0 inv\nmeasure 0\n",
      "# only a header\ndims 5 2\nprep 1 1\nswap 0\nmeasure all\n",
  };
  for (const std::string& source : sources) {
    const Circuit first = parse_circuit(source);
    const std::string printed = circuit_to_text(first);
    const Circuit second = parse_circuit(printed);
    CHECK(circuit_to_text(second) == printed);
    REQUIRE(second.ops.size() == first.ops.size());
    for (std::size_t i = 0; i < first.ops.size(); ++i) {
      CHECK(second.ops[i].kind == first.ops[i].kind);
      CHECK(second.ops[i].q == first.ops[i].q);
      CHECK(second.ops[i].power == first.ops[i].power);
    }
  }
}

TEST_CASE("executing the demo circuit lands on target phase label 2") {
  const ExecutionReport report = execute_circuit(parse_circuit(kDemoSource));
  REQUIRE(report.measurements.size() == 1);
  const MeasureRecord& record = report.measurements[0];
  REQUIRE(record.entries.size() == 2);
  CHECK(record.entries[0].basis == Encoding::Number);
  CHECK(record.entries[0].probabilities[1] == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(record.entries[1].basis == Encoding::Phase);
  CHECK(record.entries[1].probabilities[2] == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("empty op list reports the initial all-zero state") {
  const ExecutionReport report = execute_circuit(parse_circuit("dims 3 2\n"));
  CHECK(report.measurements.empty());
  CHECK(report.final_state.amplitudes()[0] == Complex{1.0, 0.0});
  CHECK(std::abs(report.final_state.norm() - 1.0) < 1e-12);
}

TEST_CASE("f then f inv restores the fresh register") {
  const ExecutionReport report = execute_circuit(parse_circuit("dims 4\nf 0\nf 0 inv\n"));
  const ExecutionReport fresh = execute_circuit(parse_circuit("dims 4\n"));
  double worst = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    worst = std::max(worst, std::abs(report.final_state.amplitudes()[i] -
                                     fresh.final_state.amplitudes()[i]));
  CHECK(worst < 1e-12);
}

TEST_CASE("encoding violations surface as ExecError with the source line") {
  try {
    (void)execute_circuit(parse_circuit("dims 2 2\nprep 0 1\nsum 0 1\n"));
    FAIL("expected ExecError");
  } catch (const ExecError& e) {
    CHECK(e.span().line == 3);
    CHECK(std::string(e.what()).find("swap_encoding") != std::string::npos);
  }
}

TEST_CASE("prep honors the current encoding tag") {
  // after swap, prep places a phase-basis label: measuring in the phase basis
  // shows the indicator, measuring in number basis is uniform
  const ExecutionReport report =
      execute_circuit(parse_circuit("dims 3\nswap 0\nprep 0 2\nmeasure 0\n"));
  const MeasureEntry& entry = report.measurements[0].entries[0];
  CHECK(entry.basis == Encoding::Phase);
  CHECK(entry.probabilities[2] == doctest::Approx(1.0).epsilon(1e-12));
}
