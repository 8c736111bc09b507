#pragma once

#include "qudits/simulator.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qudits {

// Line-oriented circuit format (.qc). One statement per line, `#` starts a
// comment, LF or CRLF endings. Grammar:
//
//   dims d1 d2 ...        header, required first
//   prep <q> <label>      basis preparation in q's current encoding
//   x <q> [^k]            clock-shift gate X^k on index labels
//   z <q> [^k]            clock gate Z^k
//   f <q> [inv]           Fourier gate (or its inverse)
//   sum <c> <t>           hybrid SUM, control c, target t
//   swap <q>              encoding swap (Fourier + tag flip)
//   measure <q>|all       probability readout in the tagged basis
//
// Keywords are lowercase ASCII, labels base-10, powers reduced mod d at parse
// time. Diagnostics carry 1-based line and column.

struct SourceSpan {
  int line = 0;
  int col = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(SourceSpan span, const std::string& message)
      : std::runtime_error("line " + std::to_string(span.line) + ", col " +
                           std::to_string(span.col) + ": " + message),
        span_(span) {}
  SourceSpan span() const { return span_; }

 private:
  SourceSpan span_;
};

class ExecError : public std::runtime_error {
 public:
  ExecError(SourceSpan span, const std::string& message)
      : std::runtime_error("line " + std::to_string(span.line) + ": " + message),
        span_(span) {}
  SourceSpan span() const { return span_; }

 private:
  SourceSpan span_;
};

enum class OpKind { Prep, GateX, GateZ, GateF, GateSum, SwapEnc, Measure };

struct CircuitOp {
  OpKind kind = OpKind::Prep;
  int q = -1;
  int q2 = -1;         // GateSum target
  int power = 1;       // GateX/GateZ, already reduced mod d
  int label = 0;       // Prep
  bool inverse = false;  // GateF
  bool all = false;      // Measure
  SourceSpan span;
};

struct Circuit {
  std::vector<int> dims;
  std::vector<CircuitOp> ops;
  SourceSpan dims_span;
};

Circuit parse_circuit(std::string_view text);

// Canonical text form; parse(circuit_to_text(parse(s))) is a fixed point.
std::string circuit_to_text(const Circuit& circuit);

struct MeasureEntry {
  int qudit = 0;
  Encoding basis = Encoding::Number;
  std::vector<double> probabilities;
};

struct MeasureRecord {
  SourceSpan span;
  bool all = false;
  std::vector<MeasureEntry> entries;
};

struct ExecutionReport {
  Register final_state;
  std::vector<MeasureRecord> measurements;
};

ExecutionReport execute_circuit(const Circuit& circuit);

}  // namespace qudits
