#include "qudits/circuit.hpp"

#include "qudits/representations.hpp"

#include <charconv>
#include <sstream>

namespace qudits {

namespace {

struct Token {
  std::string text;
  int col = 0;  // 1-based
};

std::vector<Token> tokenize_line(std::string_view line, int line_no) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' &&
           line[i] != '#')
      ++i;
    tokens.push_back(Token{std::string(line.substr(start, i - start)),
                           static_cast<int>(start) + 1});
  }
  (void)line_no;
  return tokens;
}

int parse_int(const Token& tok, int line_no, const char* what) {
  int value = 0;
  const char* begin = tok.text.data();
  const char* end = begin + tok.text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end)
    throw ParseError({line_no, tok.col},
                     std::string("expected ") + what + ", got '" + tok.text + "'");
  return value;
}

int parse_qudit_index(const Token& tok, int line_no, const std::vector<int>& dims) {
  const int q = parse_int(tok, line_no, "a qudit index");
  if (q < 0 || q >= static_cast<int>(dims.size()))
    throw ParseError({line_no, tok.col},
                     "qudit index " + std::to_string(q) + " out of range (register has " +
                         std::to_string(dims.size()) + " qudits)");
  return q;
}

void require_arity(const std::vector<Token>& tokens, std::size_t count, int line_no,
                   const char* usage) {
  if (tokens.size() != count)
    throw ParseError({line_no, tokens[0].col}, std::string("usage: ") + usage);
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
  Circuit circuit;
  bool have_dims = false;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++line_no;
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;

    const std::vector<Token> tokens = tokenize_line(line, line_no);
    if (tokens.empty()) continue;
    const Token& head = tokens[0];
    const SourceSpan span{line_no, head.col};

    if (head.text == "dims") {
      if (have_dims) throw ParseError(span, "duplicate dims header");
      if (tokens.size() < 2) throw ParseError(span, "usage: dims d1 [d2 ...]");
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        const int d = parse_int(tokens[i], line_no, "a dimension");
        if (d < 2)
          throw ParseError({line_no, tokens[i].col}, "qudit dimension must be at least 2");
        circuit.dims.push_back(d);
      }
      circuit.dims_span = span;
      have_dims = true;
      continue;
    }

    if (!have_dims) throw ParseError(span, "missing dims header before '" + head.text + "'");

    CircuitOp op;
    op.span = span;
    if (head.text == "prep") {
      require_arity(tokens, 3, line_no, "prep <q> <label>");
      op.kind = OpKind::Prep;
      op.q = parse_qudit_index(tokens[1], line_no, circuit.dims);
      op.label = parse_int(tokens[2], line_no, "a basis label");
      if (op.label < 0 || op.label >= circuit.dims[static_cast<std::size_t>(op.q)])
        throw ParseError({line_no, tokens[2].col},
                         "label " + std::to_string(op.label) + " out of range for d=" +
                             std::to_string(circuit.dims[static_cast<std::size_t>(op.q)]));
    } else if (head.text == "x" || head.text == "z") {
      if (tokens.size() != 2 && tokens.size() != 3)
        throw ParseError(span, "usage: " + head.text + " <q> [^k]");
      op.kind = head.text == "x" ? OpKind::GateX : OpKind::GateZ;
      op.q = parse_qudit_index(tokens[1], line_no, circuit.dims);
      op.power = 1;
      if (tokens.size() == 3) {
        const Token& ptok = tokens[2];
        if (ptok.text.empty() || ptok.text[0] != '^')
          throw ParseError({line_no, ptok.col}, "expected ^<int> power, got '" + ptok.text + "'");
        Token exp_tok{ptok.text.substr(1), ptok.col + 1};
        op.power = parse_int(exp_tok, line_no, "a power");
      }
      const int d = circuit.dims[static_cast<std::size_t>(op.q)];
      op.power = ((op.power % d) + d) % d;
    } else if (head.text == "f") {
      if (tokens.size() != 2 && tokens.size() != 3)
        throw ParseError(span, "usage: f <q> [inv]");
      op.kind = OpKind::GateF;
      op.q = parse_qudit_index(tokens[1], line_no, circuit.dims);
      if (tokens.size() == 3) {
        if (tokens[2].text != "inv")
          throw ParseError({line_no, tokens[2].col},
                           "expected 'inv', got '" + tokens[2].text + "'");
        op.inverse = true;
      }
    } else if (head.text == "sum") {
      require_arity(tokens, 3, line_no, "sum <control> <target>");
      op.kind = OpKind::GateSum;
      op.q = parse_qudit_index(tokens[1], line_no, circuit.dims);
      op.q2 = parse_qudit_index(tokens[2], line_no, circuit.dims);
      if (op.q == op.q2) throw ParseError(span, "sum requires distinct qudits");
      if (circuit.dims[static_cast<std::size_t>(op.q)] !=
          circuit.dims[static_cast<std::size_t>(op.q2)])
        throw ParseError(span, "sum requires equal control/target dimensions");
    } else if (head.text == "swap") {
      require_arity(tokens, 2, line_no, "swap <q>");
      op.kind = OpKind::SwapEnc;
      op.q = parse_qudit_index(tokens[1], line_no, circuit.dims);
    } else if (head.text == "measure") {
      require_arity(tokens, 2, line_no, "measure <q>|all");
      op.kind = OpKind::Measure;
      if (tokens[1].text == "all") {
        op.all = true;
      } else {
        op.q = parse_qudit_index(tokens[1], line_no, circuit.dims);
      }
    } else {
      throw ParseError(span, "unknown keyword '" + head.text + "'");
    }
    circuit.ops.push_back(op);
  }

  if (!have_dims) throw ParseError({1, 1}, "missing dims header");

  // prep is only exact on unentangled qudits; sum is the one entangler.
  std::vector<bool> summed(circuit.dims.size(), false);
  for (const CircuitOp& op : circuit.ops) {
    if (op.kind == OpKind::GateSum) {
      summed[static_cast<std::size_t>(op.q)] = true;
      summed[static_cast<std::size_t>(op.q2)] = true;
    } else if (op.kind == OpKind::Prep && summed[static_cast<std::size_t>(op.q)]) {
      throw ParseError(op.span, "prep on qudit " + std::to_string(op.q) +
                                    " after it participated in a sum");
    }
  }
  return circuit;
}

std::string circuit_to_text(const Circuit& circuit) {
  std::ostringstream out;
  out << "dims";
  for (int d : circuit.dims) out << ' ' << d;
  out << '\n';
  for (const CircuitOp& op : circuit.ops) {
    switch (op.kind) {
      case OpKind::Prep:
        out << "prep " << op.q << ' ' << op.label;
        break;
      case OpKind::GateX:
      case OpKind::GateZ:
        out << (op.kind == OpKind::GateX ? "x " : "z ") << op.q;
        if (op.power != 1) out << " ^" << op.power;
        break;
      case OpKind::GateF:
        out << "f " << op.q;
        if (op.inverse) out << " inv";
        break;
      case OpKind::GateSum:
        out << "sum " << op.q << ' ' << op.q2;
        break;
      case OpKind::SwapEnc:
        out << "swap " << op.q;
        break;
      case OpKind::Measure:
        if (op.all)
          out << "measure all";
        else
          out << "measure " << op.q;
        break;
    }
    out << '\n';
  }
  return out.str();
}

ExecutionReport execute_circuit(const Circuit& circuit) {
  Register reg = Register::init(circuit.dims, std::vector<int>(circuit.dims.size(), 0));
  std::vector<MeasureRecord> records;

  auto measure_one = [&](int q) {
    MeasureEntry entry;
    entry.qudit = q;
    entry.basis = reg.qudit(q).tag;
    entry.probabilities = reg.measure_probabilities(q);
    return entry;
  };

  for (const CircuitOp& op : circuit.ops) {
    try {
      switch (op.kind) {
        case OpKind::Prep:
          reg.reset_qudit(op.q, op.label);
          break;
        case OpKind::GateX: {
          const int d = reg.qudit(op.q).d;
          CMatrix shift(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
          for (int s = 0; s < d; ++s)
            shift(static_cast<std::size_t>((s + op.power) % d), static_cast<std::size_t>(s)) = 1.0;
          reg.apply_single(op.q, shift);
          break;
        }
        case OpKind::GateZ: {
          const int d = reg.qudit(op.q).d;
          std::vector<Complex> diag(static_cast<std::size_t>(d));
          for (int s = 0; s < d; ++s)
            diag[static_cast<std::size_t>(s)] = omega(d, static_cast<long long>(op.power) * s);
          reg.apply_single(op.q, CMatrix::diagonal(diag));
          break;
        }
        case OpKind::GateF: {
          const CMatrix f = fourier_matrix(reg.qudit(op.q).d);
          reg.apply_single(op.q, op.inverse ? f.adjoint() : f);
          break;
        }
        case OpKind::GateSum:
          reg.apply_sum(op.q, op.q2);
          break;
        case OpKind::SwapEnc:
          reg.swap_encoding(op.q);
          break;
        case OpKind::Measure: {
          MeasureRecord record;
          record.span = op.span;
          record.all = op.all;
          if (op.all) {
            for (int q = 0; q < reg.num_qudits(); ++q) record.entries.push_back(measure_one(q));
          } else {
            record.entries.push_back(measure_one(op.q));
          }
          records.push_back(std::move(record));
          break;
        }
      }
    } catch (const EncodingError& e) {
      throw ExecError(op.span, e.what());
    } catch (const std::logic_error& e) {
      throw ExecError(op.span, e.what());
    }
  }
  return ExecutionReport{std::move(reg), std::move(records)};
}

}  // namespace qudits
