// Command-line front end: verification sweeps, circuit execution, Pauli
// multiplication tables, and the number-phase commutator study.
//
// Exit codes: 0 success, 1 verification/runtime failure, 2 usage/config/parse
// error. Machine-readable outputs are deterministic for a fixed seed.

#include "qudits/circuit.hpp"
#include "qudits/diagnostics.hpp"
#include "qudits/pauli.hpp"
#include "qudits/serialize.hpp"
#include "qudits/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct OutputTarget {
  std::string format = "text";  // text | json | csv
  std::string path;             // required for json/csv
};

// text goes to stdout (or --out when given); json/csv always go to a file.
int emit(const OutputTarget& target, const std::string& payload) {
  if (target.format != "text" && target.path.empty()) {
    std::cerr << "error: --format " << target.format << " requires --out <path>\n";
    return kExitUsage;
  }
  if (target.path.empty()) {
    std::cout << payload;
    return kExitOk;
  }
  std::ofstream out(target.path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file " << target.path << "\n";
    return kExitUsage;
  }
  out << payload;
  return kExitOk;
}

std::string format_residual(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

int cmd_verify(const qudits::VerifyOptions& options, const OutputTarget& target,
               const std::string& dump_path) {
  std::vector<qudits::InvariantResult> rows;
  try {
    rows = qudits::run_verification(options);
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  }
  const std::vector<qudits::InvariantResult> summary = qudits::summarize(rows);
  const bool ok = qudits::all_passed(rows);

  if (!dump_path.empty()) {
    json dump = json::array();
    for (int d = options.d_min; d <= options.d_max; ++d)
      for (const auto kind :
           {qudits::RealizationKind::SpinNumber, qudits::RealizationKind::OscNumber,
            qudits::RealizationKind::SpinPhase, qudits::RealizationKind::OscPhase})
        dump.push_back(qudits::realization_to_json(qudits::build_realization(kind, d)));
    std::ofstream out(dump_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open dump file " << dump_path << "\n";
      return kExitUsage;
    }
    out << dump.dump(1) << "\n";
  }

  std::string payload;
  if (target.format == "json") {
    json doc;
    doc["config"] = json{{"dmin", options.d_min},
                         {"dmax", options.d_max},
                         {"tol_unit", options.tol_unit},
                         {"tol_action", options.tol_action},
                         {"seed", options.seed}};
    json jrows = json::array();
    for (const auto& row : rows)
      jrows.push_back(json{{"invariant", row.name},
                           {"scope", row.scope},
                           {"residual", row.residual},
                           {"tolerance", row.tolerance},
                           {"pass", row.pass}});
    doc["checks"] = jrows;
    doc["pass"] = ok;
    payload = doc.dump(1) + "\n";
  } else if (target.format == "csv") {
    std::ostringstream out;
    out << "invariant,scope,residual,tolerance,pass\n";
    for (const auto& row : rows) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17g,%.17g", row.residual, row.tolerance);
      out << row.name << ",\"" << row.scope << "\"," << buf << ','
          << (row.pass ? "true" : "false") << '\n';
    }
    payload = out.str();
  } else {
    std::ostringstream out;
    out << "verify sweep d=" << options.d_min << ".." << options.d_max
        << " seed=" << options.seed << "\n";
    for (const auto& row : summary)
      out << "  " << (row.pass ? "PASS" : "FAIL") << "  " << row.name << "  worst "
          << format_residual(row.residual) << " (" << row.scope << "), tol "
          << format_residual(row.tolerance) << "\n";
    std::size_t failures = 0;
    for (const auto& row : rows)
      if (!row.pass) ++failures;
    out << "result: " << (ok ? "PASS" : "FAIL") << " (" << rows.size() << " checks, "
        << failures << " failures)\n";
    payload = out.str();
  }

  const int emit_rc = emit(target, payload);
  if (emit_rc != kExitOk) return emit_rc;
  return ok ? kExitOk : kExitFailure;
}

int cmd_run(const std::string& path, const OutputTarget& target) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read circuit file " << path << "\n";
    return kExitUsage;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();

  qudits::Circuit circuit;
  try {
    circuit = qudits::parse_circuit(buffer.str());
  } catch (const qudits::ParseError& e) {
    std::cerr << path << ":" << e.what() << "\n";
    return kExitUsage;
  }

  std::optional<qudits::ExecutionReport> report;
  try {
    report.emplace(qudits::execute_circuit(circuit));
  } catch (const qudits::ExecError& e) {
    std::cerr << path << ":" << e.what() << "\n";
    return kExitFailure;
  }

  std::string payload;
  if (target.format == "json") {
    payload = qudits::execution_report_to_json(*report).dump(1) + "\n";
  } else if (target.format == "csv") {
    std::ostringstream out;
    out << "measure_line,qudit,basis,label,probability\n";
    for (const auto& record : report->measurements)
      for (const auto& entry : record.entries)
        for (std::size_t label = 0; label < entry.probabilities.size(); ++label) {
          char buf[32];
          std::snprintf(buf, sizeof buf, "%.17g", entry.probabilities[label]);
          out << record.span.line << ',' << entry.qudit << ','
              << qudits::encoding_name(entry.basis) << ',' << label << ',' << buf << '\n';
        }
    payload = out.str();
  } else {
    std::ostringstream out;
    const qudits::Register& reg = report->final_state;
    out << "register:";
    for (int q = 0; q < reg.num_qudits(); ++q)
      out << " q" << q << "(d=" << reg.qudit(q).d << "," << qudits::encoding_name(reg.qudit(q).tag)
          << ")";
    out << "\nfinal state amplitudes (index basis, entries below 1e-12 omitted):\n";
    for (std::size_t i = 0; i < reg.amplitudes().size(); ++i) {
      const qudits::Complex& z = reg.amplitudes()[i];
      if (std::abs(z) < 1e-12) continue;
      char buf[64];
      std::snprintf(buf, sizeof buf, "%+.9f%+.9fi", z.real(), z.imag());
      out << "  [" << i << "] " << buf << "\n";
    }
    for (const auto& record : report->measurements) {
      for (const auto& entry : record.entries) {
        out << "measure (line " << record.span.line << ") qudit " << entry.qudit << " ["
            << qudits::encoding_name(entry.basis) << " basis]:";
        for (std::size_t label = 0; label < entry.probabilities.size(); ++label) {
          char buf[32];
          std::snprintf(buf, sizeof buf, " p(%zu)=%.6f", label, entry.probabilities[label]);
          out << buf;
        }
        out << "\n";
      }
    }
    payload = out.str();
  }
  return emit(target, payload);
}

int cmd_table(int d, const OutputTarget& target) {
  if (d < 2 || d > 7) {
    std::cerr << "config error: table supports 2 <= d <= 7 (the table has d^2 rows)\n";
    return kExitUsage;
  }
  std::vector<qudits::PauliElement> elements;
  for (int k = 0; k < d * d; ++k) elements.push_back(qudits::make_pauli(d, 0, k % d, k / d));

  std::vector<std::string> labels;
  for (const auto& p : elements) labels.push_back(qudits::format_pauli(p));

  std::vector<std::vector<std::string>> table(elements.size());
  for (std::size_t r = 0; r < elements.size(); ++r)
    for (std::size_t c = 0; c < elements.size(); ++c)
      table[r].push_back(qudits::format_pauli(qudits::multiply(elements[r], elements[c])));

  std::string payload;
  if (target.format == "json") {
    json doc{{"d", d}, {"elements", labels}, {"table", table}};
    payload = doc.dump(1) + "\n";
  } else if (target.format == "csv") {
    std::ostringstream out;
    out << "*";
    for (const auto& l : labels) out << ',' << l;
    out << '\n';
    for (std::size_t r = 0; r < table.size(); ++r) {
      out << labels[r];
      for (const auto& cell : table[r]) out << ',' << cell;
      out << '\n';
    }
    payload = out.str();
  } else {
    std::size_t width = 1;
    for (const auto& l : labels) width = std::max(width, l.size());
    for (const auto& row : table)
      for (const auto& cell : row) width = std::max(width, cell.size());
    std::ostringstream out;
    auto pad = [&](const std::string& s) {
      out << s << std::string(width + 2 - s.size(), ' ');
    };
    out << "Pauli group multiplication table, d=" << d << " (row * column)\n";
    pad("*");
    for (const auto& l : labels) pad(l);
    out << '\n';
    for (std::size_t r = 0; r < table.size(); ++r) {
      pad(labels[r]);
      for (const auto& cell : table[r]) pad(cell);
      out << '\n';
    }
    payload = out.str();
  }
  return emit(target, payload);
}

int cmd_limit(const std::vector<int>& d_list, int window, const OutputTarget& target) {
  std::vector<qudits::LimitRow> rows;
  try {
    rows = qudits::limit_study(d_list, window);
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::string payload;
  if (target.format == "json")
    payload = qudits::limit_report_json(rows);
  else
    payload = qudits::limit_report_csv(rows);  // the CSV doubles as the text report
  return emit(target, payload);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized Pauli group constructions for qudits: verification, "
               "simulation, group tables, and the number-phase commutator study"};
  app.require_subcommand(1);
  app.set_config("--config")->envname("QUDITS_CONFIG");

  qudits::VerifyOptions verify_options;
  OutputTarget target;

  app.add_option("--dmin", verify_options.d_min, "smallest dimension in sweeps")
      ->envname("QUDITS_DMIN");
  app.add_option("--dmax", verify_options.d_max, "largest dimension in sweeps")
      ->envname("QUDITS_DMAX");
  app.add_option("--format", target.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->envname("QUDITS_FORMAT");
  app.add_option("--out", target.path, "output path (required for json/csv)")
      ->envname("QUDITS_OUT");
  app.add_option("--seed", verify_options.seed, "seed for randomized property checks")
      ->envname("QUDITS_SEED");
  app.add_option("--tol-unit", verify_options.tol_unit, "unitarity residual tolerance")
      ->envname("QUDITS_TOL_UNIT");
  app.add_option("--tol-action", verify_options.tol_action, "basis-action residual tolerance")
      ->envname("QUDITS_TOL_ACTION");

  CLI::App* verify = app.add_subcommand("verify", "run the invariant sweep");
  verify->fallthrough();
  std::string dump_path;
  verify->add_option("--dump", dump_path, "write realization matrices as JSON");
  verify->add_flag("--inject-perturbation", verify_options.inject_perturbation,
                   "test hook: corrupt one operator entry by 1e-6");

  CLI::App* run = app.add_subcommand("run", "parse and execute a .qc circuit");
  run->fallthrough();
  std::string circuit_path;
  run->add_option("circuit", circuit_path, "circuit file")->required();

  CLI::App* table = app.add_subcommand("table", "print the Pauli multiplication table");
  table->fallthrough();
  int table_d = 2;
  table->add_option("--d", table_d, "dimension (2..7)")->required();

  CLI::App* limit = app.add_subcommand("limit", "number-phase commutator study across d");
  limit->fallthrough();
  std::vector<int> d_list;
  int window = 4;
  limit->add_option("--dlist", d_list, "dimensions, comma separated")
      ->delimiter(',')
      ->required();
  limit->add_option("--K", window, "Fock window size (K < min d)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(verify_options, target, dump_path);
    if (run->parsed()) return cmd_run(circuit_path, target);
    if (table->parsed()) return cmd_table(table_d, target);
    if (limit->parsed()) return cmd_limit(d_list, window, target);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
