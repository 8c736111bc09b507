#include "qudits/serialize.hpp"

namespace qudits {

using nlohmann::json;

namespace {

json complex_pair(const Complex& z) { return json::array({z.real(), z.imag()}); }

}  // namespace

json matrix_to_json(const CMatrix& m) {
  json entries = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) entries.push_back(complex_pair(m(r, c)));
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

json realization_to_json(const Realization& r) {
  json basis = json::array();
  for (int s = 0; s < r.d; ++s) {
    const CVector v = r.basis_state(s);
    json column = json::array();
    for (std::size_t i = 0; i < v.dim(); ++i) column.push_back(complex_pair(v[i]));
    basis.push_back(column);
  }
  return json{{"d", r.d},
              {"kind", kind_name(r.kind)},
              {"comp_basis", basis},
              {"X", matrix_to_json(r.X)},
              {"Z", matrix_to_json(r.Z)},
              {"theta", matrix_to_json(r.theta)},
              {"generator", matrix_to_json(r.generator)}};
}

json register_to_json(const Register& reg) {
  json qudits_meta = json::array();
  for (int q = 0; q < reg.num_qudits(); ++q)
    qudits_meta.push_back(
        json{{"d", reg.qudit(q).d}, {"tag", encoding_name(reg.qudit(q).tag)}});
  json state = json::array();
  for (const Complex& z : reg.amplitudes()) state.push_back(complex_pair(z));
  return json{{"qudits", qudits_meta}, {"state", state}};
}

json execution_report_to_json(const ExecutionReport& report) {
  json measures = json::array();
  for (const MeasureRecord& record : report.measurements) {
    json tables = json::array();
    for (const MeasureEntry& entry : record.entries)
      tables.push_back(json{{"qudit", entry.qudit},
                            {"basis", encoding_name(entry.basis)},
                            {"probabilities", entry.probabilities}});
    measures.push_back(json{{"line", record.span.line}, {"tables", tables}});
  }
  return json{{"final_state", register_to_json(report.final_state)},
              {"measurements", measures}};
}

}  // namespace qudits
