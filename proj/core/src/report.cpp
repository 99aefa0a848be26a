// JSON and CSV result serialization.
#include "mazurlab/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "json.hpp"

namespace mazurlab {

namespace {

using nlohmann::json;

json number_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

json config_to_json(const SuiteConfig& config) {
  json lemmas = json::array();
  for (Lemma l : config.effective_lemmas()) lemmas.push_back(lemma_name(l));
  return json{{"lemmas", lemmas},
              {"grids",
               {{"dims", config.grids.dims},
                {"thetas", config.grids.thetas},
                {"ps", config.grids.ps},
                {"qs", config.grids.qs},
                {"alphas", config.grids.alphas}}},
              {"trials", config.trials},
              {"seed", config.seed},
              {"cap", config.cap},
              {"threads", config.threads}};
}

json record_to_json(const CheckRecord& rec) {
  json j{{"lemma", lemma_name(rec.lemma)},
         {"status", status_name(rec.status)},
         {"dim", rec.dim},
         {"trial", rec.trial},
         {"seed", rec.seed},
         {"p", number_or_null(rec.p)},
         {"q", number_or_null(rec.q)},
         {"theta", number_or_null(rec.theta)},
         {"alpha", number_or_null(rec.alpha)},
         {"lhs", number_or_null(rec.lhs)},
         {"rhs", number_or_null(rec.rhs_structural)},
         {"constant", number_or_null(rec.constant)},
         {"ratio", number_or_null(rec.ratio)}};
  if (!rec.note.empty()) j["note"] = rec.note;
  return j;
}

json cell_to_json(const CellSummary& s) {
  return json{{"index", s.index},
              {"lemma", lemma_name(s.params.lemma)},
              {"dim", s.params.dim},
              {"p", number_or_null(s.params.p)},
              {"q", number_or_null(s.params.q)},
              {"theta", number_or_null(s.params.theta)},
              {"alpha", number_or_null(s.params.alpha)},
              {"trials", s.trials},
              {"failures", s.failures},
              {"skipped", s.skipped},
              {"errors", s.errors},
              {"max_ratio", number_or_null(s.max_ratio)},
              {"worst_seed", s.worst_seed},
              {"worst_lhs", number_or_null(s.worst_lhs)},
              {"worst_rhs", number_or_null(s.worst_rhs)}};
}

json element_to_json(const Element& x) {
  json shape = json::array();
  for (const AlgebraBlock& b : x.shape.blocks)
    shape.push_back(json{{"dim", b.dim}, {"weight", b.weight}});
  json blocks = json::array();
  for (const Mat& m : x.blocks) {
    json rows = json::array();
    for (int i = 0; i < m.n; ++i) {
      json row = json::array();
      for (int j = 0; j < m.n; ++j)
        row.push_back(json::array({m.at(i, j).real(), m.at(i, j).imag()}));
      rows.push_back(row);
    }
    blocks.push_back(rows);
  }
  return json{{"shape", shape}, {"blocks", blocks}};
}

std::string dump(const json& j, int indent) {
  return indent < 0 ? j.dump() : j.dump(indent);
}

// Full-precision double for CSV; non-finite values print as nan/inf.
std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string suite_report_json(const SuiteResult& result, int indent) {
  json records = json::array();
  for (const CheckRecord& rec : result.records) records.push_back(record_to_json(rec));
  json cells = json::array();
  for (const CellSummary& s : result.summary.cells) cells.push_back(cell_to_json(s));
  json max_ratios = json::object();
  for (const auto& [lemma, ratio] : result.summary.max_ratios)
    max_ratios[lemma_name(lemma)] = number_or_null(ratio);
  json j{{"config", config_to_json(result.config)},
         {"records", records},
         {"summary",
          {{"cells", cells},
           {"failures", result.summary.failures},
           {"errors", result.summary.errors},
           {"skipped", result.summary.skipped},
           {"max_ratios", max_ratios}}}};
  return dump(j, indent);
}

std::string search_report_json(const SearchResult& result, int indent) {
  json history = json::array();
  for (const SearchHistoryEntry& h : result.history)
    history.push_back(json{{"restart", h.restart},
                           {"iteration", h.iteration},
                           {"ratio", number_or_null(h.ratio)}});
  json j{{"params",
          {{"p", result.params.p},
           {"q", result.params.q},
           {"dim", result.params.dim},
           {"mode", search_mode_name(result.params.mode)},
           {"restarts", result.params.restarts},
           {"iterations", result.params.iterations},
           {"initial_step", result.params.step0()},
           {"seed", result.params.seed}}},
         {"best_ratio", number_or_null(result.best_ratio)},
         {"proposals", result.proposals},
         {"history", history},
         {"best_x", element_to_json(result.best_x)},
         {"best_y", element_to_json(result.best_y)}};
  return dump(j, indent);
}

void write_records_csv(std::ostream& os, const std::vector<CheckRecord>& records) {
  os << "lemma,status,dim,trial,seed,p,q,theta,alpha,lhs,rhs,constant,ratio\n";
  for (const CheckRecord& r : records) {
    os << lemma_name(r.lemma) << ',' << status_name(r.status) << ',' << r.dim << ','
       << r.trial << ',' << r.seed << ',' << g17(r.p) << ',' << g17(r.q) << ','
       << g17(r.theta) << ',' << g17(r.alpha) << ',' << g17(r.lhs) << ','
       << g17(r.rhs_structural) << ',' << g17(r.constant) << ',' << g17(r.ratio)
       << '\n';
  }
}

void write_summary_csv(std::ostream& os, const SuiteSummary& summary) {
  os << "index,lemma,dim,p,q,theta,alpha,trials,failures,skipped,errors,"
        "max_ratio,worst_seed,worst_lhs,worst_rhs\n";
  for (const CellSummary& s : summary.cells) {
    os << s.index << ',' << lemma_name(s.params.lemma) << ',' << s.params.dim << ','
       << g17(s.params.p) << ',' << g17(s.params.q) << ',' << g17(s.params.theta)
       << ',' << g17(s.params.alpha) << ',' << s.trials << ',' << s.failures << ','
       << s.skipped << ',' << s.errors << ',' << g17(s.max_ratio) << ','
       << s.worst_seed << ',' << g17(s.worst_lhs) << ',' << g17(s.worst_rhs) << '\n';
  }
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "p,q,best_ratio,seed,iters\n";
  for (const SweepRow& r : rows) {
    os << g17(r.p) << ',' << g17(r.q) << ',' << g17(r.best_ratio) << ',' << r.seed
       << ',' << r.iters << '\n';
  }
}

}  // namespace mazurlab
