// Serialization of suite and search results: a JSON report with the full
// record list and per-cell summary, and flat CSV tables with full double
// precision (17 significant digits).  The JSON library stays an
// implementation detail; this interface trades in strings and streams.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mazurlab/search.hpp"
#include "mazurlab/suite.hpp"

namespace mazurlab {

// {"config": ..., "records": [...], "summary": {"cells": [...],
//  "failures": n, "errors": n, "skipped": n, "max_ratios": {...}}}.
// Non-finite numbers serialize as null.  indent < 0 gives compact output.
std::string suite_report_json(const SuiteResult& result, int indent = 2);

// {"params": ..., "best_ratio": r, "proposals": n, "history": [...],
//  "best_x": ..., "best_y": ...}.
std::string search_report_json(const SearchResult& result, int indent = 2);

// One row per record:
// lemma,status,dim,trial,seed,p,q,theta,alpha,lhs,rhs,constant,ratio
void write_records_csv(std::ostream& os, const std::vector<CheckRecord>& records);

// One row per cell:
// index,lemma,dim,p,q,theta,alpha,trials,failures,skipped,errors,
// max_ratio,worst_seed,worst_lhs,worst_rhs
void write_summary_csv(std::ostream& os, const SuiteSummary& summary);

// One row per sweep point: p,q,best_ratio,seed,iters
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

}  // namespace mazurlab
