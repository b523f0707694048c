#include "nroots/nroots.h"

#include <cstring>
#include <new>
#include <string>

#include "nroots/report.hpp"

struct nr_config {
  nroots::RunOptions options;
};

struct nr_case {
  nroots::NeumannCase value;
};

struct nr_check {
  nroots::CheckResult result;
  nroots::RunOptions options;
};

struct nr_table {
  nroots::VerdictTable table;
  nroots::RunOptions options;
};

struct nr_witness {
  nroots::WitnessReport report;
  nroots::RunOptions options;
};

struct nr_oracle {
  nroots::OracleSweep sweep;
  nroots::RunOptions options;
};

namespace {

thread_local std::string last_error;

nr_status status_of(nroots::ErrorCode code) {
  using nroots::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return NR_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse: return NR_ERR_PARSE;
    case ErrorCode::MalformedName: return NR_ERR_MALFORMED_NAME;
    case ErrorCode::PlacementMismatch: return NR_ERR_PLACEMENT_MISMATCH;
    case ErrorCode::EndpointIsRoot: return NR_ERR_ENDPOINT_IS_ROOT;
    case ErrorCode::ConstraintViolated: return NR_ERR_CONSTRAINT_VIOLATED;
    case ErrorCode::NonPositiveGap: return NR_ERR_NON_POSITIVE_GAP;
    case ErrorCode::NonPositiveLift: return NR_ERR_NON_POSITIVE_LIFT;
    case ErrorCode::NoMixedRow: return NR_ERR_NO_MIXED_ROW;
    case ErrorCode::SizeCap: return NR_ERR_SIZE_CAP;
    case ErrorCode::Io: return NR_ERR_IO;
    case ErrorCode::Internal: return NR_ERR_INTERNAL;
  }
  return NR_ERR_INTERNAL;
}

/// Runs f, translating exceptions into a status and the thread-local message.
template <class F>
nr_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return NR_OK;
  } catch (const nroots::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return NR_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return NR_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return NR_ERR_INTERNAL;
  }
}

nr_status null_argument(const char* what) {
  last_error = std::string("null argument: ") + what;
  return NR_ERR_NULL_ARGUMENT;
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

nroots::OutputFormat format_of(nr_format f) {
  switch (f) {
    case NR_FORMAT_TEXT: return nroots::OutputFormat::Text;
    case NR_FORMAT_CSV: return nroots::OutputFormat::Csv;
    case NR_FORMAT_JSON: return nroots::OutputFormat::Json;
  }
  throw nroots::Error(nroots::ErrorCode::InvalidArgument, "unknown output format");
}

nr_verdict verdict_of(nroots::Verdict::Kind k) {
  switch (k) {
    case nroots::Verdict::Kind::Feasible: return NR_FEASIBLE;
    case nroots::Verdict::Kind::Infeasible: return NR_INFEASIBLE;
    case nroots::Verdict::Kind::Indeterminate: return NR_INDETERMINATE;
  }
  return NR_INDETERMINATE;
}

const nroots::RunOptions& options_of(const nr_config* cfg) {
  static const nroots::RunOptions defaults;
  return cfg ? cfg->options : defaults;
}

}  // namespace

extern "C" {

const char* nr_version(void) { return "0.1.0"; }

const char* nr_status_name(nr_status status) {
  switch (status) {
    case NR_OK: return "ok";
    case NR_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case NR_ERR_PARSE: return "parse";
    case NR_ERR_MALFORMED_NAME: return "malformed_name";
    case NR_ERR_PLACEMENT_MISMATCH: return "placement_mismatch";
    case NR_ERR_ENDPOINT_IS_ROOT: return "endpoint_is_root";
    case NR_ERR_CONSTRAINT_VIOLATED: return "constraint_violated";
    case NR_ERR_NON_POSITIVE_GAP: return "non_positive_gap";
    case NR_ERR_NON_POSITIVE_LIFT: return "non_positive_lift";
    case NR_ERR_NO_MIXED_ROW: return "no_mixed_row";
    case NR_ERR_SIZE_CAP: return "size_cap";
    case NR_ERR_IO: return "io";
    case NR_ERR_INTERNAL: return "internal";
    case NR_ERR_NULL_ARGUMENT: return "null_argument";
  }
  return "unknown";
}

const char* nr_last_error(void) { return last_error.c_str(); }

void nr_string_free(char* s) { std::free(s); }

// config ---------------------------------------------------------------------

nr_status nr_config_create(nr_config** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] { *out = new nr_config{}; });
}

void nr_config_destroy(nr_config* cfg) { delete cfg; }

nr_status nr_config_set_seed(nr_config* cfg, uint64_t seed) {
  if (!cfg) return null_argument("cfg");
  cfg->options.seed = seed;
  return NR_OK;
}

nr_status nr_config_set_samples(nr_config* cfg, size_t samples) {
  if (!cfg) return null_argument("cfg");
  if (samples == 0) {
    last_error = "samples must be at least 1";
    return NR_ERR_INVALID_ARGUMENT;
  }
  cfg->options.samples = samples;
  return NR_OK;
}

nr_status nr_config_set_polya_max(nr_config* cfg, unsigned polya_max) {
  if (!cfg) return null_argument("cfg");
  cfg->options.polya_max = polya_max;
  return NR_OK;
}

nr_status nr_config_set_pivot(nr_config* cfg, nr_pivot pivot) {
  if (!cfg) return null_argument("cfg");
  if (pivot != NR_PIVOT_FIRST && pivot != NR_PIVOT_MINPQ) {
    last_error = "unknown pivot policy";
    return NR_ERR_INVALID_ARGUMENT;
  }
  cfg->options.pivot = pivot == NR_PIVOT_FIRST ? nroots::PivotPolicy::FirstMixed : nroots::PivotPolicy::MinProduct;
  return NR_OK;
}

nr_status nr_config_set_force(nr_config* cfg, int force) {
  if (!cfg) return null_argument("cfg");
  cfg->options.force = force != 0;
  return NR_OK;
}

nr_status nr_config_set_n_cap(nr_config* cfg, unsigned cap) {
  if (!cfg) return null_argument("cfg");
  cfg->options.n_cap = cap;
  return NR_OK;
}

// cases ----------------------------------------------------------------------

nr_status nr_case_parse(const char* name, nr_case** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  if (!name) return null_argument("name");
  return guarded([&] { *out = new nr_case{nroots::parse_case_name(name)}; });
}

nr_status nr_case_from_parts(unsigned n, const unsigned* subset, size_t subset_len, const unsigned* placement,
                             size_t placement_len, nr_case** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  if (!subset && subset_len) return null_argument("subset");
  if (!placement && placement_len) return null_argument("placement");
  return guarded([&] {
    std::vector<unsigned> s(subset, subset + subset_len);
    std::vector<unsigned> p(placement, placement + placement_len);
    *out = new nr_case{nroots::make_case(n, std::move(s), std::move(p))};
  });
}

nr_status nr_case_name(const nr_case* c, char** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  if (!c) return null_argument("case");
  return guarded([&] { *out = duplicate(c->value.name()); });
}

nr_status nr_case_n(const nr_case* c, unsigned* out) {
  if (!c) return null_argument("case");
  if (!out) return null_argument("out");
  *out = c->value.n();
  return NR_OK;
}

void nr_case_destroy(nr_case* c) { delete c; }

// check ----------------------------------------------------------------------

nr_status nr_check_run(const nr_config* cfg, const nr_case* c, nr_check** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  if (!c) return null_argument("case");
  return guarded([&] {
    const auto& opts = options_of(cfg);
    *out = new nr_check{nroots::run_check(c->value, opts), opts};
  });
}

nr_status nr_check_verdict(const nr_check* r, nr_verdict* out) {
  if (!r) return null_argument("check");
  if (!out) return null_argument("out");
  *out = verdict_of(r->result.decision.verdict.kind);
  return NR_OK;
}

nr_status nr_check_level(const nr_check* r, size_t* out) {
  if (!r) return null_argument("check");
  if (!out) return null_argument("out");
  *out = r->result.decision.verdict.level;
  return NR_OK;
}

nr_status nr_check_pf(const nr_check* r, int* out) {
  if (!r) return null_argument("check");
  if (!out) return null_argument("out");
  *out = r->result.pf ? 1 : 0;
  return NR_OK;
}

nr_status nr_check_render(const nr_check* r, nr_format format, int trace, char** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  if (!r) return null_argument("check");
  return guarded([&] { *out = duplicate(nroots::render_check(r->result, format_of(format), trace != 0, r->options)); });
}

void nr_check_destroy(nr_check* r) { delete r; }

// table ----------------------------------------------------------------------

nr_status nr_table_run(const nr_config* cfg, unsigned n, nr_table** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    const auto& opts = options_of(cfg);
    *out = new nr_table{nroots::run_table(n, opts), opts};
  });
}

nr_status nr_table_size(const nr_table* t, size_t* out) {
  if (!t) return null_argument("table");
  if (!out) return null_argument("out");
  *out = t->table.rows.size();
  return NR_OK;
}

nr_status nr_table_row(const nr_table* t, size_t index, char** name, nr_verdict* verdict) {
  if (!t) return null_argument("table");
  if (index >= t->table.rows.size()) {
    last_error = "row index out of range";
    return NR_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    const auto& row = t->table.rows[index];
    if (verdict) *verdict = verdict_of(row.verdict);
    if (name) *name = duplicate(row.name);
  });
}

nr_status nr_table_render(const nr_table* t, nr_format format, char** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  if (!t) return null_argument("table");
  return guarded([&] { *out = duplicate(nroots::render_table(t->table, format_of(format), t->options)); });
}

nr_status nr_table_compare_golden(const nr_table* t, const char* path, int* ok, char** report) {
  if (!t) return null_argument("table");
  if (!path) return null_argument("path");
  if (!ok) return null_argument("ok");
  if (report) *report = nullptr;
  return guarded([&] {
    const auto cmp = nroots::compare_golden(t->table, nroots::load_golden(path));
    *ok = cmp.ok() ? 1 : 0;
    if (report) *report = duplicate(cmp.str());
  });
}

void nr_table_destroy(nr_table* t) { delete t; }

// witness --------------------------------------------------------------------

nr_status nr_witness_run(const nr_config* cfg, const nr_case* c, const char* a, const char* lambda, nr_witness** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  if (!c) return null_argument("case");
  if ((a == nullptr) != (lambda == nullptr)) {
    last_error = "a and lambda must be given together";
    return NR_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    const auto& opts = options_of(cfg);
    std::optional<nroots::InstanceParameters> inst;
    if (a) inst = nroots::InstanceParameters{nroots::parse_rational_list(a), nroots::parse_rational_list(lambda)};
    *out = new nr_witness{nroots::run_witness(c->value, inst, opts), opts};
  });
}

nr_status nr_witness_ok(const nr_witness* w, int* out) {
  if (!w) return null_argument("witness");
  if (!out) return null_argument("out");
  *out = w->report.ok() ? 1 : 0;
  return NR_OK;
}

nr_status nr_witness_refused(const nr_witness* w, int* out) {
  if (!w) return null_argument("witness");
  if (!out) return null_argument("out");
  *out = w->report.refusal.empty() ? 0 : 1;
  return NR_OK;
}

nr_status nr_witness_render(const nr_witness* w, nr_format format, char** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  if (!w) return null_argument("witness");
  return guarded([&] { *out = duplicate(nroots::render_witness(w->report, format_of(format), w->options)); });
}

void nr_witness_destroy(nr_witness* w) { delete w; }

// enumerate ------------------------------------------------------------------

nr_status nr_enumerate(unsigned n, nr_format format, char** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] { *out = duplicate(nroots::render_enumeration(n, format_of(format))); });
}

nr_status nr_placement_count(unsigned n, size_t* out) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = nroots::enumerate_placements(n).size(); });
}

// oracle ---------------------------------------------------------------------

nr_status nr_oracle_run_case(const nr_config* cfg, const nr_case* c, nr_oracle** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  if (!c) return null_argument("case");
  return guarded([&] {
    const auto& opts = options_of(cfg);
    *out = new nr_oracle{nroots::run_oracle({c->value}, opts), opts};
  });
}

nr_status nr_oracle_run_all(const nr_config* cfg, unsigned n, nr_oracle** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    const auto& opts = options_of(cfg);
    nroots::check_size(n, opts);
    *out = new nr_oracle{nroots::run_oracle(nroots::enumerate_cases(n), opts), opts};
  });
}

nr_status nr_oracle_case_count(const nr_oracle* o, size_t* out) {
  if (!o) return null_argument("oracle");
  if (!out) return null_argument("out");
  *out = o->sweep.reports.size();
  return NR_OK;
}

nr_status nr_oracle_agreements(const nr_oracle* o, size_t* out) {
  if (!o) return null_argument("oracle");
  if (!out) return null_argument("out");
  *out = o->sweep.agreements();
  return NR_OK;
}

nr_status nr_oracle_nonpositive_lifts(const nr_oracle* o, size_t* out) {
  if (!o) return null_argument("oracle");
  if (!out) return null_argument("out");
  std::size_t total = 0;
  for (const auto& r : o->sweep.reports) total += r.nonpositive_lifts;
  *out = total;
  return NR_OK;
}

nr_status nr_oracle_render(const nr_oracle* o, nr_format format, char** out) {
  if (!out) return null_argument("out");
  *out = nullptr;
  if (!o) return null_argument("oracle");
  return guarded([&] { *out = duplicate(nroots::render_oracle(o->sweep, format_of(format), o->options)); });
}

void nr_oracle_destroy(nr_oracle* o) { delete o; }

}  // extern "C"
