#pragma once

// Deterministic renderers behind the command-line front end. Each command
// has one entry point taking a Format; renderers never consult clocks,
// locales or global state, so equal inputs give byte-identical output
// (golden-file friendly).

#include <string>
#include <vector>

#include "eostrata/closure.hpp"
#include "eostrata/strata.hpp"

namespace eo::emit {

enum class Format { json, csv, dot, text };
Format parse_format(const std::string& name);  // throws std::invalid_argument

// All C(q,2) strata with dimensions plus the per-dimension census.
std::string render_strata(int q, Format f);

// Cover relations of the Bruhat order on the (u,v) labels (componentwise
// comparison): single steps u+1 or v+1 that stay inside the index set.
std::string render_bruhat(int q, Format f);

// Cover relations of the full closure order, Bruhat and beyond-Bruhat kinds
// distinguished (DOT: solid vs dashed edges; node id "u_v", rank = dim).
std::string render_closure(const ClosurePoset& poset, Format f);

// One entry per verified q; all_hold summarises the run.
std::string render_conjecture(const std::vector<ConjectureReport>& reports,
                              Format f);

// Single-reflection scan reports with the two mismatch lists per q.
std::string render_scan(const std::vector<ScanReport>& reports, Format f);

// Closed-form product value next to the module-theoretic oracle value.
// *agree (optional) receives whether they coincide.
std::string render_product_1x1(int m, int a, int n, int b, Format f,
                               bool* agree = nullptr);
std::string render_product_2x0(int m, int u, int v, int n, Format f,
                               bool* agree = nullptr);

// Every certified supersingular intersection at level q with its full
// certificate chain ({"map","params"} steps).
std::string render_certificates(int q, Format f);

// psi on every stratum with the W_q membership and oracle-agreement checks;
// *all_pass receives the conjunction.
std::string render_forgetful(int q, Format f, bool* all_pass = nullptr);

// Admissible slope profiles at level q with their minimal-stratum Weyl
// elements.
std::string render_minimal_eo(int q, Format f);

// Supersingular-status classification of every stratum at level q.
std::string render_ss_report(int q, Format f);

}  // namespace eo::emit
