#include "eostrata/emit.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "eostrata/products.hpp"
#include "eostrata/siegel.hpp"

namespace eo::emit {

using ordered_json = nlohmann::ordered_json;

namespace {

[[noreturn]] void bad(const std::string& msg) {
  throw std::invalid_argument("emit: " + msg);
}

std::string finish(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json uv(const GammaUV& g) { return {{"u", g.u}, {"v", g.v}}; }

ordered_json uv_pair(const GammaUV& lo, const GammaUV& hi) {
  return {{"lower", uv(lo)}, {"upper", uv(hi)}};
}

std::string uv_str(const GammaUV& g) {
  return "(" + std::to_string(g.u) + "," + std::to_string(g.v) + ")";
}

std::string join_ints(const std::vector<int>& xs, char sep = ' ') {
  std::ostringstream os;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) os << sep;
    os << xs[i];
  }
  return os.str();
}

// ---------- CSV ----------

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_cell(const ordered_json& v) {
  if (v.is_string()) return csv_quote(v.get<std::string>());
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return csv_quote(v.dump());
}

// array of flat objects -> CSV; column order from the first row
std::string to_csv(const ordered_json& rows) {
  std::ostringstream os;
  if (rows.empty()) return "";
  bool first = true;
  for (const auto& [key, value] : rows.front().items()) {
    (void)value;
    os << (first ? "" : ",") << csv_quote(key);
    first = false;
  }
  os << "\n";
  for (const auto& row : rows) {
    first = true;
    for (const auto& [key, value] : row.items()) {
      (void)key;
      os << (first ? "" : ",") << csv_cell(value);
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

// ---------- DOT ----------

struct DotEdge {
  GammaUV from;
  GammaUV to;
  bool bruhat = true;
};

std::string poset_dot(const std::string& name, const std::vector<GammaUV>& nodes,
                      const std::vector<DotEdge>& edges) {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box];\n";
  for (const GammaUV& g : nodes)
    os << "  \"" << g.u << "_" << g.v << "\" [label=\"" << uv_str(g)
       << "\", rank=" << dim(g) << "];\n";
  for (const DotEdge& e : edges) {
    os << "  \"" << e.from.u << "_" << e.from.v << "\" -> \"" << e.to.u << "_"
       << e.to.v << "\"";
    if (e.bruhat)
      os << " [style=solid];\n";
    else
      os << " [style=dashed, penwidth=2];\n";
  }
  os << "}\n";
  return os.str();
}

[[noreturn]] void no_dot() { bad("format dot is not defined for this command"); }

// ---------- shared row builders ----------

struct BruhatGraph {
  std::vector<GammaUV> nodes;
  std::vector<std::pair<GammaUV, GammaUV>> covers;
};

BruhatGraph bruhat_graph(int q) {
  BruhatGraph g;
  g.nodes = all_strata(q);
  for (const GammaUV& s : g.nodes) {
    if (s.u + 1 < s.v) g.covers.push_back({s, GammaUV{q, s.u + 1, s.v}});
    if (s.v + 1 <= q) g.covers.push_back({s, GammaUV{q, s.u, s.v + 1}});
  }
  auto key = [](const GammaUV& x) { return std::tuple(dim(x), x.u, x.v); };
  std::sort(g.covers.begin(), g.covers.end(),
            [&](const auto& a, const auto& b) {
              return std::pair(key(a.first), key(a.second)) <
                     std::pair(key(b.first), key(b.second));
            });
  return g;
}

ordered_json product_doc(const std::string& kind, ordered_json params,
                         const GammaUV& formula, const GammaUV& oracle) {
  ordered_json j;
  j["kind"] = kind;
  j["params"] = std::move(params);
  j["formula"] = {{"q", formula.q}, {"u", formula.u}, {"v", formula.v}};
  j["oracle"] = {{"q", oracle.q}, {"u", oracle.u}, {"v", oracle.v}};
  j["agree"] = formula == oracle;
  return j;
}

std::string render_product_doc(const ordered_json& j, Format f, bool* agree) {
  if (agree) *agree = j["agree"].get<bool>();
  switch (f) {
    case Format::json:
      return finish(j);
    case Format::csv: {
      ordered_json row;
      row["kind"] = j["kind"];
      for (const auto& [key, value] : j["params"].items()) row[key] = value;
      row["formula"] = uv_str(GammaUV{j["formula"]["q"], j["formula"]["u"],
                                      j["formula"]["v"]});
      row["oracle"] =
          uv_str(GammaUV{j["oracle"]["q"], j["oracle"]["u"], j["oracle"]["v"]});
      row["agree"] = j["agree"];
      return to_csv(ordered_json::array({row}));
    }
    case Format::text: {
      std::ostringstream os;
      os << j["kind"].get<std::string>() << " with";
      for (const auto& [key, value] : j["params"].items())
        os << " " << key << "=" << value.dump();
      os << "\n  formula " << j["formula"].dump() << "\n  oracle  "
         << j["oracle"].dump() << "\n  agree   "
         << (j["agree"].get<bool>() ? "true" : "false") << "\n";
      return os.str();
    }
    case Format::dot:
      no_dot();
  }
  bad("unhandled format");
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "dot") return Format::dot;
  if (name == "text") return Format::text;
  bad("unknown format '" + name + "' (expected json, csv, dot or text)");
}

// ---------- strata ----------

std::string render_strata(int q, Format f) {
  const std::vector<GammaUV> strata = all_strata(q);
  std::vector<long long> counts(static_cast<size_t>(2 * q - 4) + 1, 0);
  for (const GammaUV& g : strata) ++counts[dim(g)];
  switch (f) {
    case Format::json: {
      ordered_json j;
      j["q"] = q;
      j["total"] = strata.size();
      j["strata"] = ordered_json::array();
      for (const GammaUV& g : strata)
        j["strata"].push_back({{"u", g.u}, {"v", g.v}, {"dim", dim(g)}});
      j["dim_counts"] = ordered_json::array();
      for (size_t d = 0; d < counts.size(); ++d)
        j["dim_counts"].push_back({{"dim", d}, {"count", counts[d]}});
      return finish(j);
    }
    case Format::csv: {
      ordered_json rows = ordered_json::array();
      for (const GammaUV& g : strata)
        rows.push_back({{"u", g.u}, {"v", g.v}, {"dim", dim(g)}});
      return to_csv(rows);
    }
    case Format::text: {
      std::ostringstream os;
      os << "q=" << q << ": " << strata.size() << " strata\n";
      for (const GammaUV& g : strata)
        os << "  " << uv_str(g) << " dim=" << dim(g) << "\n";
      os << "census by dimension:\n";
      for (size_t d = 0; d < counts.size(); ++d)
        os << "  dim " << d << ": " << counts[d] << "\n";
      return os.str();
    }
    case Format::dot:
      no_dot();
  }
  bad("unhandled format");
}

// ---------- bruhat ----------

std::string render_bruhat(int q, Format f) {
  const BruhatGraph g = bruhat_graph(q);
  switch (f) {
    case Format::json: {
      ordered_json j;
      j["q"] = q;
      j["nodes"] = ordered_json::array();
      for (const GammaUV& s : g.nodes)
        j["nodes"].push_back({{"u", s.u}, {"v", s.v}, {"dim", dim(s)}});
      j["covers"] = ordered_json::array();
      for (const auto& [lo, hi] : g.covers) j["covers"].push_back(uv_pair(lo, hi));
      return finish(j);
    }
    case Format::csv: {
      ordered_json rows = ordered_json::array();
      for (const auto& [lo, hi] : g.covers)
        rows.push_back({{"lower_u", lo.u},
                        {"lower_v", lo.v},
                        {"upper_u", hi.u},
                        {"upper_v", hi.v}});
      return to_csv(rows);
    }
    case Format::dot: {
      std::vector<DotEdge> edges;
      for (const auto& [lo, hi] : g.covers) edges.push_back({lo, hi, true});
      return poset_dot("bruhat_q" + std::to_string(q), g.nodes, edges);
    }
    case Format::text: {
      std::ostringstream os;
      os << "q=" << q << ": " << g.covers.size() << " Bruhat covers on "
         << g.nodes.size() << " strata\n";
      for (const auto& [lo, hi] : g.covers)
        os << "  " << uv_str(lo) << " -> " << uv_str(hi) << "\n";
      return os.str();
    }
  }
  bad("unhandled format");
}

// ---------- closure ----------

std::string render_closure(const ClosurePoset& poset, Format f) {
  switch (f) {
    case Format::json: {
      ordered_json j;
      j["q"] = poset.q;
      j["nodes"] = ordered_json::array();
      for (const GammaUV& s : poset.strata)
        j["nodes"].push_back({{"u", s.u}, {"v", s.v}, {"dim", dim(s)}});
      j["covers"] = ordered_json::array();
      for (const CoverRelation& c : poset.covers) {
        ordered_json e = uv_pair(c.lower, c.upper);
        e["kind"] = c.kind == CoverKind::Bruhat ? "Bruhat" : "NonBruhat";
        if (c.kind == CoverKind::NonBruhat) e["witness"] = c.witness.one_line();
        j["covers"].push_back(std::move(e));
      }
      return finish(j);
    }
    case Format::csv: {
      ordered_json rows = ordered_json::array();
      for (const CoverRelation& c : poset.covers)
        rows.push_back(
            {{"lower_u", c.lower.u},
             {"lower_v", c.lower.v},
             {"upper_u", c.upper.u},
             {"upper_v", c.upper.v},
             {"kind", c.kind == CoverKind::Bruhat ? "Bruhat" : "NonBruhat"}});
      return to_csv(rows);
    }
    case Format::dot: {
      std::vector<DotEdge> edges;
      for (const CoverRelation& c : poset.covers)
        edges.push_back({c.lower, c.upper, c.kind == CoverKind::Bruhat});
      return poset_dot("closure_q" + std::to_string(poset.q), poset.strata,
                       edges);
    }
    case Format::text: {
      std::ostringstream os;
      int non_bruhat = 0;
      for (const CoverRelation& c : poset.covers)
        if (c.kind == CoverKind::NonBruhat) ++non_bruhat;
      os << "q=" << poset.q << ": " << poset.covers.size() << " covers ("
         << non_bruhat << " beyond Bruhat) on " << poset.strata.size()
         << " strata\n";
      for (const CoverRelation& c : poset.covers) {
        os << "  " << uv_str(c.lower) << " -> " << uv_str(c.upper);
        if (c.kind == CoverKind::NonBruhat)
          os << "  NonBruhat h=" << c.witness.one_line();
        os << "\n";
      }
      return os.str();
    }
  }
  bad("unhandled format");
}

// ---------- conjecture ----------

std::string render_conjecture(const std::vector<ConjectureReport>& reports,
                              Format f) {
  bool all_hold = true;
  for (const ConjectureReport& r : reports) all_hold = all_hold && r.holds;
  switch (f) {
    case Format::json: {
      ordered_json j;
      j["reports"] = ordered_json::array();
      for (const ConjectureReport& r : reports) {
        ordered_json e;
        e["q"] = r.q;
        e["holds"] = r.holds;
        e["non_bruhat_covers"] = ordered_json::array();
        for (const CoverRelation& c : r.non_bruhat_covers) {
          ordered_json cj = uv_pair(c.lower, c.upper);
          cj["witness"] = c.witness.one_line();
          e["non_bruhat_covers"].push_back(std::move(cj));
        }
        e["extra"] = ordered_json::array();
        for (const auto& [lo, hi] : r.extra) e["extra"].push_back(uv_pair(lo, hi));
        e["missing"] = ordered_json::array();
        for (const auto& [lo, hi] : r.missing)
          e["missing"].push_back(uv_pair(lo, hi));
        j["reports"].push_back(std::move(e));
      }
      j["all_hold"] = all_hold;
      return finish(j);
    }
    case Format::csv: {
      ordered_json rows = ordered_json::array();
      for (const ConjectureReport& r : reports)
        rows.push_back({{"q", r.q},
                        {"holds", r.holds},
                        {"non_bruhat_covers", r.non_bruhat_covers.size()},
                        {"extra", r.extra.size()},
                        {"missing", r.missing.size()}});
      return to_csv(rows);
    }
    case Format::text: {
      std::ostringstream os;
      for (const ConjectureReport& r : reports) {
        os << "q=" << r.q << ": " << (r.holds ? "holds" : "FAILS") << " ("
           << r.non_bruhat_covers.size() << " beyond-Bruhat covers";
        if (!r.extra.empty()) os << ", " << r.extra.size() << " extra";
        if (!r.missing.empty()) os << ", " << r.missing.size() << " missing";
        os << ")\n";
      }
      os << (all_hold ? "all hold\n" : "NOT all hold\n");
      return os.str();
    }
    case Format::dot:
      no_dot();
  }
  bad("unhandled format");
}

// ---------- scan ----------

std::string render_scan(const std::vector<ScanReport>& reports, Format f) {
  bool all_agree = true;
  for (const ScanReport& r : reports) all_agree = all_agree && r.agree;
  switch (f) {
    case Format::json: {
      ordered_json j;
      j["reports"] = ordered_json::array();
      for (const ScanReport& r : reports) {
        ordered_json e;
        e["q"] = r.q;
        e["agree"] = r.agree;
        e["relations"] = ordered_json::array();
        for (const ScanRelation& s : r.relations) {
          ordered_json sj = uv_pair(s.lower, s.upper);
          sj["k"] = s.k;
          e["relations"].push_back(std::move(sj));
        }
        e["primary_missing"] = ordered_json::array();
        for (const auto& [lo, hi] : r.primary_missing)
          e["primary_missing"].push_back(uv_pair(lo, hi));
        e["beyond_generated"] = ordered_json::array();
        for (const auto& [lo, hi] : r.beyond_generated)
          e["beyond_generated"].push_back(uv_pair(lo, hi));
        j["reports"].push_back(std::move(e));
      }
      j["all_agree"] = all_agree;
      return finish(j);
    }
    case Format::csv: {
      ordered_json rows = ordered_json::array();
      for (const ScanReport& r : reports)
        rows.push_back({{"q", r.q},
                        {"agree", r.agree},
                        {"relations", r.relations.size()},
                        {"primary_missing", r.primary_missing.size()},
                        {"beyond_generated", r.beyond_generated.size()}});
      return to_csv(rows);
    }
    case Format::text: {
      std::ostringstream os;
      for (const ScanReport& r : reports) {
        os << "q=" << r.q << ": " << r.relations.size()
           << " single-reflection relations, "
           << (r.agree ? "agree" : "DISAGREE") << "\n";
        for (const auto& [lo, hi] : r.primary_missing)
          os << "  missing " << uv_str(lo) << " <= " << uv_str(hi) << "\n";
        for (const auto& [lo, hi] : r.beyond_generated)
          os << "  beyond " << uv_str(lo) << " <= " << uv_str(hi) << "\n";
      }
      os << (all_agree ? "all agree\n" : "NOT all agree\n");
      return os.str();
    }
    case Format::dot:
      no_dot();
  }
  bad("unhandled format");
}

// ---------- product ----------

std::string render_product_1x1(int m, int a, int n, int b, Format f,
                               bool* agree) {
  const GammaUV formula = phi_1x1(m, a, n, b);
  const GammaUV oracle = phi_1x1_oracle(m, a, n, b);
  ordered_json params{{"m", m}, {"a", a}, {"n", n}, {"b", b}};
  return render_product_doc(product_doc("1x1", std::move(params), formula, oracle),
                            f, agree);
}

std::string render_product_2x0(int m, int u, int v, int n, Format f,
                               bool* agree) {
  const GammaUV formula = phi_2x0(m, u, v, n);
  const GammaUV oracle = phi_2x0_oracle(m, u, v, n);
  ordered_json params{{"m", m}, {"u", u}, {"v", v}, {"n", n}};
  return render_product_doc(product_doc("2x0", std::move(params), formula, oracle),
                            f, agree);
}

// ---------- certificates ----------

std::string render_certificates(int q, Format f) {
  const std::map<GammaUV, Certificate> certs = certified_ss_intersections(q);
  switch (f) {
    case Format::json: {
      ordered_json j = ordered_json::array();
      for (const auto& [g, chain] : certs) {
        ordered_json e;
        e["q"] = g.q;
        e["stratum"] = uv(g);
        e["certificate"] = ordered_json::array();
        for (const CertificateStep& s : chain)
          e["certificate"].push_back({{"map", s.map}, {"params", s.params}});
        j.push_back(std::move(e));
      }
      return finish(j);
    }
    case Format::csv: {
      ordered_json rows = ordered_json::array();
      for (const auto& [g, chain] : certs) {
        std::ostringstream steps;
        for (size_t i = 0; i < chain.size(); ++i) {
          if (i) steps << "; ";
          steps << chain[i].map << "(" << join_ints(chain[i].params, ',') << ")";
        }
        rows.push_back(
            {{"u", g.u}, {"v", g.v}, {"certificate", steps.str()}});
      }
      return to_csv(rows);
    }
    case Format::text: {
      std::ostringstream os;
      os << "q=" << q << ": " << certs.size()
         << " certified supersingular intersections\n";
      for (const auto& [g, chain] : certs) {
        os << "  " << uv_str(g) << ":";
        for (const CertificateStep& s : chain)
          os << "  " << s.map << "(" << join_ints(s.params, ',') << ")->"
             << uv_str(s.result);
        os << "\n";
      }
      return os.str();
    }
    case Format::dot:
      no_dot();
  }
  bad("unhandled format");
}

// ---------- forgetful ----------

std::string render_forgetful(int q, Format f, bool* all_pass) {
  struct Row {
    GammaUV g;
    Perm omega;
    bool siegel = false;
    bool oracle_match = false;
  };
  std::vector<Row> rows;
  bool pass = true;
  for (const GammaUV& g : all_strata(q)) {
    Row r;
    r.g = g;
    r.omega = psi(g.q, g.u, g.v);
    r.siegel = is_siegel_perm(r.omega);
    r.oracle_match = r.omega == psi_oracle(g.q, g.u, g.v);
    pass = pass && r.siegel && r.oracle_match;
    rows.push_back(std::move(r));
  }
  if (all_pass) *all_pass = pass;
  switch (f) {
    case Format::json: {
      ordered_json j;
      j["q"] = q;
      j["rows"] = ordered_json::array();
      for (const Row& r : rows)
        j["rows"].push_back({{"u", r.g.u},
                             {"v", r.g.v},
                             {"omega", r.omega.images()},
                             {"in_index_set", r.siegel},
                             {"oracle_match", r.oracle_match}});
      j["all_pass"] = pass;
      return finish(j);
    }
    case Format::csv: {
      ordered_json out = ordered_json::array();
      for (const Row& r : rows)
        out.push_back({{"u", r.g.u},
                       {"v", r.g.v},
                       {"omega", join_ints(r.omega.images())},
                       {"in_index_set", r.siegel},
                       {"oracle_match", r.oracle_match}});
      return to_csv(out);
    }
    case Format::text: {
      std::ostringstream os;
      os << "q=" << q << ": forgetful images of " << rows.size() << " strata\n";
      for (const Row& r : rows)
        os << "  " << uv_str(r.g) << " -> " << r.omega.one_line()
           << (r.siegel && r.oracle_match ? "  ok" : "  FAIL") << "\n";
      os << (pass ? "all pass\n" : "NOT all pass\n");
      return os.str();
    }
    case Format::dot:
      no_dot();
  }
  bad("unhandled format");
}

// ---------- minimal-eo ----------

std::string render_minimal_eo(int q, Format f) {
  struct Row {
    SlopeProfile profile;
    Perm omega;
  };
  std::vector<Row> rows;
  for (SlopeProfile& p : enumerate_minimal_profiles(q)) {
    Perm w = minimal_omega(p);
    rows.push_back({std::move(p), std::move(w)});
  }
  switch (f) {
    case Format::json: {
      ordered_json j;
      j["q"] = q;
      j["profiles"] = ordered_json::array();
      for (const Row& r : rows)
        j["profiles"].push_back({{"parts", r.profile.parts},
                                 {"omega", r.omega.images()},
                                 {"f_nilpotent", f_nilpotent(r.omega)}});
      return finish(j);
    }
    case Format::csv: {
      ordered_json out = ordered_json::array();
      for (const Row& r : rows)
        out.push_back({{"parts", join_ints(r.profile.parts)},
                       {"omega", join_ints(r.omega.images())},
                       {"f_nilpotent", f_nilpotent(r.omega)}});
      return to_csv(out);
    }
    case Format::text: {
      std::ostringstream os;
      os << "q=" << q << ": " << rows.size() << " admissible slope profiles\n";
      for (const Row& r : rows)
        os << "  (" << join_ints(r.profile.parts, ',') << ") -> "
           << r.omega.one_line()
           << (f_nilpotent(r.omega) ? "" : "  [F invertible somewhere]")
           << "\n";
      return os.str();
    }
    case Format::dot:
      no_dot();
  }
  bad("unhandled format");
}

// ---------- ss-report ----------

std::string render_ss_report(int q, Format f) {
  const std::vector<StratumReport> rep = ss_report(q);
  switch (f) {
    case Format::json: {
      ordered_json j;
      j["q"] = q;
      j["report"] = ordered_json::array();
      for (const StratumReport& r : rep)
        j["report"].push_back({{"u", r.stratum.u},
                               {"v", r.stratum.v},
                               {"dim", r.dim},
                               {"verdict", to_string(r.status.verdict)},
                               {"provenance", r.status.provenance}});
      return finish(j);
    }
    case Format::csv: {
      ordered_json rows = ordered_json::array();
      for (const StratumReport& r : rep) {
        std::string prov;
        for (size_t i = 0; i < r.status.provenance.size(); ++i) {
          if (i) prov += "; ";
          prov += r.status.provenance[i];
        }
        rows.push_back({{"u", r.stratum.u},
                        {"v", r.stratum.v},
                        {"dim", r.dim},
                        {"verdict", to_string(r.status.verdict)},
                        {"provenance", prov}});
      }
      return to_csv(rows);
    }
    case Format::text: {
      std::ostringstream os;
      os << "q=" << q << ": supersingular status of " << rep.size()
         << " strata\n";
      for (const StratumReport& r : rep) {
        os << "  " << uv_str(r.stratum) << " dim=" << r.dim << "  "
           << to_string(r.status.verdict) << "\n";
        for (const std::string& p : r.status.provenance)
          os << "      - " << p << "\n";
      }
      return os.str();
    }
    case Format::dot:
      no_dot();
  }
  bad("unhandled format");
}

}  // namespace eo::emit
