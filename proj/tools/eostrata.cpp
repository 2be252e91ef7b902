// Batch front end: every computation in the library behind one binary,
// emitting JSON/CSV/DOT/text to stdout or --out. Progress goes to stderr
// only, stdout stays machine-parseable. Exit code 0 means every requested
// agreement flag came back true and no hard error occurred; 1 means some
// agreement flag is false; 2 means an error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "eostrata/closure.hpp"
#include "eostrata/emit.hpp"

namespace {

struct Out {
  std::string path;  // empty: stdout
  void write(const std::string& content) const {
    if (path.empty()) {
      std::cout << content;
      return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file: " + path);
    os << content;
  }
};

std::pair<int, int> parse_q_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int q = std::stoi(text);
      return {q, q};
    }
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument("empty range");
    return {lo, hi};
  } catch (const std::exception&) {
    throw std::invalid_argument("bad q range '" + text +
                                "' (expected N or N..M with N <= M)");
  }
}

eo::SearchStrategy parse_strategy(const std::string& name) {
  if (name == "pruned") return eo::SearchStrategy::pruned;
  if (name == "exhaustive") return eo::SearchStrategy::exhaustive;
  throw std::invalid_argument("unknown strategy '" + name +
                              "' (expected pruned or exhaustive)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Ekedahl-Oort stratum combinatorics of the rank-q unitary family "
      "(signature (q-2,2))"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string out_path;
  std::string strategy = "pruned";
  int threads = 1;
  int q = 0;
  std::string q_range;
  int max_q = 0;

  int exit_code = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "json, csv, dot or text")
        ->default_str("json");
    cmd->add_option("--out", out_path, "write to this file instead of stdout");
  };
  Out out_sink;
  auto emit_str = [&](const std::string& s) {
    out_sink.path = out_path;
    out_sink.write(s);
  };

  // ---- strata ----
  auto* c_strata = app.add_subcommand("strata", "list all strata with dims");
  c_strata->add_option("--q", q, "rank")->required();
  add_common(c_strata);
  c_strata->callback([&] {
    emit_str(eo::emit::render_strata(q, eo::emit::parse_format(format)));
  });

  // ---- bruhat ----
  auto* c_bruhat =
      app.add_subcommand("bruhat", "cover relations of the Bruhat order");
  c_bruhat->add_option("--q", q, "rank")->required();
  add_common(c_bruhat);
  c_bruhat->callback([&] {
    emit_str(eo::emit::render_bruhat(q, eo::emit::parse_format(format)));
  });

  // ---- closure ----
  auto* c_closure =
      app.add_subcommand("closure", "cover relations of the closure order");
  c_closure->add_option("--q", q, "rank")->required();
  c_closure->add_option("--threads", threads, "thread budget");
  c_closure->add_option("--strategy", strategy, "pruned or exhaustive");
  add_common(c_closure);
  c_closure->callback([&] {
    const auto f = eo::emit::parse_format(format);
    std::cerr << "# closure q=" << q << " strategy=" << strategy
              << " threads=" << threads << std::endl;
    const eo::ClosurePoset poset =
        eo::closure_poset(q, parse_strategy(strategy), threads);
    emit_str(eo::emit::render_closure(poset, f));
  });

  // ---- conjecture ----
  auto* c_conj = app.add_subcommand(
      "conjecture", "compare the closure order against the generated order");
  c_conj->add_option("--q", q_range, "rank or range, e.g. 5..11")->required();
  c_conj->add_option("--threads", threads, "thread budget");
  c_conj->add_option("--strategy", strategy, "pruned or exhaustive");
  add_common(c_conj);
  c_conj->callback([&] {
    const auto f = eo::emit::parse_format(format);
    const auto [lo, hi] = parse_q_range(q_range);
    std::vector<eo::ConjectureReport> reports;
    for (int qq = lo; qq <= hi; ++qq) {
      std::cerr << "# conjecture q=" << qq << " ..." << std::endl;
      reports.push_back(
          eo::verify_conjecture(qq, threads, parse_strategy(strategy)));
      std::cerr << "# conjecture q=" << qq << " "
                << (reports.back().holds ? "holds" : "FAILS") << std::endl;
      if (!reports.back().holds) exit_code = 1;
    }
    emit_str(eo::emit::render_conjecture(reports, f));
  });

  // ---- scan ----
  auto* c_scan = app.add_subcommand(
      "scan", "single-reflection relations vs the generating families");
  c_scan->add_option("--max-q", max_q, "scan q = 4 .. max-q")->required();
  add_common(c_scan);
  c_scan->callback([&] {
    const auto f = eo::emit::parse_format(format);
    std::vector<eo::ScanReport> reports;
    for (int qq = 4; qq <= max_q; ++qq) {
      std::cerr << "# scan q=" << qq << std::endl;
      reports.push_back(eo::scan_report(qq));
      if (!reports.back().agree) exit_code = 1;
    }
    emit_str(eo::emit::render_scan(reports, f));
  });

  // ---- product ----
  auto* c_prod = app.add_subcommand(
      "product", "product-map images (closed form vs oracle) or certificates");
  std::string kind;
  int pm = 0, pa = 0, pn = 0, pb = 0, pu = 0, pv = 0;
  bool certificates = false;
  c_prod->add_option("--kind", kind, "1x1 or 2x0");
  c_prod->add_option("--m", pm, "first factor m");
  c_prod->add_option("--a", pa, "first factor a (1x1)");
  c_prod->add_option("--n", pn, "second factor n");
  c_prod->add_option("--b", pb, "second factor b (1x1)");
  c_prod->add_option("--u", pu, "stratum u (2x0)");
  c_prod->add_option("--v", pv, "stratum v (2x0)");
  c_prod->add_flag("--certificates", certificates,
                   "emit all certified supersingular intersections for --q");
  c_prod->add_option("--q", q, "rank (with --certificates)");
  add_common(c_prod);
  c_prod->callback([&] {
    const auto f = eo::emit::parse_format(format);
    if (certificates) {
      if (q < 2) throw std::invalid_argument("--certificates needs --q >= 2");
      emit_str(eo::emit::render_certificates(q, f));
      return;
    }
    bool agree = false;
    if (kind == "1x1")
      emit_str(eo::emit::render_product_1x1(pm, pa, pn, pb, f, &agree));
    else if (kind == "2x0")
      emit_str(eo::emit::render_product_2x0(pm, pu, pv, pn, f, &agree));
    else
      throw std::invalid_argument(
          "product needs --kind 1x1, --kind 2x0 or --certificates");
    if (!agree) exit_code = 1;
  });

  // ---- forgetful ----
  auto* c_forget = app.add_subcommand(
      "forgetful", "Siegel images of all strata with membership/oracle checks");
  c_forget->add_option("--q", q, "rank")->required();
  add_common(c_forget);
  c_forget->callback([&] {
    bool all_pass = false;
    emit_str(eo::emit::render_forgetful(q, eo::emit::parse_format(format),
                                        &all_pass));
    if (!all_pass) exit_code = 1;
  });

  // ---- minimal-eo ----
  auto* c_min = app.add_subcommand(
      "minimal-eo", "minimal strata of non-supersingular slope profiles");
  c_min->add_option("--q", q, "rank")->required();
  add_common(c_min);
  c_min->callback([&] {
    emit_str(eo::emit::render_minimal_eo(q, eo::emit::parse_format(format)));
  });

  // ---- ss-report ----
  auto* c_ss = app.add_subcommand(
      "ss-report", "supersingular status classification of all strata");
  c_ss->add_option("--q", q, "rank")->required();
  add_common(c_ss);
  c_ss->callback([&] {
    emit_str(eo::emit::render_ss_report(q, eo::emit::parse_format(format)));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  }
  return exit_code;
}
