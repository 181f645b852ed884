#include "widthslab/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <json.hpp>
#include <map>
#include <optional>
#include <sstream>
#include <utility>

#include "widthslab/asymptotics.hpp"
#include "widthslab/complexity.hpp"
#include "widthslab/errors.hpp"
#include "widthslab/format.hpp"
#include "widthslab/tractability.hpp"
#include "widthslab/util.hpp"
#include "widthslab/widths.hpp"

namespace widthslab {

namespace {

using ordered_json = nlohmann::ordered_json;

enum class OutFormat { Table, Csv, Json };

// How a textual cell re-enters structured output. Num cells hold decimal
// literals (JSON numbers; empty -> null); Int cells hold exact integers of
// any width (JSON strings, so 2^100 survives binary64-free); List cells are
// "; "-joined string arrays.
enum class Kind { Text, Num, Int, Bool, List };

struct Column {
  std::string name;
  Kind kind;
};

// Row-shaped result: metadata plus a rectangular body.
struct Sheet {
  std::string command;
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<Column> cols;
  std::vector<std::vector<std::string>> rows;
};

// Key/value-shaped result (convergence and tractability reports).
struct Report {
  std::string command;
  struct Entry {
    std::string key;
    std::string value;
    Kind kind;
  };
  std::vector<Entry> entries;
};

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    q += c;
    if (c == '"') q += '"';
  }
  q += '"';
  return q;
}

ordered_json json_cell(const std::string& text, Kind kind) {
  switch (kind) {
    case Kind::Num:
      if (text.empty()) return nullptr;
      return ordered_json::parse(text);  // format_real output is a JSON literal
    case Kind::Bool:
      return text == "true";
    case Kind::List: {
      ordered_json arr = ordered_json::array();
      std::size_t pos = 0;
      while (pos <= text.size() && !text.empty()) {
        std::size_t sep = text.find("; ", pos);
        if (sep == std::string::npos) {
          arr.push_back(text.substr(pos));
          break;
        }
        arr.push_back(text.substr(pos, sep - pos));
        pos = sep + 2;
      }
      return arr;
    }
    case Kind::Int:
    case Kind::Text:
      return text;
  }
  return text;
}

void emit_sheet(std::ostream& out, const Sheet& s, OutFormat fmt) {
  if (fmt == OutFormat::Json) {
    ordered_json j;
    j["command"] = s.command;
    for (const auto& [k, v] : s.meta) j[k] = v;
    ordered_json rows = ordered_json::array();
    for (const auto& row : s.rows) {
      ordered_json r;
      for (std::size_t c = 0; c < s.cols.size(); ++c)
        r[s.cols[c].name] = json_cell(row[c], s.cols[c].kind);
      rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    out << j.dump(2) << '\n';
    return;
  }
  if (fmt == OutFormat::Csv) {
    for (std::size_t c = 0; c < s.cols.size(); ++c)
      out << (c ? "," : "") << csv_escape(s.cols[c].name);
    out << '\n';
    for (const auto& row : s.rows) {
      for (std::size_t c = 0; c < row.size(); ++c)
        out << (c ? "," : "") << csv_escape(row[c]);
      out << '\n';
    }
    return;
  }
  // table
  for (const auto& [k, v] : s.meta) out << "# " << k << ": " << v << '\n';
  std::vector<std::size_t> w(s.cols.size());
  for (std::size_t c = 0; c < s.cols.size(); ++c) w[c] = s.cols[c].name.size();
  for (const auto& row : s.rows)
    for (std::size_t c = 0; c < row.size(); ++c) w[c] = std::max(w[c], row[c].size());
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) out << "  ";
      out << cells[c];
      if (c + 1 < cells.size())
        out << std::string(w[c] - cells[c].size(), ' ');
    }
    out << '\n';
  };
  std::vector<std::string> head;
  for (const auto& col : s.cols) head.push_back(col.name);
  line(head);
  for (const auto& row : s.rows) line(row);
}

void emit_report(std::ostream& out, const Report& r, OutFormat fmt) {
  if (fmt == OutFormat::Json) {
    ordered_json j;
    j["command"] = r.command;
    for (const auto& e : r.entries) j[e.key] = json_cell(e.value, e.kind);
    out << j.dump(2) << '\n';
    return;
  }
  if (fmt == OutFormat::Csv) {
    out << "field,value\n";
    for (const auto& e : r.entries)
      out << csv_escape(e.key) << ',' << csv_escape(e.value) << '\n';
    return;
  }
  for (const auto& e : r.entries) out << e.key << ": " << e.value << '\n';
}

// --- token parsing -----------------------------------------------------

BigInt parse_bigint_token(const std::string& tok, const char* what) {
  if (tok.empty()) throw parse_error(std::string(what) + ": empty integer", tok);
  std::size_t i = tok[0] == '-' ? 1 : 0;
  if (i == tok.size()) throw parse_error(std::string(what) + ": not an integer", tok);
  for (; i < tok.size(); ++i)
    if (tok[i] < '0' || tok[i] > '9')
      throw parse_error(std::string(what) + ": not an integer", tok);
  return BigInt(tok);
}

std::pair<BigInt, BigInt> parse_range_token(const std::string& tok) {
  std::size_t sep = tok.find(':');
  if (sep == std::string::npos)
    throw parse_error("range must look like A:B", tok);
  BigInt a = parse_bigint_token(tok.substr(0, sep), "range start");
  BigInt b = parse_bigint_token(tok.substr(sep + 1), "range end");
  if (a > b) throw parameter_error("range start exceeds range end");
  return {a, b};
}

Real parse_real_strict(const std::string& tok, const char* what) {
  // Reject embedded junk the Real constructor might tolerate.
  for (char c : tok)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '-' ||
          c == '+' || c == 'e' || c == 'E'))
      throw parse_error(std::string(what) + ": not a number", tok);
  try {
    return Real(tok);
  } catch (const std::exception&) {
    throw parse_error(std::string(what) + ": not a number", tok);
  }
}

// eps accepts plain decimals ("0.25") and the log spelling "e^-X" for
// thresholds far below binary64 range.
LogValue parse_epsilon(const std::string& tok) {
  if (tok.rfind("e^", 0) == 0) {
    Real x = parse_real_strict(tok.substr(2), "epsilon exponent");
    return LogValue::from_log(x);
  }
  Real x = parse_real_strict(tok, "epsilon");
  if (x <= 0) throw parameter_error("epsilon must be positive");
  return LogValue::from_linear(x);
}

std::string fmt_log(const LogValue& v, int precision) {
  // The log field of an exact zero has no finite spelling; callers only
  // pass positive values here.
  return format_real(v.log(), precision);
}

// --- option bags --------------------------------------------------------

struct Common {
  OutFormat format = OutFormat::Table;
  std::string out_path;
  int precision = 15;
  std::uint64_t budget = 1000000;
};

void check_budget(const BigInt& count, const Common& c) {
  if (count > BigInt(c.budget))
    throw parameter_error("grid of " + count.str() + " evaluations exceeds --budget " +
                          std::to_string(c.budget));
}

std::vector<BigInt> log_spaced(const BigInt& lo, const BigInt& hi, std::size_t count) {
  // Deduplicated geometric grid, endpoints always included.
  std::vector<BigInt> out;
  if (count == 0) return out;
  Real llo = lo > 0 ? log(Real(lo)) : Real(0);
  Real lhi = hi > 0 ? log(Real(hi)) : Real(0);
  for (std::size_t i = 0; i < count; ++i) {
    Real t = count == 1 ? lhi : llo + (lhi - llo) * static_cast<int>(i) / static_cast<int>(count - 1);
    BigInt v = floor_big(exp(t) + Real(0.5));
    if (v < lo) v = lo;
    if (v > hi) v = hi;
    if (out.empty() || v > out.back()) out.push_back(v);
  }
  return out;
}

// --- subcommand handlers -------------------------------------------------

Sheet run_an(const GeometryDomain& dom, const SequenceSpec& spec,
             const std::optional<std::string>& n_tok,
             const std::optional<std::string>& range_tok, bool breakpoints_only,
             const Common& c) {
  MultiplierSequence seq(spec, dom);
  Sheet s;
  s.command = "an";
  s.meta = {{"domain", dom.name()}, {"sequence", spec.label()}};
  s.cols = {{"n", Kind::Int},
            {"degree", Kind::Int},
            {"log_value", Kind::Num},
            {"value_if_representable", Kind::Num}};

  BigInt lo, hi;
  if (n_tok) {
    lo = hi = parse_bigint_token(*n_tok, "n");
  } else {
    std::tie(lo, hi) = parse_range_token(*range_tok);
  }
  if (lo < 1) throw parameter_error("n must be ≥ 1");

  BreakpointTable table(seq);
  auto push = [&](const BigInt& n, const BigInt& degree, const LogValue& v) {
    s.rows.push_back({n.str(), degree.str(), fmt_log(v, c.precision),
                      format_linear(v, c.precision)});
  };
  if (breakpoints_only) {
    BigInt k_lo = degree_for_index(dom, lo);
    BigInt k_hi = degree_for_index(dom, hi);
    check_budget(k_hi - k_lo + 1, c);
    table.extend_to_degree(k_hi);
    for (BigInt k = k_lo; k <= k_hi; ++k) {
      const BreakpointRow& row = table.rows()[k.convert_to<std::size_t>()];
      push(std::min(row.cum, hi), k, row.value);
    }
  } else {
    check_budget(hi - lo + 1, c);
    table.extend_to_index(hi);
    for (BigInt n = lo; n <= hi; ++n) push(n, table.degree_for(n), table.value_for(n));
  }
  return s;
}

Sheet run_complexity(const GeometryDomain& dom, const SequenceSpec& spec,
                     const std::vector<std::string>& eps_toks, ErrorCriterion crit,
                     const Common& c) {
  MultiplierSequence seq(spec, dom);
  Sheet s;
  s.command = "complexity";
  s.meta = {{"domain", dom.name()},
            {"sequence", spec.label()},
            {"criterion", criterion_name(crit)}};
  s.cols = {{"eps", Kind::Text}, {"n", Kind::Int}};
  check_budget(BigInt(eps_toks.size()), c);
  for (const std::string& tok : eps_toks) {
    LogValue eps = parse_epsilon(tok);
    s.rows.push_back({tok, info_complexity(seq, eps, crit).str()});
  }
  return s;
}

Report run_limits(const GeometryDomain& dom, const SequenceSpec& spec,
                  const BigInt& kmax, std::optional<double> tol, bool alpha1,
                  const Common& c) {
  MultiplierSequence seq(spec, dom);
  Report r;
  r.command = "limits";
  const int p = c.precision;

  if (spec.family == Family::Gevrey && spec.alpha >= 1) {
    if (!alpha1)
      throw unsupported_error(
          "no strong-equivalence limit exists for gevrey with alpha >= 1 (Remark 3.4): "
          "the scaled endpoint sequences settle on two different constants; rerun with "
          "--alpha1 to print both");
    if (spec.alpha > 1)
      throw unsupported_error("--alpha1 sublimits are specific to alpha = 1");
    if (dom.kind != Geometry::Sphere)
      throw unsupported_error("--alpha1 sublimits are computed for sphere domains");
    auto [lo, hi] = alpha1_sublimits(spec.beta, dom.d);
    r.entries = {
        {"sequence", spec.label(), Kind::Text},
        {"domain", dom.name(), Kind::Text},
        {"lower_constant", format_linear(lo, p), Kind::Num},
        {"lower_log", fmt_log(lo, p), Kind::Num},
        {"upper_constant", format_linear(hi, p), Kind::Num},
        {"upper_log", fmt_log(hi, p), Kind::Num},
        {"gap_factor", format_real(exp(spec.beta), p), Kind::Num},
        {"note",
         "subsequential limits of the scaled value along block starts and block ends; "
         "their ratio e^beta never closes, so no single limit exists",
         Kind::Text},
    };
    return r;
  }

  if (kmax < 1) throw parameter_error("kmax must be ≥ 1");
  // Dense tail: the last fifth of the samples sit in [0.8 kmax, kmax], so
  // the tail window of the report measures deviation near kmax itself; a
  // purely log-spaced schedule would put tail samples down at kmax^0.8,
  // where the O(1/k) endpoint deviation is several times larger.
  std::vector<BigInt> ks;
  if (kmax <= 32) {
    for (BigInt k = 1; k <= kmax; ++k) ks.push_back(k);
  } else {
    const BigInt knee = kmax * 4 / 5;
    ks = log_spaced(BigInt(1), knee, 64);
    const BigInt span = kmax - knee;
    for (int i = 1; i <= 16; ++i) {
      BigInt k = knee + span * i / 16;
      if (k > ks.back()) ks.push_back(k);
    }
  }
  check_budget(BigInt(ks.size()), c);
  ConvergenceReport rep = check_strong_equivalence(seq, ks, tol);
  r.entries = {
      {"sequence", spec.label(), Kind::Text},
      {"domain", dom.name(), Kind::Text},
      {"kmax", kmax.str(), Kind::Int},
      {"samples", std::to_string(rep.samples.size()), Kind::Num},
      {"target", format_real(Real(rep.target), p), Kind::Num},
      {"tolerance", format_real(Real(rep.tolerance), p), Kind::Num},
      {"max_rel_dev_tail", format_real(Real(rep.max_rel_dev_tail), p), Kind::Num},
      {"converged", rep.converged ? "true" : "false", Kind::Bool},
      {"sandwich_ok", rep.sandwich_ok ? "true" : "false", Kind::Bool},
  };
  return r;
}

Sheet run_preasym(const GeometryDomain& dom, const SequenceSpec& spec,
                  const std::optional<std::string>& n_tok,
                  const std::optional<std::string>& range_tok, std::size_t count,
                  const Common& c) {
  MultiplierSequence seq(spec, dom);
  const bool exponent_scale = spec.family == Family::Gevrey;
  Sheet s;
  s.command = "preasym";
  s.meta = {{"domain", dom.name()},
            {"sequence", spec.label()},
            {"ratio_kind", exponent_scale ? "exponent" : "value"}};
  s.cols = {{"n", Kind::Int},
            {"regime", Kind::Text},
            {"log_an", Kind::Num},
            {"envelope_log", Kind::Num},
            {"ratio", Kind::Num}};

  std::vector<BigInt> ns;
  if (n_tok) {
    ns.push_back(parse_bigint_token(*n_tok, "n"));
  } else {
    auto [lo, hi] = parse_range_token(*range_tok);
    if (lo < 1) throw parameter_error("n must be ≥ 1");
    check_budget(BigInt(count), c);
    ns = log_spaced(lo, hi, count);
  }
  if (!ns.empty() && ns.front() < 1) throw parameter_error("n must be ≥ 1");

  std::vector<std::vector<std::string>> rows(ns.size());
  parallel_for(ns.size(), [&](std::size_t i) {
    const BigInt& n = ns[i];
    LogValue a = approx_number(seq, n);
    EnvelopeValue env = envelope(seq, n);
    double ratio;
    if (exponent_scale) {
      // (-ln a_n) / envelope exponent; 0 at n = 1 where a_1 = 1.
      ratio = a.is_one() ? 0.0
                         : exp(log(-a.log()) - env.value.log()).convert_to<double>();
    } else {
      ratio = exp(a.log() - env.value.log()).convert_to<double>();
    }
    rows[i] = {n.str(), regime_name(env.regime), fmt_log(a, c.precision),
               fmt_log(env.value, c.precision), format_real(Real(ratio), c.precision)};
  });
  s.rows = std::move(rows);
  return s;
}

Report run_tract(const GeometryDomain& dom, const SequenceSpec& spec, ErrorCriterion crit,
                 const Common& c) {
  MultiplierSequence seq(spec, dom);
  TractabilityReport rep = classify(seq, crit);
  Report r;
  r.command = "tract";
  r.entries = {
      {"sequence", rep.sequence, Kind::Text},
      {"domain", rep.domain, Kind::Text},
      {"criterion", rep.criterion, Kind::Text},
      {"weak", status_name(rep.weak), Kind::Text},
      {"uniformly_weak", status_name(rep.uniformly_weak), Kind::Text},
      {"quasi_poly", status_name(rep.quasi_poly), Kind::Text},
      {"poly", status_name(rep.poly), Kind::Text},
      {"strongly_poly", status_name(rep.strongly_poly), Kind::Text},
      {"curse", status_name(rep.curse), Kind::Text},
  };
  if (rep.t_qpol)
    r.entries.push_back({"t_qpol", format_real(*rep.t_qpol, c.precision), Kind::Num});
  if (rep.t_qpol_argmax)
    r.entries.push_back({"t_qpol_argmax", rep.t_qpol_argmax->str(), Kind::Int});
  r.entries.push_back({"st_region", rep.st_region, Kind::Text});
  r.entries.push_back({"ec_region", rep.ec_region, Kind::Text});
  std::string cites;
  for (const std::string& t : rep.citations) {
    if (!cites.empty()) cites += "; ";
    cites += t;
  }
  r.entries.push_back({"citations", cites, Kind::List});
  return r;
}

Sheet run_sweep_scaled(const GeometryDomain& dom, const SequenceSpec& spec,
                       const BigInt& kmax, std::size_t points, const Common& c) {
  MultiplierSequence seq(spec, dom);
  if (kmax < 1) throw parameter_error("kmax must be ≥ 1");
  check_budget(BigInt(points), c);
  Sheet s;
  s.command = "sweep";
  s.meta = {{"mode", "scaled"}, {"domain", dom.name()}, {"sequence", spec.label()}};
  if (!(spec.family == Family::Gevrey && spec.alpha >= 1)) {
    s.meta.push_back({"target", format_linear(strong_limit_target(seq), c.precision)});
  }
  s.cols = {{"k", Kind::Int}, {"scaled_lower", Kind::Num}, {"scaled_upper", Kind::Num}};

  std::vector<BigInt> ks = log_spaced(BigInt(1), kmax, points);
  std::vector<std::vector<std::string>> rows(ks.size());
  parallel_for(ks.size(), [&](std::size_t i) {
    auto [lo, hi] = scaled_endpoints(seq, ks[i]);
    rows[i] = {ks[i].str(), format_real(lo, c.precision), format_real(hi, c.precision)};
  });
  s.rows = std::move(rows);
  return s;
}

Sheet run_sweep_ratio(const GeometryDomain& dom, const SequenceSpec& spec,
                      const std::string& range_tok, std::size_t points, const Common& c) {
  auto [lo, hi] = parse_range_token(range_tok);
  if (lo < 1) throw parameter_error("n must be ≥ 1");
  check_budget(BigInt(points), c);
  std::vector<BigInt> ns = log_spaced(lo, hi, points);
  std::vector<std::pair<BigInt, int>> grid;
  grid.reserve(ns.size());
  for (const BigInt& n : ns) grid.emplace_back(n, dom.d);
  RatioSweep sweep = envelope_ratio_sweep(dom.kind, spec, grid);

  Sheet s;
  s.command = "sweep";
  s.meta = {{"mode", "envelope-ratio"},
            {"domain", dom.name()},
            {"sequence", spec.label()},
            {"ratio_min", format_real(Real(sweep.global.min), c.precision)},
            {"ratio_max", format_real(Real(sweep.global.max), c.precision)}};
  s.cols = {{"n", Kind::Int}, {"regime", Kind::Text}, {"ratio", Kind::Num}};
  for (const RatioPoint& p : sweep.points)
    s.rows.push_back({p.n.str(), regime_name(p.regime), format_real(Real(p.ratio), c.precision)});
  return s;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact staircase, complexity, and tractability calculator"};
  app.require_subcommand(1);

  Common common;
  std::map<std::string, OutFormat> fmt_map{
      {"table", OutFormat::Table}, {"csv", OutFormat::Csv}, {"json", OutFormat::Json}};
  app.add_option("--format", common.format, "output format")
      ->transform(CLI::CheckedTransformer(fmt_map, CLI::ignore_case))
      ->default_val("table");
  app.add_option("--out", common.out_path, "write output to this file");
  app.add_option("--precision", common.precision, "significant digits (1..50)");
  app.add_option("--budget", common.budget, "max evaluations for ranges and sweeps");

  std::string domain_tok = "sphere:d=2";
  std::string seq_tok;
  std::string criterion_tok = "absolute";
  std::optional<std::string> n_tok, range_tok;
  bool breakpoints_only = false;
  std::vector<std::string> eps_toks;
  std::string kmax_tok = "10000";
  std::optional<double> tol;
  bool alpha1 = false;
  std::size_t count = 50;
  std::string mode_tok;
  std::size_t points = 200;

  auto add_domain = [&](CLI::App* sub) {
    sub->add_option("--domain", domain_tok, "sphere:d=D or ball:d=D");
  };
  auto add_seq = [&](CLI::App* sub) {
    sub->add_option("--seq", seq_tok, "multiplier family, e.g. sobolev-star:r=1")
        ->required();
  };

  CLI::App* an = app.add_subcommand("an", "approximation numbers a_n");
  an->fallthrough();
  add_domain(an);
  add_seq(an);
  auto* an_n = an->add_option("--n", n_tok, "single index");
  auto* an_range = an->add_option("--n-range", range_tok, "inclusive index range A:B");
  an_n->excludes(an_range);
  an->add_flag("--breakpoints-only", breakpoints_only,
               "emit one row per staircase block in the range");

  CLI::App* cx = app.add_subcommand("complexity", "information complexity n(eps, d)");
  cx->fallthrough();
  add_domain(cx);
  add_seq(cx);
  cx->add_option("--eps", eps_toks, "thresholds, decimal or e^-X")
      ->required()
      ->delimiter(',');
  cx->add_option("--criterion", criterion_tok, "absolute or normalized");

  CLI::App* lim = app.add_subcommand("limits", "strong-equivalence convergence report");
  lim->fallthrough();
  add_domain(lim);
  add_seq(lim);
  lim->add_option("--kmax", kmax_tok, "largest staircase degree sampled");
  lim->add_option("--tol", tol, "relative tail tolerance override");
  lim->add_flag("--alpha1", alpha1, "print the two alpha = 1 subsequential constants");

  CLI::App* pre = app.add_subcommand("preasym", "envelope values and ratios");
  pre->fallthrough();
  add_domain(pre);
  add_seq(pre);
  auto* pre_n = pre->add_option("--n", n_tok, "single index");
  auto* pre_range = pre->add_option("--n-range", range_tok, "inclusive index range A:B");
  pre_n->excludes(pre_range);
  pre->add_option("--count", count, "log-spaced sample count for ranges");

  CLI::App* tr = app.add_subcommand("tract", "tractability classification");
  tr->fallthrough();
  add_domain(tr);
  add_seq(tr);
  tr->add_option("--criterion", criterion_tok, "absolute or normalized");

  CLI::App* sw = app.add_subcommand("sweep", "plot-ready series");
  sw->fallthrough();
  add_domain(sw);
  add_seq(sw);
  sw->add_option("--mode", mode_tok, "scaled or envelope-ratio")->required();
  sw->add_option("--kmax", kmax_tok, "largest degree (mode scaled)");
  sw->add_option("--n-range", range_tok, "index range A:B (mode envelope-ratio)");
  sw->add_option("--points", points, "samples along the series");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (common.precision < 1 || common.precision > 50)
      throw parameter_error("--precision must be in 1..50");

    GeometryDomain dom = parse_domain(domain_tok);
    SequenceSpec spec = parse_sequence(seq_tok);
    auto criterion = [&] {
      if (criterion_tok == "absolute") return ErrorCriterion::Absolute;
      if (criterion_tok == "normalized") return ErrorCriterion::Normalized;
      throw parse_error("criterion must be absolute or normalized", criterion_tok);
    };

    std::ostringstream buf;
    if (an->parsed()) {
      if (!n_tok && !range_tok) throw parameter_error("an needs --n or --n-range");
      emit_sheet(buf, run_an(dom, spec, n_tok, range_tok, breakpoints_only, common),
                 common.format);
    } else if (cx->parsed()) {
      emit_sheet(buf, run_complexity(dom, spec, eps_toks, criterion(), common),
                 common.format);
    } else if (lim->parsed()) {
      BigInt kmax = parse_bigint_token(kmax_tok, "kmax");
      emit_report(buf, run_limits(dom, spec, kmax, tol, alpha1, common), common.format);
    } else if (pre->parsed()) {
      if (!n_tok && !range_tok) throw parameter_error("preasym needs --n or --n-range");
      emit_sheet(buf, run_preasym(dom, spec, n_tok, range_tok, count, common),
                 common.format);
    } else if (tr->parsed()) {
      emit_report(buf, run_tract(dom, spec, criterion(), common), common.format);
    } else if (sw->parsed()) {
      if (mode_tok == "scaled") {
        BigInt kmax = parse_bigint_token(kmax_tok, "kmax");
        emit_sheet(buf, run_sweep_scaled(dom, spec, kmax, points, common), common.format);
      } else if (mode_tok == "envelope-ratio") {
        if (!range_tok) throw parameter_error("mode envelope-ratio needs --n-range");
        emit_sheet(buf, run_sweep_ratio(dom, spec, *range_tok, points, common),
                   common.format);
      } else {
        throw parse_error("mode must be scaled or envelope-ratio", mode_tok);
      }
    }

    if (!common.out_path.empty()) {
      std::ofstream f(common.out_path, std::ios::binary);
      if (!f) throw parameter_error("cannot open output file: " + common.out_path);
      f << buf.str();
    } else {
      out << buf.str();
    }
    return 0;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << " (token: " << e.token() << ")\n";
    return 2;
  } catch (const parameter_error& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const unsupported_error& e) {
    err << "error: " << e.what() << '\n';
    return 4;
  }
}

}  // namespace widthslab
