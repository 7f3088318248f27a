// SPDX-License-Identifier: Apache-2.0
#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "xleg/admissibility.hpp"
#include "xleg/errors.hpp"
#include "xleg/operators.hpp"
#include "xleg/xfamily.hpp"

namespace xleg::cli {

namespace {

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> parts;
  if (text.empty()) return parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    parts.push_back(text.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

std::size_t parse_index(std::string_view s) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("malformed index: '" + std::string(s) + "'");
  }
  return v;
}

// Runs `body` with an output stream: the file at `path`, or `fallback`.
template <typename Fn>
int with_output(const std::string& path, std::ostream& fallback, std::ostream& err, Fn&& body) {
  if (path.empty()) return body(fallback);
  std::ofstream file(path);
  if (!file) {
    err << "error: cannot open '" << path << "' for writing\n";
    return kInvalidInput;
  }
  const int code = body(file);
  file.flush();
  if (!file) {
    err << "error: write to '" << path << "' failed\n";
    return kInvalidInput;
  }
  return code;
}

}  // namespace

std::vector<std::size_t> parse_index_list(std::string_view text) {
  std::vector<std::size_t> out;
  for (auto part : split_commas(text)) out.push_back(parse_index(part));
  return out;
}

std::vector<Rat> parse_rat_list(std::string_view text) {
  std::vector<Rat> out;
  for (auto part : split_commas(text)) out.push_back(Rat::parse(part));
  return out;
}

IndexRange parse_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const std::size_t k = parse_index(text);
    return {k, k};
  }
  IndexRange r{parse_index(text.substr(0, dots)), parse_index(text.substr(dots + 2))};
  if (r.lo > r.hi) throw std::invalid_argument("empty index range '" + std::string(text) + "'");
  return r;
}

FamilyKey parse_key(std::string_view m_text, std::string_view t_text) {
  return FamilyKey(parse_index_list(m_text), parse_rat_list(t_text));
}

// ---------------------------------------------------------------------------
// gen

io::FamilyRecord make_family_record(const XFamily& family, IndexRange range) {
  io::FamilyRecord rec;
  rec.key = family.key();
  rec.original_key = family.original_key();
  rec.tau = family.tau();
  rec.admissible = is_admissible(family);
  for (std::size_t i = range.lo; i <= range.hi; ++i) {
    Poly p = family.poly(i);
    rec.polys.push_back({i, static_cast<std::size_t>(p.degree()), std::move(p)});
    if (rec.admissible) rec.norms.push_back(norm_of(family, i));
  }
  return rec;
}

void write_family_csv(const io::FamilyRecord& rec, std::ostream& os) {
  os << "name,i,degree,power,coefficient\n";
  for (std::size_t k = 0; k < rec.tau.coeffs().size(); ++k) {
    os << "tau,," << rec.tau.degree() << "," << k << "," << rec.tau.coeffs()[k].str() << "\n";
  }
  for (const auto& p : rec.polys) {
    for (std::size_t k = 0; k < p.coeffs.coeffs().size(); ++k) {
      os << "P," << p.i << "," << p.degree << "," << k << "," << p.coeffs.coeffs()[k].str() << "\n";
    }
  }
}

int cmd_gen(const GenOptions& opt, std::ostream& out, std::ostream& err) {
  const XFamily family(opt.key);
  const io::FamilyRecord rec = make_family_record(family, opt.range);
  return with_output(opt.out, out, err, [&](std::ostream& os) {
    if (opt.format == Format::kJson) {
      os << io::to_json(rec).dump(2) << "\n";
    } else {
      write_family_csv(rec, os);
    }
    return int{kPass};
  });
}

// ---------------------------------------------------------------------------
// verify

std::set<Suite> parse_suites(std::string_view text) {
  static const std::map<std::string_view, Suite> names = {
      {"eigen", Suite::kEigen}, {"ortho", Suite::kOrtho},   {"factor", Suite::kFactor},
      {"recur", Suite::kRecur}, {"degree", Suite::kDegree},
  };
  std::set<Suite> out;
  for (auto part : split_commas(text)) {
    if (part == "all") {
      for (const auto& [name, s] : names) out.insert(s);
      continue;
    }
    const auto it = names.find(part);
    if (it == names.end()) throw std::invalid_argument("unknown suite '" + std::string(part) + "'");
    out.insert(it->second);
  }
  if (out.empty()) throw std::invalid_argument("no suites selected");
  return out;
}

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::kEigen: return "eigen";
    case Suite::kOrtho: return "ortho";
    case Suite::kFactor: return "factor";
    case Suite::kRecur: return "recur";
    case Suite::kDegree: return "degree";
  }
  return "?";
}

namespace {

void run_eigen(const XFamily& f, std::size_t max_i, io::json& entries) {
  for (std::size_t i = 0; i <= max_i; ++i) {
    entries.push_back(io::report_entry("T(tau_m) P_{m;i} = -i(i+1) P_{m;i}", f.key(), i,
                                       verify_eigen(f, i), std::nullopt, "eigen"));
  }
}

void run_ortho(const XFamily& f, std::size_t max_i, io::json& entries) {
  const OrthogonalityReport rep = orthogonality_check(f, max_i);
  for (const auto& e : rep.entries) {
    io::json entry = io::report_entry(e.i1 == e.i2 ? "R_{m;ii}(1) = norm_i" : "R_{m;i1 i2}(1) = 0",
                                      f.key(), e.i1, e.pass, std::nullopt, "orthogonality");
    entry["i2"] = e.i2;
    entry["expected"] = io::to_json(e.expected);
    entry["actual"] = io::to_json(e.actual);
    entries.push_back(std::move(entry));
  }
}

void run_factor(const XFamily& f, std::size_t max_i, std::size_t probe_degree, io::json& entries) {
  const FamilyKey& key = f.key();
  for (std::size_t j = 0; j < key.size(); ++j) {
    const FamilyKey base(std::vector<std::size_t>(key.m.begin(), key.m.begin() + static_cast<long>(j)),
                         std::vector<Rat>(key.t.begin(), key.t.begin() + static_cast<long>(j)));
    const std::size_t m = key.m[j];
    const FactorizationReport rep =
        verify_factorization(base, m, key.t[j],
                             probe_degree == 0 ? std::nullopt : std::optional<std::size_t>(probe_degree));
    for (const auto& id : rep.identities) {
      io::json entry = io::report_entry(id.identity, base, std::nullopt, id.pass, id.counterexample_probe, "factor");
      entry["m_step"] = m;
      entry["t_step"] = io::to_json(key.t[j]);
      entries.push_back(std::move(entry));
    }
    for (std::size_t i = 0; i <= max_i; ++i) {
      if (i == m) continue;
      io::json entry = io::report_entry("(lambda_i - lambda_m) pi_{m;i} = B(pi_m,tau_m) A(tau,pi_m) pi_i",
                                        base, i, verify_intertwining(base, m, key.t[j], i), std::nullopt,
                                        "factor");
      entry["m_step"] = m;
      entry["t_step"] = io::to_json(key.t[j]);
      entries.push_back(std::move(entry));
    }
  }
}

void run_recur(const XFamily& f, std::size_t max_i, io::json& entries) {
  CdtChain chain(f.key());
  const std::size_t top = chain.levels();
  entries.push_back(io::report_entry("tau (determinant) = tau (recursion)", f.key(), std::nullopt,
                                     chain.tau(top) == f.tau(), std::nullopt, "recur"));
  const Poly tau2 = f.tau() * f.tau();
  for (std::size_t i = 0; i <= max_i; ++i) {
    entries.push_back(io::report_entry("P_{m;i} (determinant) = P_{m;i} (recursion)", f.key(), i,
                                       chain.poly(top, i) == f.poly(i), std::nullopt, "recur"));
  }
  for (std::size_t a = 0; a <= max_i; ++a) {
    for (std::size_t b = a; b <= max_i; ++b) {
      const RatFun& r = chain.overlap(top, a, b);
      bool vanishes = false;
      try {
        vanishes = r(Rat(-1)).is_zero();
      } catch (const PoleError&) {
      }
      // R = N/D: (N'D - N D') tau^2 == P_a P_b D^2.
      const Poly& n = r.num();
      const Poly& d = r.den();
      const bool derivative_ok =
          (differentiate(n) * d - n * differentiate(d)) * tau2 == f.poly(a) * f.poly(b) * (d * d);
      io::json e1 = io::report_entry("R_{m;i1 i2}(-1) = 0", f.key(), a, vanishes, std::nullopt, "recur");
      e1["i2"] = b;
      entries.push_back(std::move(e1));
      io::json e2 = io::report_entry("R_{m;i1 i2}' = P_{m;i1} P_{m;i2} / tau^2", f.key(), a, derivative_ok,
                                     std::nullopt, "recur");
      e2["i2"] = b;
      entries.push_back(std::move(e2));
    }
  }
}

void run_degree(const XFamily& f, std::size_t max_i, io::json& entries) {
  const DegreeTable table = degree_table(f, max_i);
  entries.push_back(io::report_entry("deg tau = 2 sum(m) + n", f.key(), std::nullopt,
                                     table.tau_degree == expected_tau_degree(f.key()), std::nullopt,
                                     "degree"));
  for (const auto& row : table.rows) {
    entries.push_back(io::report_entry("deg P_{m;i} = predicted", f.key(), row.i, row.predicted == row.actual,
                                       std::nullopt, "degree"));
  }
  entries.push_back(io::report_entry("number of missing degrees = deg tau", f.key(), std::nullopt,
                                     table.missing.size() == table.tau_degree, std::nullopt, "degree"));
}

}  // namespace

VerifyResult run_verify(const VerifyOptions& opt) {
  VerifyResult result;
  const XFamily family(opt.key);
  io::json& report = result.report;
  report["key"] = io::to_json(family.key());
  report["original_key"] = io::to_json(family.original_key());
  report["canonicalized"] = family.was_canonicalized();
  report["suites"] = io::json::array();
  for (Suite s : opt.suites) report["suites"].push_back(suite_name(s));
  report["entries"] = io::json::array();
  io::json& entries = report["entries"];

  if (opt.suites.count(Suite::kOrtho)) {
    bool admissible = false;
    try {
      admissible = is_admissible(family);
    } catch (const InvariantViolation& e) {
      entries.push_back(io::report_entry(e.what(), family.key(), std::nullopt, false, std::nullopt, "admissibility"));
      report["pass"] = false;
      result.exit_code = kVerificationFailed;
      return result;
    }
    entries.push_back(io::report_entry("t_j > -m_j - 1/2 (tau has no zeros on [-1,1])", family.key(),
                                       std::nullopt, admissible, std::nullopt, "admissibility"));
    if (!admissible) {
      report["pass"] = false;
      result.exit_code = kInadmissible;
      return result;
    }
  }

  for (Suite s : opt.suites) {
    try {
      switch (s) {
        case Suite::kEigen: run_eigen(family, opt.max_i, entries); break;
        case Suite::kOrtho: run_ortho(family, opt.max_i, entries); break;
        case Suite::kFactor: run_factor(family, opt.max_i, opt.probe_degree, entries); break;
        case Suite::kRecur: run_recur(family, opt.max_i, entries); break;
        case Suite::kDegree: run_degree(family, opt.max_i, entries); break;
      }
    } catch (const std::exception& e) {
      entries.push_back(io::report_entry(std::string("suite aborted: ") + e.what(), family.key(), std::nullopt,
                                         false, std::nullopt, suite_name(s)));
    }
  }
  const bool pass = std::all_of(entries.begin(), entries.end(), [](const io::json& e) { return e.at("pass").get<bool>(); });
  report["pass"] = pass;
  result.exit_code = pass ? kPass : kVerificationFailed;
  return result;
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  VerifyResult result = run_verify(opt);
  const int io_code = with_output(opt.out, out, err, [&](std::ostream& os) {
    os << result.report.dump(2) << "\n";
    return int{kPass};
  });
  if (io_code != kPass) return io_code;
  if (result.exit_code == kInadmissible) {
    err << "error: " << to_string(canonicalize(opt.key)) << " is not admissible; ortho suite rejected\n";
  } else if (result.report.value("canonicalized", false)) {
    err << "note: key canonicalized from " << to_string(opt.key) << " to " << to_string(canonicalize(opt.key))
        << "\n";
  }
  return result.exit_code;
}

// ---------------------------------------------------------------------------
// weight

std::vector<std::pair<Rat, Rat>> weight_samples(const XFamily& family, std::size_t samples) {
  if (samples < 2) throw std::invalid_argument("weight needs at least 2 samples");
  if (!is_admissible(family)) {
    throw InadmissibleError("weight of inadmissible " + to_string(family.key()) + " has poles on [-1,1]");
  }
  std::vector<std::pair<Rat, Rat>> rows;
  rows.reserve(samples);
  const long last = static_cast<long>(samples - 1);
  for (long k = 0; k <= last; ++k) {
    const Rat z = Rat(-1) + Rat(2 * k, last);
    const Rat tz = family.tau()(z);
    rows.emplace_back(z, (tz * tz).inverse());
  }
  return rows;
}

int cmd_weight(const WeightOptions& opt, std::ostream& out, std::ostream& err) {
  const XFamily family(opt.key);
  std::vector<std::pair<Rat, Rat>> rows;
  try {
    rows = weight_samples(family, opt.samples);
  } catch (const InadmissibleError& e) {
    err << "error: " << e.what() << "\n";
    return kInadmissible;
  }
  return with_output(opt.out, out, err, [&](std::ostream& os) {
    os << "z,W\n";
    for (const auto& [z, w] : rows) os << to_decimal(z, opt.precision) << "," << to_decimal(w, opt.precision) << "\n";
    return int{kPass};
  });
}

// ---------------------------------------------------------------------------
// degrees

bool DegreeTable::consistent() const {
  return missing.size() == tau_degree &&
         std::all_of(rows.begin(), rows.end(), [](const DegreeRow& r) { return r.predicted == r.actual; });
}

DegreeTable degree_table(const XFamily& family, std::size_t max_i) {
  const FamilyKey& key = family.key();
  DegreeTable table;
  table.tau_degree = static_cast<std::size_t>(std::max(family.tau().degree(), 0));
  const std::size_t max_m = key.m.empty() ? 0 : *std::max_element(key.m.begin(), key.m.end());
  // Degrees >= cap are all realized by i not in m; below it, enumerate.
  const std::size_t cap = expected_tau_degree(key) + max_m + 1;
  const std::size_t scan = std::max(max_i, max_m + 1);
  std::vector<bool> seen(cap, false);
  for (std::size_t i = 0; i <= scan; ++i) {
    const std::size_t actual = static_cast<std::size_t>(family.poly(i).degree());
    if (i <= max_i) table.rows.push_back({i, expected_degree(key, i), actual});
    if (actual < cap) seen[actual] = true;
  }
  for (std::size_t d = 0; d < cap; ++d) {
    if (!seen[d]) table.missing.push_back(d);
  }
  return table;
}

int cmd_degrees(const FamilyKey& key, std::size_t max_i, std::ostream& out, std::ostream& /*err*/) {
  const XFamily family(key);
  const DegreeTable table = degree_table(family, max_i);
  out << "# " << to_string(family.key()) << "  deg tau = " << table.tau_degree << "\n";
  out << "i,predicted,actual\n";
  for (const auto& r : table.rows) out << r.i << "," << r.predicted << "," << r.actual << "\n";
  out << "missing (" << table.missing.size() << "):";
  for (std::size_t d : table.missing) out << " " << d;
  out << "\n";
  return table.consistent() ? kPass : kVerificationFailed;
}

// ---------------------------------------------------------------------------

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exceptional Legendre families: generation and exact verification"};
  app.require_subcommand(1);

  std::string m_text, t_text, range_text = "0..5", format_text = "json", suites_text = "all", out_path;
  std::size_t max_i = 12, samples = 1001, probe_degree = 0;
  int precision = 17;

  auto add_key = [&](CLI::App* sub) {
    sub->add_option("--m", m_text, "comma-separated level indices (may be empty)");
    sub->add_option("--t", t_text, "comma-separated rational parameters, one per index");
    sub->add_option("--out", out_path, "output file (default stdout)");
  };

  auto* gen = app.add_subcommand("gen", "write tau and P_{m;i} for a range of i");
  add_key(gen);
  gen->add_option("--i", range_text, "index range a..b")->capture_default_str();
  gen->add_option("--format", format_text, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run exact verification suites");
  add_key(verify);
  verify->add_option("--max-i", max_i, "largest polynomial index checked")->capture_default_str();
  verify->add_option("--suites", suites_text, "eigen,ortho,factor,recur,degree or all")->capture_default_str();
  verify->add_option("--probe-degree", probe_degree, "highest probe z^D for operator identities (0: default)");

  auto* weight = app.add_subcommand("weight", "sample the weight 1/tau^2 on [-1,1] as CSV");
  add_key(weight);
  weight->add_option("--samples", samples, "grid points, endpoints included")->capture_default_str();
  weight->add_option("--precision", precision, "significant digits")->capture_default_str();

  auto* degrees = app.add_subcommand("degrees", "degree table and missing degrees");
  add_key(degrees);
  degrees->add_option("--max-i", max_i, "largest polynomial index listed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInvalidInput;
  }

  try {
    const FamilyKey key = parse_key(m_text, t_text);
    if (gen->parsed()) {
      GenOptions opt{key, parse_range(range_text), format_text == "csv" ? Format::kCsv : Format::kJson, out_path};
      return cmd_gen(opt, out, err);
    }
    if (verify->parsed()) {
      return cmd_verify({key, max_i, parse_suites(suites_text), out_path, probe_degree}, out, err);
    }
    if (weight->parsed()) {
      if (samples < 2) throw std::invalid_argument("--samples must be at least 2");
      if (precision < 1) throw std::invalid_argument("--precision must be positive");
      return cmd_weight({key, samples, precision, out_path}, out, err);
    }
    if (degrees->parsed()) {
      if (out_path.empty()) return cmd_degrees(key, max_i, out, err);
      return with_output(out_path, out, err, [&](std::ostream& os) { return cmd_degrees(key, max_i, os, err); });
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const InadmissibleError& e) {
    err << "error: " << e.what() << "\n";
    return kInadmissible;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailed;
  }
  return kInvalidInput;
}

}  // namespace xleg::cli
