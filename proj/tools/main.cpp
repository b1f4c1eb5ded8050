#include <openssl/evp.h>

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <sstream>

#include "punct/amplitudes.hpp"
#include "punct/closed_form.hpp"
#include "punct/diff_approx.hpp"
#include "punct/oracle.hpp"
#include "punct/qfe.hpp"
#include "punct/seq_fit.hpp"
#include "punct/transfer.hpp"
#include "punct/verify.hpp"

using namespace punct;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::string sha256_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr);
  char buf[1 << 16];
  while (in.read(buf, sizeof buf) || in.gcount() > 0) EVP_DigestUpdate(ctx.get(), buf, in.gcount());
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned len = 0;
  EVP_DigestFinal_ex(ctx.get(), md, &len);
  std::ostringstream s;
  for (unsigned i = 0; i < len; ++i) s << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return s.str();
}

// Collects what a run read and wrote, for the manifest.
struct Run {
  std::string command;
  json params = json::object();
  std::vector<std::string> inputs, outputs;
  std::string out;  // --out; empty = stdout

  void emit(const std::string& text) {
    if (out.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(out);
    f << text;
    outputs.push_back(out);
  }
  std::string write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
    outputs.push_back(path);
    return path;
  }
  SeriesFile read(const std::string& path) {
    inputs.push_back(path);
    return read_series_file(path);
  }
};

// "5/2", "-1", or a decimal such as "0.1436806292", exactly.
Rat parse_rat(const std::string& s) {
  const auto dot = s.find('.');
  if (dot == std::string::npos) {
    Rat r(s, 10);
    r.canonicalize();
    return r;
  }
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  Int den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, s.size() - dot - 1);
  Rat r(Int(digits, 10), den);
  r.canonicalize();
  return r;
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> v;
  std::stringstream ss(s);
  for (std::string t; std::getline(ss, t, ',');) v.push_back(std::stoi(t));
  return v;
}

PunctureSpec puncture(const std::string& kind, int s) {
  if (kind == "minimal") return PunctureSpec::minimal();
  if (kind == "fixed") return PunctureSpec::fixed_total(s);
  if (kind == "arbitrary") return PunctureSpec::arbitrary();
  throw std::invalid_argument("unknown puncture kind " + kind);
}

ModelConstants model(const std::string& name) {
  if (name == "staircase") return ModelConstants::staircase();
  if (name == "rooted-sap") return ModelConstants::rooted_sap();
  throw std::invalid_argument("unknown model " + name);
}

json amp_json(const Amp& a) {
  json j;
  j["value"] = a.defined ? to_string(a.value, 20) : "undefined";
  if (a.exact) j["exact"] = a.exact->to_string();
  return j;
}

std::string csv(const std::vector<std::string>& cells) {
  std::string s;
  for (size_t i = 0; i < cells.size(); ++i) s += (i ? "," : "") + cells[i];
  return s + "\n";
}

std::vector<Real> series_reals(const SeriesFile& f) { return to_reals(f.series); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Punctured staircase and self-avoiding polygon series toolkit"};
  app.require_subcommand(1);
  Run run;
  std::string manifest;
  int digits = 0;
  app.add_option("--manifest", manifest, "write a JSON run manifest to this path");
  app.add_option("--digits", digits, "working precision in decimal digits (default $PUNCT_DIGITS or 60)");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "brute-force enumeration");
  std::string o_family = "staircase", o_kind = "minimal";
  int o_m = 12, o_r = 1, o_s = 0;
  oracle->add_option("--family", o_family, "staircase | punctured | sap")->check(CLI::IsMember({"staircase", "punctured", "sap"}));
  oracle->add_option("--mmax", o_m, "largest half-perimeter");
  oracle->add_option("--r", o_r, "number of punctures");
  oracle->add_option("--puncture", o_kind, "minimal | fixed | arbitrary");
  oracle->add_option("--s", o_s, "total hole half-perimeter for --puncture fixed");
  oracle->add_option("--out", run.out, "output file");

  // tm
  auto* tm = app.add_subcommand("tm", "transfer-matrix enumeration of area-moment series");
  int t_m = 40, t_r = 1, t_k = 0, t_s = 0;
  bool t_holes = false;
  std::string t_dir = ".";
  tm->add_option("--mmax", t_m, "largest half-perimeter")->check(CLI::Range(2, kTmMaxM));
  tm->add_option("--rmax", t_r, "largest puncture count")->check(CLI::Range(0, kTmMaxR));
  tm->add_option("--kmax", t_k, "largest area moment")->check(CLI::Range(0, kTmMaxK));
  tm->add_flag("--holes", t_holes, "staircase-shaped holes resolved by total hole half-perimeter");
  tm->add_option("--smax", t_s, "largest hole half-perimeter with --holes (default mmax)");
  tm->add_option("--out-dir", t_dir, "directory for the series files");

  // qfe
  auto* qfe = app.add_subcommand("qfe", "series from the q-functional equation");
  int q_m = 40, q_k = 0;
  bool q_punct = false;
  std::string q_dir = ".";
  qfe->add_option("--mmax", q_m, "truncation order");
  qfe->add_option("--kmax", q_k, "largest area moment");
  qfe->add_flag("--punctured", q_punct, "single minimal puncture");
  qfe->add_option("--out-dir", q_dir, "directory for the series files");

  // reconstruct
  auto* rec = app.add_subcommand("reconstruct", "(A + B sqrt(1-4x)) / (1-4x)^gamma from a series");
  std::string r_in, r_gamma;
  int r_r = -1, r_k = 0, r_deg = -1;
  rec->add_option("--in", r_in, "series file")->required();
  rec->add_option("--gamma", r_gamma, "exponent, e.g. 5/2 (default (3(r+k)-1)/2)");
  rec->add_option("--r", r_r, "puncture count, for the default exponent and degree bound");
  rec->add_option("--k", r_k, "area moment, for the default exponent and degree bound");
  rec->add_option("--deg", r_deg, "degree bound for A and B");
  rec->add_option("--out", run.out, "output file");

  // amplitudes
  auto* amps = app.add_subcommand("amplitudes", "exact moment amplitudes of punctured polygons");
  std::string a_model = "staircase", a_kind = "minimal";
  int a_r = 1, a_k = 10, a_s = 0;
  amps->add_option("--model", a_model, "staircase | rooted-sap");
  amps->add_option("--r", a_r, "number of punctures");
  amps->add_option("--kmax", a_k, "largest area moment");
  amps->add_option("--puncture", a_kind, "minimal | fixed | arbitrary");
  amps->add_option("--s", a_s, "total hole half-perimeter for --puncture fixed");
  amps->add_option("--out", run.out, "output file");

  // ratios
  auto* ratios = app.add_subcommand("ratios", "universal amplitude ratios D_k / D_1^k");
  std::string u_model = "staircase";
  int u_r = 0, u_k = 10;
  ratios->add_option("--model", u_model, "staircase | rooted-sap");
  ratios->add_option("--r", u_r, "number of punctures");
  ratios->add_option("--kmax", u_k, "largest moment");
  ratios->add_option("--out", run.out, "output file");

  // scaling
  auto* scal = app.add_subcommand("scaling", "Airy scaling function, its Riccati residual and the one-puncture function");
  std::string s_model = "staircase", s_from = "0.2", s_to = "5", s_step = "0.1";
  scal->add_option("--model", s_model, "staircase | rooted-sap");
  scal->add_option("--from", s_from);
  scal->add_option("--to", s_to);
  scal->add_option("--step", s_step);
  scal->add_option("--out", run.out, "output file");

  // fit
  auto* fit = app.add_subcommand("fit", "sliding-window asymptotic fits and partial sums");
  std::string f_in, f_form = "ladder", f_growth = "4", f_lead = "0", f_xc = "1/4", f_exps = "1.5";
  int f_K = 4, f_k = 0, f_lo = 0, f_hi = 0;
  std::string f_Ms, f_Ks = "2,4,6";
  fit->add_option("--in", f_in, "series file")->required();
  fit->add_option("--form", f_form, "ladder | once-log | twice-log | twice-exp | partial-sum")
      ->check(CLI::IsMember({"ladder", "once-log", "twice-log", "twice-exp", "partial-sum"}));
  fit->add_option("--K", f_K, "correction terms");
  fit->add_option("--k", f_k, "area moment (log forms)");
  fit->add_option("--growth", f_growth, "exponential growth 1/x_c (ladder)");
  fit->add_option("--lead", f_lead, "leading power of m (ladder)");
  fit->add_option("--mlo", f_lo, "first window end (default mhi - 10)");
  fit->add_option("--mhi", f_hi, "last window end (default: series length)");
  fit->add_option("--xc", f_xc, "critical point (partial-sum)");
  fit->add_option("--first-exponent", f_exps, "ladder M^-(e+j) starts at e (partial-sum)");
  fit->add_option("--Ms", f_Ms, "comma-separated M values (partial-sum; default mhi)");
  fit->add_option("--Ks", f_Ks, "comma-separated K values (partial-sum)");
  fit->add_option("--out", run.out, "output file");

  // da
  auto* da = app.add_subcommand("da", "biased differential approximants");
  std::string d_in, d_degrees, d_xc = "1/4";
  int d_K = 3, d_lo = -1, d_hi = -1, d_spread = 1;
  bool d_scan = false, d_negate = false, d_exact = false;
  da->add_option("--in", d_in, "series file")->required();
  da->add_option("--K", d_K, "approximant order");
  da->add_option("--degrees", d_degrees, "N_K,...,N_0");
  da->add_option("--xc", d_xc, "critical point");
  da->add_flag("--scan", d_scan, "scan all degree vectors in [lo, hi] (or around --degrees)");
  da->add_option("--lo", d_lo, "smallest degree in the scan");
  da->add_option("--hi", d_hi, "largest degree in the scan");
  da->add_option("--spread", d_spread, "largest difference between degrees in the scan");
  da->add_flag("--negate", d_negate, "report -lambda, the orientation of exponent tables");
  da->add_flag("--exact", d_exact, "rational arithmetic (integer series, rational x_c; single vector)");
  da->add_option("--out", run.out, "output file");

  // verify
  auto* ver = app.add_subcommand("verify", "run the acceptance criteria");
  bool v_quick = false;
  ver->add_flag("--quick", v_quick, "skip the long transfer-matrix sweeps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return e.get_exit_code() ? e.get_exit_code() : 2;
  }

  working_digits();
  std::unique_ptr<PrecisionGuard> guard;
  if (digits > 0) guard = std::make_unique<PrecisionGuard>(digits);
  const auto t0 = std::chrono::steady_clock::now();
  int status = 0;

  try {
    if (*oracle) {
      run.command = "oracle";
      run.params = {{"family", o_family}, {"mmax", o_m}, {"r", o_r}, {"puncture", o_kind}, {"s", o_s}};
      std::ostringstream s;
      if (o_family == "sap") {
        write_series(s, oracle_punctured_sap(2 * o_m, o_r), "punctured SAP by half-perimeter",
                     {{"r", std::to_string(o_r)}});
      } else if (o_family == "staircase") {
        write_bivariate(s, oracle_staircase(o_m), "staircase polygons by half-perimeter and area");
      } else {
        write_bivariate(s, oracle_punctured_staircase(o_m, o_r, puncture(o_kind, o_s)),
                        "punctured staircase polygons by half-perimeter and area",
                        {{"r", std::to_string(o_r)}, {"puncture", o_kind}});
      }
      run.emit(s.str());
    } else if (*tm) {
      run.command = "tm";
      run.params = {{"mmax", t_m}, {"rmax", t_r}, {"kmax", t_k}, {"holes", t_holes}, {"smax", t_s}};
      fs::create_directories(t_dir);
      json files = json::array();
      auto save = [&](const IntegerSeries& ser, const std::string& file, const std::string& name,
                      std::map<std::string, std::string> extra) {
        std::ostringstream s;
        write_series(s, ser, name, extra);
        files.push_back(run.write_file((fs::path(t_dir) / file).string(), s.str()));
      };
      if (!t_holes) {
        auto t = tm_enumerate(t_m, t_r, t_k);
        for (int r = 0; r <= t_r; ++r)
          for (int k = 0; k <= t_k; ++k)
            save(t.at(r, k), "tm_r" + std::to_string(r) + "_k" + std::to_string(k) + ".series",
                 "area moment of staircase polygons with minimal punctures",
                 {{"r", std::to_string(r)}, {"k", std::to_string(k)}});
      } else {
        const int smax = t_s > 0 ? t_s : t_m;
        auto h = tm_enumerate_staircase_holes(t_m, t_r, smax, t_k);
        for (int r = 1; r <= t_r; ++r)
          for (int k = 0; k <= t_k; ++k) {
            for (int s = 2 * r; s <= smax; ++s)
              save(h.at(r, s, k),
                   "holes_r" + std::to_string(r) + "_s" + std::to_string(s) + "_k" + std::to_string(k) + ".series",
                   "area moment, staircase holes of fixed total half-perimeter",
                   {{"r", std::to_string(r)}, {"s", std::to_string(s)}, {"k", std::to_string(k)}});
            if (smax >= t_m)
              save(h.arbitrary(r, k), "holes_r" + std::to_string(r) + "_any_k" + std::to_string(k) + ".series",
                   "area moment, staircase holes of any size", {{"r", std::to_string(r)}, {"k", std::to_string(k)}});
          }
      }
      std::cout << json{{"files", files}}.dump(2) << "\n";
    } else if (*qfe) {
      run.command = "qfe";
      run.params = {{"mmax", q_m}, {"kmax", q_k}, {"punctured", q_punct}};
      fs::create_directories(q_dir);
      auto ms = q_punct ? minimal_puncture_qfe_moments(q_m, q_k) : solve_qfe_moments(q_m, q_k);
      json files = json::array();
      for (int k = 0; k <= q_k; ++k) {
        std::ostringstream s;
        write_series(s, ms.power(k), q_punct ? "area moment, one minimal puncture" : "area moment, staircase polygons",
                     {{"r", q_punct ? "1" : "0"}, {"k", std::to_string(k)}});
        files.push_back(run.write_file(
            (fs::path(q_dir) / ("qfe_r" + std::string(q_punct ? "1" : "0") + "_k" + std::to_string(k) + ".series"))
                .string(),
            s.str()));
      }
      std::cout << json{{"files", files}}.dump(2) << "\n";
    } else if (*rec) {
      run.command = "reconstruct";
      auto f = run.read(r_in);
      auto header_int = [&](const char* key, int fallback) {
        auto it = f.headers.find(key);
        return it == f.headers.end() ? fallback : std::stoi(it->second);
      };
      const int r = r_r >= 0 ? r_r : header_int("r", 0);
      const int k = header_int("k", r_k);
      Rat gamma = r_gamma.empty() ? Rat(3 * (r + k) - 1, 2) : parse_rat(r_gamma);
      gamma.canonicalize();
      const int deg = r_deg >= 0 ? r_deg : default_degree_bound(r, k);
      run.params = {{"in", r_in}, {"gamma", gamma.get_str()}, {"deg", deg}, {"r", r}, {"k", k}};
      auto cf = reconstruct(to_integer(f.series), gamma, deg);
      auto am = closed_form_amplitudes(cf);
      json j = {{"gamma", gamma.get_str()},
                {"deg_bound", deg},
                {"checked_terms", cf.checked_terms},
                {"A", cf.A.to_string()},
                {"B", cf.B.to_string()},
                {"A_at_xc", am.A_at_xc.get_str()},
                {"B_at_xc", am.B_at_xc.get_str()},
                {"leading_amplitude", amp_json(am.leading)},
                {"correction_amplitude", amp_json(am.correction)}};
      run.emit(j.dump(2) + "\n");
    } else if (*amps) {
      run.command = "amplitudes";
      run.params = {{"model", a_model}, {"r", a_r}, {"kmax", a_k}, {"puncture", a_kind}, {"s", a_s}};
      auto at = amplitude_chain(model(a_model), a_k + a_r + 1);
      auto P = staircase_gf(std::max(a_s, 4));
      const Amp p_xc(PiRat(Rat(1, 4)));
      const bool stair = a_model == "staircase";
      auto v = punctured_amplitudes(at, a_r, puncture(a_kind, a_s), stair ? &P : nullptr, stair ? &p_xc : nullptr);
      json rows = json::array();
      for (size_t k = 0; k < v.size() && static_cast<int>(k) <= a_k; ++k) {
        json row = amp_json(v[k]);
        row["k"] = k;
        rows.push_back(row);
      }
      run.emit(json{{"model", a_model}, {"r", a_r}, {"puncture", a_kind}, {"amplitudes", rows}}.dump(2) + "\n");
    } else if (*ratios) {
      run.command = "ratios";
      run.params = {{"model", u_model}, {"r", u_r}, {"kmax", u_k}};
      auto at = amplitude_chain(model(u_model), u_k + u_r + 1);
      auto u = universal_ratios(at, u_r, u_k);
      std::string out = csv({"k", "value", "exact"});
      for (int k = 0; k <= u_k; ++k)
        out += csv({std::to_string(k), to_string(u[k].value, 12), u[k].exact ? u[k].exact->to_string() : ""});
      run.emit(out);
    } else if (*scal) {
      run.command = "scaling";
      run.params = {{"model", s_model}, {"from", s_from}, {"to", s_to}, {"step", s_step}};
      auto mc = model(s_model);
      std::vector<Real> grid;
      for (Real s(s_from); s <= Real(s_to) + Real(s_step) / 2; s += Real(s_step)) grid.push_back(s);
      auto ev = airy_scaling(mc, grid);
      std::string out = csv({"s", "F", "dF", "riccati_residual", "F1"});
      for (size_t i = 0; i < ev.s.size(); ++i)
        out += csv({to_string(ev.s[i], 6), to_string(ev.F[i], 20), to_string(ev.dF[i], 20),
                    to_string(riccati_residual(mc, ev.s[i]), 3), to_string(ev.F1[i], 20)});
      run.emit(out);
    } else if (*fit) {
      run.command = "fit";
      auto f = run.read(f_in);
      auto c = series_reals(f);
      const int hi = f_hi > 0 ? f_hi : static_cast<int>(c.size()) - 1;
      const int lo = f_lo > 0 ? f_lo : std::max(1, hi - 10);
      run.params = {{"in", f_in}, {"form", f_form}, {"K", f_K}, {"k", f_k}, {"mlo", lo}, {"mhi", hi}};
      if (f_form == "partial-sum") {
        std::vector<Real> ladder;
        for (int j = 0; j < 16; ++j) ladder.push_back(to_real(parse_rat(f_exps)) + j);
        auto Ms = f_Ms.empty() ? std::vector<int>{hi} : parse_ints(f_Ms);
        run.params["xc"] = f_xc;
        run.params["first_exponent"] = f_exps;
        std::string out = csv({"M", "K", "estimate"});
        for (const auto& row : partial_sum_table(c, to_real(parse_rat(f_xc)), ladder, Ms, parse_ints(f_Ks)))
          out += csv({std::to_string(row.M), std::to_string(row.K), to_string(row.estimate, 20)});
        run.emit(out);
      } else {
        AsymptoticForm form = f_form == "ladder"      ? sqrt_form_ladder(to_real(parse_rat(f_growth)), to_real(parse_rat(f_lead)), f_K)
                              : f_form == "once-log"  ? once_punctured_log_form(f_k, f_K)
                              : f_form == "twice-log" ? twice_punctured_log_form(f_k, f_K)
                                                      : twice_punctured_exp_form(f_K);
        auto res = fit_windows(c, form, lo, hi, f_K);
        std::vector<std::string> head{"M"};
        for (const auto& t : form.terms) head.push_back(t.label);
        std::string out = csv(head);
        for (const auto& w : res.windows) {
          std::vector<std::string> row{std::to_string(w.M)};
          for (const auto& a : w.amps) row.push_back(to_string(a, 16));
          out += csv(row);
        }
        run.emit(out);
      }
    } else if (*da) {
      run.command = "da";
      auto f = run.read(d_in);
      const Rat xc = parse_rat(d_xc);
      std::vector<std::vector<int>> grid;
      if (!d_degrees.empty() && !d_scan) {
        grid.push_back(parse_ints(d_degrees));
      } else {
        int lo = d_lo, hi = d_hi;
        if (!d_degrees.empty()) {
          auto d = parse_ints(d_degrees);
          lo = lo >= 0 ? lo : *std::min_element(d.begin(), d.end()) - 1;
          hi = hi >= 0 ? hi : *std::max_element(d.begin(), d.end()) + 1;
        }
        if (lo < 0 || hi < lo) throw std::invalid_argument("scan needs --lo/--hi or --degrees");
        grid = degree_grid(d_K, lo, hi, d_spread);
      }
      run.params = {{"in", d_in}, {"K", d_K}, {"xc", d_xc}, {"vectors", grid}, {"negate", d_negate}, {"exact", d_exact}};
      std::vector<ScanRow> rows;
      if (d_exact) {
        if (grid.size() != 1) throw std::invalid_argument("--exact takes a single degree vector");
        ScanRow row;
        row.degrees = grid[0];
        auto a = build_biased_da(to_integer(f.series), d_K, grid[0], xc);
        row.ind = indicial_exponents(a);
        row.max_residual = a.max_residual;
        row.null_dim = a.null_dim;
        rows.push_back(row);
      } else {
        rows = exponent_scan(series_reals(f), d_K, grid, to_real(xc));
      }
      const Real sign = d_negate ? -1 : 1;
      std::vector<std::string> head{"degrees"};
      for (int i = 1; i <= d_K; ++i) head.push_back("exponent" + std::to_string(i));
      head.insert(head.end(), {"null_dim", "irregular", "error"});
      std::string out = csv(head);
      for (const auto& r : rows) {
        std::string deg = "[";
        for (size_t i = 0; i < r.degrees.size(); ++i) deg += (i ? " " : "") + std::to_string(r.degrees[i]);
        std::vector<std::string> cells{deg + "]"};
        for (int i = 0; i < d_K; ++i) {
          if (i >= static_cast<int>(r.ind.exponents.size())) {
            cells.push_back("");
            continue;
          }
          const auto& e = r.ind.exponents[i];
          std::string v = to_string(sign * e.real(), 10);
          if (abs(e.imag()) > Real("1e-20")) v += (e.imag() > 0 ? "+" : "-") + to_string(abs(e.imag()), 6) + "i";
          cells.push_back(v);
        }
        cells.insert(cells.end(), {std::to_string(r.null_dim), r.ind.irregular ? "yes" : "no", "\"" + r.error + "\""});
        out += csv(cells);
      }
      run.emit(out);
    } else if (*ver) {
      run.command = "verify";
      run.params = {{"quick", v_quick}};
      int failed = 0;
      run_acceptance(v_quick, [&](const CriterionResult& r) {
        std::cout << format_result(r) << std::endl;
        failed += r.verdict == Verdict::fail;
      });
      std::cout << failed << " criteria failed\n";
      status = failed ? 1 : 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (!manifest.empty()) {
    json in = json::array(), out = json::array();
    for (const auto& p : run.inputs) in.push_back({{"path", p}, {"sha256", sha256_file(p)}});
    for (const auto& p : run.outputs) out.push_back({{"path", p}, {"sha256", sha256_file(p)}});
    json m = {{"command", run.command},
              {"parameters", run.params},
              {"inputs", in},
              {"outputs", out},
              {"wall_seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()},
              {"working_digits", static_cast<int>(Real::default_precision())}};
    std::ofstream(manifest) << m.dump(2) << "\n";
  }
  return status;
}
