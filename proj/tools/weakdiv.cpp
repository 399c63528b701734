// weakdiv: Frobenius-stream generation, weak-divisibility scans, the weak
// abelian part solver and Haar-measure checks from the command line.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "weakdiv/acceptance.hpp"
#include "weakdiv/catalog.hpp"
#include "weakdiv/errors.hpp"
#include "weakdiv/haar.hpp"
#include "weakdiv/weak_divisibility.hpp"

using namespace weakdiv;

namespace {

struct RunConfig {
  std::string out;
  std::string format = "json";
  unsigned threads = 1;
  std::uint64_t seed = 42;
  bool seed_given = false;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw InputError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

void emit(const RunConfig& cfg, const Json& j) {
  Output out(cfg.out);
  if (cfg.format == "table") {
    for (const auto& [k, v] : j.items()) {
      out.stream() << k << "\t" << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    }
  } else {
    out.stream() << j.dump() << '\n';
  }
}

std::uint64_t resolve_seed(const RunConfig& cfg) {
  if (cfg.seed_given) return cfg.seed;
  if (const char* env = std::getenv("WEAKDIV_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InputError("WEAKDIV_SEED is not an unsigned integer");
    }
  }
  return cfg.seed;
}

std::array<long, 5> parse_curve(const std::string& text) {
  std::array<long, 5> a{};
  std::stringstream ss(text);
  std::string item;
  std::size_t i = 0;
  while (std::getline(ss, item, ',')) {
    if (i == 5) throw InputError("--curve takes exactly 5 coefficients a1,a2,a3,a4,a6");
    try {
      std::size_t used = 0;
      a[i] = std::stol(item, &used);
      if (used != item.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw InputError("--curve coefficient '" + item + "' is not an integer");
    }
    ++i;
  }
  if (i != 5) throw InputError("--curve takes exactly 5 coefficients a1,a2,a3,a4,a6");
  return a;
}

Cyclotomic parse_scalar(const std::string& text) {
  if (!text.empty() && text.front() == '{') {
    try {
      return cyclotomic_from_json(Json::parse(text));
    } catch (const Json::exception&) {
      throw InputError("--scalar is not valid JSON");
    }
  }
  return Cyclotomic(parse_rational(text));
}

std::vector<long> parse_list(const std::string& text, const char* flag) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stol(item));
    } catch (const std::exception&) {
      throw InputError(std::string(flag) + " entry '" + item + "' is not an integer");
    }
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error&) {
    throw InputError(path + ": malformed JSON");
  }
}

void write_stream_out(const RunConfig& cfg, const FrobStream& s) {
  Output out(cfg.out);
  write_stream(out.stream(), s);
}

int exit_for(bool consistent) { return consistent ? 0 : 1; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weak abelian direct summands: Frobenius streams, density scans, Haar checks"};
  app.require_subcommand(1);
  RunConfig cfg;
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out, "Output file (default stdout)");
    sub->add_option("--format", cfg.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::Range(1u, 1024u));
  };

  // ec-gen
  auto* ec = app.add_subcommand("ec-gen", "Frobenius stream of an elliptic curve");
  std::string curve_text;
  Prime pmax = 0;
  Prime bound = kDefaultPointCountBound;
  ec->add_option("--curve", curve_text, "a1,a2,a3,a4,a6")->required();
  ec->add_option("--pmax", pmax, "Largest prime")->required()->check(CLI::Range(Prime{2}, Prime{100000000}));
  ec->add_option("--bound", bound, "Point-count bound")->check(CLI::PositiveNumber);
  add_common(ec);

  // dirichlet-gen
  auto* dg = app.add_subcommand("dirichlet-gen", "Frobenius stream of a Dirichlet character mod a prime");
  unsigned modulus = 0;
  long exponent = 0;
  dg->add_option("--modulus", modulus, "Prime modulus q")->required()->check(CLI::Range(2u, 1000000u));
  dg->add_option("--exponent", exponent, "chi(g) = zeta_{q-1}^k")->required();
  dg->add_option("--pmax", pmax, "Largest prime")->required()->check(CLI::Range(Prime{2}, Prime{100000000}));
  add_common(dg);

  // transform
  auto* tr = app.add_subcommand("transform", "Record-wise transform of streams");
  std::string op_name;
  std::vector<std::string> inputs;
  std::string scalar_text;
  unsigned power = 0;
  tr->add_option("--op", op_name, "exterior2|alt2|sym2|tensor|twist|dsum|dual_twist_by_det|det|power")->required();
  tr->add_option("--in", inputs, "Input stream(s)")->required();
  tr->add_option("--scalar", scalar_text, "Twist scalar (rational or ExactScalar JSON); omit for the cyclotomic twist");
  tr->add_option("--e", power, "Direct-sum power for --op power")->check(CLI::PositiveNumber);
  add_common(tr);

  // weakdiv
  auto* wd = app.add_subcommand("weakdiv", "Scan S_{psi|rho} over shared good primes");
  std::string psi_path, rho_path, predicted_text = "1", descriptor_label, case_name;
  unsigned mult = 1;
  unsigned psi_power = 1;
  double tol = 0.0;
  Prime scan_pmax = 0;
  wd->add_option("--psi", psi_path, "psi stream")->required();
  wd->add_option("--rho", rho_path, "rho stream")->required();
  wd->add_option("--pmax", scan_pmax, "Largest prime scanned")->check(CLI::PositiveNumber);
  wd->add_option("--predicted", predicted_text, "Predicted density a/b, or none (default 1)");
  wd->add_option("--descriptor", descriptor_label, "Predict from a catalog label instead");
  wd->add_option("--case", case_name, "is_nu|finite_order_ratio|infinite_order_ratio");
  wd->add_option("--mult", mult, "Multiplicity e for --descriptor")->check(CLI::PositiveNumber);
  wd->add_option("--psi-power", psi_power, "Scan psi^{+e} instead of psi")->check(CLI::PositiveNumber);
  wd->add_option("--tol", tol, "Verdict tolerance (default max(0.02, 3 sigma))")->check(CLI::Range(0.0, 1.0));
  add_common(wd);

  // finite-oracle
  auto* fo = app.add_subcommand("finite-oracle", "Exact density over a finite group");
  int klein = -1;
  unsigned cyclic = 0;
  std::string psi_chars, rho_chars, table_path;
  fo->add_option("--klein", klein, "Klein-four table with psi = chi_i")->check(CLI::Range(0, 3));
  fo->add_option("--cyclic", cyclic, "Cyclic group order")->check(CLI::PositiveNumber);
  fo->add_option("--psi-chars", psi_chars, "Comma-separated character exponents for psi");
  fo->add_option("--rho-chars", rho_chars, "Comma-separated character exponents for rho");
  fo->add_option("--table", table_path, "FiniteRepTable JSON file");
  add_common(fo);

  // wab
  auto* wb = app.add_subcommand("wab", "Weak abelian part of a decomposition");
  std::string spec_path, candidate_path;
  wb->add_option("--spec", spec_path, "DecompositionSpec JSON")->required();
  wb->add_option("--candidate", candidate_path, "Candidate psi JSON to check");
  add_common(wb);

  // haar
  auto* hr = app.add_subcommand("haar", "Haar-measure density estimates");
  std::string group_text, mode = "eig1", tols_text = "1e-2,1e-3,1e-4";
  std::size_t samples = 100000;
  double haar_tol = 1e-6;
  unsigned haar_mult = 1;
  hr->add_option("--group", group_text, "SU2|SO3|SU3|SU2_sym2|muN:N:inner")->required();
  hr->add_option("--samples", samples, "Sample count")->check(CLI::Range(std::size_t{1}, std::size_t{100000000}));
  hr->add_option("--tol", haar_tol, "Eigenvalue (or gap) tolerance in (0, 0.1)")->check(CLI::Range(0.0, 0.1));
  hr->add_option("--mult", haar_mult, "Required multiplicity of eigenvalue 1")->check(CLI::PositiveNumber);
  hr->add_option("--mode", mode, "eig1|regss|decay")->check(CLI::IsMember({"eig1", "regss", "decay"}));
  hr->add_option("--tols", tols_text, "Decreasing tolerances for --mode decay");
  hr->add_option("--seed", cfg.seed, "RNG seed (fallback: WEAKDIV_SEED, then 42)")
      ->each([&](const std::string&) { cfg.seed_given = true; });
  add_common(hr);

  // verify-all
  auto* va = app.add_subcommand("verify-all", "Run the acceptance suite");
  va->add_option("--seed", cfg.seed, "RNG seed")->each([&](const std::string&) { cfg.seed_given = true; });
  add_common(va);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*ec) {
      const CurveSpec curve = make_curve(parse_curve(curve_text));
      write_stream_out(cfg, ec_frob_stream(curve, pmax, cfg.threads, bound));
      return 0;
    }
    if (*dg) {
      write_stream_out(cfg, dirichlet_char_stream(modulus, exponent, pmax));
      return 0;
    }
    if (*tr) {
      std::vector<FrobStream> streams;
      for (const auto& p : inputs) streams.push_back(load_stream(p));
      if (op_name == "power") {
        if (streams.size() != 1 || power == 0) throw InputError("--op power needs one --in and --e");
        write_stream_out(cfg, stream_power(streams[0], power));
        return 0;
      }
      std::optional<Cyclotomic> scalar;
      if (!scalar_text.empty()) scalar = parse_scalar(scalar_text);
      write_stream_out(cfg, stream_construct(parse_transform(op_name), streams, scalar, cfg.threads));
      return 0;
    }
    if (*wd) {
      FrobStream psi = load_stream(psi_path);
      const FrobStream rho = load_stream(rho_path);
      if (psi_power > 1) psi = stream_power(psi, psi_power);
      ScanOptions opts;
      opts.threads = cfg.threads;
      if (scan_pmax) opts.pmax = scan_pmax;
      if (tol > 0.0) opts.tolerance = tol;
      if (!descriptor_label.empty()) {
        if (case_name.empty()) throw InputError("--descriptor needs --case");
        opts.predicted = predict_density(catalog_lookup(descriptor_label), parse_char_case(case_name), mult);
      } else if (predicted_text != "none") {
        opts.predicted = parse_rational(predicted_text);
      }
      const DensityReport rep = weakdiv_scan(psi, rho, opts);
      emit(cfg, to_json(rep));
      return exit_for(rep.verdict != Verdict::inconsistent);
    }
    if (*fo) {
      FiniteRepTable table;
      if (klein >= 0) {
        table = klein_four_table(static_cast<unsigned>(klein));
      } else if (cyclic > 0) {
        if (psi_chars.empty() || rho_chars.empty()) throw InputError("--cyclic needs --psi-chars and --rho-chars");
        const auto ps = parse_list(psi_chars, "--psi-chars");
        const auto rs = parse_list(rho_chars, "--rho-chars");
        table = cyclic_table(cyclic, ps, rs);
      } else if (!table_path.empty()) {
        table = finite_table_from_json(read_json_file(table_path));
      } else {
        throw InputError("finite-oracle needs --klein, --cyclic or --table");
      }
      const Rational density = exact_finite_density(table);
      emit(cfg, Json{{"schema", "1"}, {"group_order", table.group_order}, {"density", rational_to_string(density)}});
      return 0;
    }
    if (*wb) {
      const DecompositionSpec spec = decomposition_from_json(read_json_file(spec_path));
      if (candidate_path.empty()) {
        emit(cfg, to_json(solve_wab(spec)));
        return 0;
      }
      const auto cand = candidate_from_json(read_json_file(candidate_path));
      const auto verdict = check_candidate(spec, cand);
      emit(cfg, to_json(verdict));
      return exit_for(verdict.weakly_divides);
    }
    if (*hr) {
      const std::uint64_t seed = resolve_seed(cfg);
      if (mode == "decay") {
        std::vector<double> tols;
        std::stringstream ss(tols_text);
        std::string item;
        while (std::getline(ss, item, ',')) {
          try {
            tols.push_back(std::stod(item));
          } catch (const std::exception&) {
            throw InputError("--tols entry '" + item + "' is not a number");
          }
        }
        const auto ests = su3_eigenvalue_one_decay(samples, tols, seed, cfg.threads);
        Json arr = Json::array();
        bool decreasing = true;
        for (std::size_t i = 0; i < ests.size(); ++i) {
          arr.push_back(to_json(ests[i]));
          if (i > 0 && ests[i].hits > ests[i - 1].hits) decreasing = false;
        }
        Output out(cfg.out);
        if (cfg.format == "table") {
          out.stream() << "tol\thits\trate\n";
          for (const auto& e : ests) out.stream() << e.tolerance << '\t' << e.hits << '\t' << e.rate << '\n';
        } else {
          out.stream() << Json{{"schema", "1"}, {"estimates", arr}, {"monotone", decreasing}}.dump() << '\n';
        }
        return exit_for(decreasing);
      }
      const HaarGroup g = parse_haar_group(group_text);
      const HaarEstimate est = mode == "regss" ? regular_semisimple_rate(g, samples, haar_tol, seed, cfg.threads)
                                               : eigenvalue_one_rate(g, samples, haar_tol, haar_mult, seed, cfg.threads);
      emit(cfg, to_json(est));
      return exit_for(est.consistent);
    }
    if (*va) {
      AcceptanceOptions o;
      o.threads = cfg.threads;
      o.seed = resolve_seed(cfg);
      bool all = true;
      for (const auto& r : run_acceptance(o)) {
        std::cout << format_result(r) << std::endl;
        all = all && r.passed;
      }
      return all ? 0 : 1;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const UnsupportedError& e) {
    std::cerr << "error: unsupported: " << e.what() << '\n';
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
