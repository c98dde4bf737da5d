#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "pseudoprob/error.hpp"
#include "pseudoprob/json_io.hpp"
#include "pseudoprob/qubit_forms.hpp"
#include "pseudoprob/scan.hpp"

namespace pseudoprob::cli {

namespace {

struct Common {
  std::string out_path;
  std::string format = "json";
  std::uint64_t seed = 0;
  bool deterministic = false;
  double eps = kClassicalEps;
  bool degrees = false;
};

void add_common(CLI::App& sub, Common& c) {
  sub.add_option("--out", c.out_path, "Write output to this file instead of stdout");
  sub.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  sub.add_option("--seed", c.seed, "PRNG seed");
  sub.add_flag("--deterministic", c.deterministic, "Omit the timestamp from metadata");
  sub.add_option("--eps", c.eps, "Classicality tolerance")->check(CLI::NonNegativeNumber);
  sub.add_flag("--degrees", c.degrees, "Angle inputs are in degrees");
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void stamp(Json& metadata, const Common& c) {
  if (!c.deterministic) metadata["timestamp"] = utc_timestamp();
}

double angle(double v, const Common& c) { return c.degrees ? v * std::numbers::pi / 180.0 : v; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(errc::kParse, "cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void emit(const std::string& text, const Common& c, std::ostream& out) {
  if (c.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out_path);
  if (!f) throw Error(errc::kParse, "cannot write '" + c.out_path + "'");
  f << text;
}

std::vector<double> split_numbers(const std::string& text, const char* what) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw Error(errc::kParse, std::string("bad number '") + item + "' in " + what);
    }
  }
  return values;
}

Vec3 vec3_arg(const std::string& text, const char* what) {
  const auto v = split_numbers(text, what);
  if (v.size() != 3) throw Error(errc::kParse, std::string(what) + " needs three comma-separated numbers");
  return {v[0], v[1], v[2]};
}

std::vector<Direction> parse_dirs(const std::vector<std::string>& tokens) {
  if (tokens.size() == 1 && tokens[0] == "coplanar120") {
    const auto g = TripleGeometry::coplanar120(BlochVector({0.0, 0.0, 0.0}));
    return {g.m().begin(), g.m().end()};
  }
  std::vector<Direction> dirs;
  for (const auto& t : tokens) {
    const bool neg = !t.empty() && t[0] == '-' && t.size() == 2;
    const std::string axis = neg ? t.substr(1) : t;
    std::optional<Direction> d;
    if (axis == "x") d = Direction::x();
    else if (axis == "y") d = Direction::y();
    else if (axis == "z") d = Direction::z();
    else if (t == "coplanar120") throw Error(errc::kParse, "coplanar120 must be the only direction");
    else d = Direction(vec3_arg(t, "--dirs"));
    dirs.push_back(neg ? d->flipped() : *d);
  }
  return dirs;
}

std::vector<Direction> dirs_from_json(const nlohmann::json& j) {
  const nlohmann::json& list = j.is_object() && j.contains("dirs") ? j.at("dirs") : j;
  if (!list.is_array()) throw Error(errc::kParse, "direction file must hold an array of {\"m\": [...]}");
  std::vector<Direction> dirs;
  for (const auto& d : list) dirs.push_back(direction_from_json(d));
  return dirs;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string scan_text(ScanResult r, const Common& c, std::ostream& err) {
  for (const auto& w : r.warnings) err << "warning: " << w << '\n';
  stamp(r.metadata, c);
  return c.format == "csv" ? scan_to_csv(r) : dump(scan_to_json(r));
}

// --- scheme ---------------------------------------------------------------

struct SchemeArgs {
  std::string bloch;
  std::string state_file;
  std::vector<std::string> dirs;
  std::string dirs_file;
  std::string recipe = "weyl";
};

std::string run_scheme(const SchemeArgs& a, const Common& c) {
  if (a.bloch.empty() == a.state_file.empty()) throw Error(errc::kParse, "give exactly one of --bloch or --state");
  if (a.dirs.empty() == a.dirs_file.empty()) throw Error(errc::kParse, "give exactly one of --dirs or --dirs-file");
  const DensityMatrix rho = a.bloch.empty() ? state_from_json(parse_json(read_file(a.state_file)))
                                            : density_from_bloch(BlochVector(vec3_arg(a.bloch, "--bloch")));
  const auto dirs = a.dirs.empty() ? dirs_from_json(parse_json(read_file(a.dirs_file))) : parse_dirs(a.dirs);
  if (dirs.empty() || dirs.size() > kMaxGenerators) {
    throw Error(errc::kParse, "need between 1 and " + std::to_string(kMaxGenerators) + " directions");
  }
  std::vector<Observable> obs;
  for (const auto& d : dirs) obs.push_back(Observable::qubit(d));
  if (rho.dim() != 2) throw Error(errc::kDimMismatch, "direction observables need a qubit state");
  const Scheme s = build_scheme(rho, obs, OrderingRecipe::parse(a.recipe));

  if (c.format == "csv") {
    std::ostringstream o;
    o << "# negativity=" << format_double(negativity(s)) << '\n';
    o << "# classical=" << (classify(s, c.eps).classical ? "true" : "false") << '\n';
    o << scheme_to_csv(s);
    return o.str();
  }
  Json j = scheme_to_json(s, c.eps);
  Json meta = {{"tool", "pseudoprob"}, {"version", kVersion}, {"eps", c.eps}};
  stamp(meta, c);
  j["metadata"] = meta;
  return dump(j);
}

// --- entanglement ---------------------------------------------------------

struct EntanglementArgs {
  std::optional<double> schmidt_alpha;
  std::string amps;
  std::string amps_im;
  std::string state_file;
  int subsystem = 0;
};

constexpr double kInputNormTolerance = 1e-8;

std::string run_entanglement(const EntanglementArgs& a, const Common& c) {
  const int given = int(a.schmidt_alpha.has_value()) + int(!a.amps.empty()) + int(!a.state_file.empty());
  if (given != 1) throw Error(errc::kParse, "give exactly one of --schmidt-alpha, --amps or --state");
  std::optional<TwoQubitPureState> psi;
  if (a.schmidt_alpha) {
    psi = TwoQubitPureState::schmidt(angle(*a.schmidt_alpha, c));
  } else if (!a.amps.empty()) {
    const auto re = split_numbers(a.amps, "--amps");
    const auto im = a.amps_im.empty() ? std::vector<double>(4, 0.0) : split_numbers(a.amps_im, "--amps-im");
    if (re.size() != 4 || im.size() != 4) throw Error(errc::kParse, "amplitudes need four comma-separated numbers");
    std::array<Complex, 4> amps{};
    for (std::size_t k = 0; k < 4; ++k) amps[k] = Complex(re[k], im[k]);
    psi = TwoQubitPureState(amps, kInputNormTolerance);
  } else {
    psi = two_qubit_state_from_json(parse_json(read_file(a.state_file)), kInputNormTolerance);
  }
  const MonotoneReport r = entanglement_report(*psi, a.subsystem);
  if (c.format == "csv") {
    return "reduced_bloch_norm,n_max_reduced,monotone\n" + format_double(r.reduced_bloch_norm) + "," +
           format_double(r.n_max_reduced) + "," + format_double(r.monotone.m) + "\n";
  }
  Json j = {{"reduced_bloch_norm", r.reduced_bloch_norm},
            {"n_max_reduced", r.n_max_reduced},
            {"monotone", r.monotone.m}};
  Json meta = {{"tool", "pseudoprob"}, {"version", kVersion}, {"normalization_tolerance", kInputNormTolerance}};
  stamp(meta, c);
  j["metadata"] = meta;
  return dump(j);
}

std::pair<std::size_t, std::size_t> parse_ranks(const std::string& text) {
  const auto v = split_numbers(text, "--ranks");
  if (v.size() != 2 || v[0] < 0 || v[1] < 0 || v[0] != std::floor(v[0]) || v[1] != std::floor(v[1])) {
    throw Error(errc::kParse, "--ranks needs two non-negative integers 'a,b'");
  }
  return {static_cast<std::size_t>(v[0]), static_cast<std::size_t>(v[1])};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pseudo-probability schemes, negativity and classicality scans", "pseudoprob"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Common common;

  SchemeArgs scheme_args;
  auto* scheme = app.add_subcommand("scheme", "Evaluate the pseudo-probability scheme of a qubit state");
  add_common(*scheme, common);
  scheme->add_option("--bloch", scheme_args.bloch, "Bloch vector x,y,z");
  scheme->add_option("--state", scheme_args.state_file, "State JSON file");
  scheme->add_option("--dirs", scheme_args.dirs, "Directions: x y z -x ..., 'a,b,c' or the preset coplanar120");
  scheme->add_option("--dirs-file", scheme_args.dirs_file, "JSON array of {\"m\": [x,y,z]}");
  scheme->add_option("--recipe", scheme_args.recipe, "weyl | unit:k | weights:w0,w1,...");

  NegativityScanParams neg;
  auto* scan_neg = app.add_subcommand("scan-negativity", "Negativity versus angle for the aligned pair geometry");
  add_common(*scan_neg, common);
  scan_neg->add_option("--pnorm", neg.pnorm, "|P|")->check(CLI::Range(0.0, 1.0));
  scan_neg->add_option("--theta-min", neg.theta_min, "Start angle");
  std::optional<double> theta_max;
  scan_neg->add_option("--theta-max", theta_max, "End angle (default pi)");
  scan_neg->add_option("--steps", neg.steps, "Grid points, >= 2")->check(CLI::Range(std::size_t{2}, std::size_t{10000000}));

  ClassicalRegionParams region;
  std::string family = "orthogonal-pair";
  auto* region_cmd = app.add_subcommand("classical-region", "Estimate the classical region of the Bloch ball");
  add_common(*region_cmd, common);
  region_cmd->add_option("--family", family)->check(CLI::IsMember({"orthogonal-pair", "orthogonal-triple", "free-pair"}));
  region_cmd->add_option("--samples", region.samples, "Monte Carlo states, >= 1")
      ->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()));
  region_cmd->add_option("--geometry-steps", region.geometry_steps, "Angles per state (free-pair)")
      ->check(CLI::PositiveNumber);
  region_cmd->add_option("--random-frames", region.random_frames, "Random cross-check frames per state");
  region_cmd->add_option("--radial-bins", region.radial_bins, "Histogram bins in |P|")->check(CLI::PositiveNumber);
  region_cmd->add_option("--threads", region.threads, "Worker threads (0 = all cores)");

  SpectrumScanParams spectrum_params;
  std::string ranks = "1,1";
  auto* spectrum = app.add_subcommand("spectrum", "Spectra of symmetrized products of random projector pairs");
  add_common(*spectrum, common);
  spectrum->add_option("--dim", spectrum_params.dim, "Hilbert-space dimension")->check(CLI::Range(std::size_t{2}, std::size_t{16}));
  spectrum->add_option("--ranks", ranks, "Projector ranks a,b");
  spectrum->add_option("--pairs", spectrum_params.pairs, "Number of pairs")
      ->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()));
  spectrum->add_flag("--commuting", spectrum_params.commuting, "Draw both projectors from one eigenbasis");
  spectrum->add_option("--threads", spectrum_params.threads, "Worker threads (0 = all cores)");

  EntanglementArgs ent;
  auto* entanglement = app.add_subcommand("entanglement", "Entanglement monotone of a two-qubit pure state");
  add_common(*entanglement, common);
  entanglement->add_option("--schmidt-alpha", ent.schmidt_alpha, "cos(a)|00> + sin(a)|11>");
  entanglement->add_option("--amps", ent.amps, "Real parts of the amplitudes of |00>,|01>,|10>,|11>");
  entanglement->add_option("--amps-im", ent.amps_im, "Imaginary parts");
  entanglement->add_option("--state", ent.state_file, "Two-qubit state JSON file");
  entanglement->add_option("--subsystem", ent.subsystem, "Qubit kept in the reduced state")->check(CLI::IsMember({0, 1}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    std::string text;
    if (scheme->parsed()) {
      text = run_scheme(scheme_args, common);
    } else if (scan_neg->parsed()) {
      neg.theta_min = angle(neg.theta_min, common);
      if (theta_max) neg.theta_max = angle(*theta_max, common);
      text = scan_text(scan_negativity(neg), common, err);
    } else if (region_cmd->parsed()) {
      region.family = parse_region_family(family);
      region.seed = common.seed;
      region.eps = common.eps;
      text = scan_text(classical_region(region), common, err);
    } else if (spectrum->parsed()) {
      std::tie(spectrum_params.rank_a, spectrum_params.rank_b) = parse_ranks(ranks);
      spectrum_params.seed = common.seed;
      text = scan_text(spectrum_scan(spectrum_params), common, err);
    } else {
      text = run_entanglement(ent, common);
    }
    emit(text, common, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == errc::kParse ? kExitUsage : kExitDomain;
  }
  return kExitOk;
}

}  // namespace pseudoprob::cli
