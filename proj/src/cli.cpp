#include "qcx/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"

#include "qcx/io.hpp"

namespace qcx::cli {

namespace {

using io::InputError;
using io::json;

std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-")
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path);
  if (!file)
    throw InputError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

io::FunctionFile load(const std::string& path, std::istream& in) {
  try {
    return io::parse_function_file(read_source(path, in));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream file(path);
  if (!file)
    throw InputError("cannot write '" + path + "'");
  file << text << '\n';
}

cplx parse_complex(const std::string& text, const char* flag) {
  std::istringstream ss(text);
  double re = 0.0;
  double im = 0.0;
  char comma = 0;
  if (!(ss >> re))
    throw InputError(std::string("flag ") + flag + " expects 're' or 're,im'");
  if (ss >> comma) {
    if (comma != ',' || !(ss >> im))
      throw InputError(std::string("flag ") + flag + " expects 're' or 're,im'");
  }
  if (ss >> comma)
    throw InputError(std::string("flag ") + flag + " has trailing characters");
  return {re, im};
}

std::size_t default_order() {
  const char* env = std::getenv("QCX_DEFAULT_N");
  if (env == nullptr || *env == '\0')
    return kDefaultTruncation;
  char* end = nullptr;
  const unsigned long long n = std::strtoull(env, &end, 10);
  if (*end != '\0' || n == 0 || n > 1'000'000)
    throw InputError("QCX_DEFAULT_N must be a positive integer");
  return static_cast<std::size_t>(n);
}

AnnulusGrid parse_grid(const std::string& spec) {
  AnnulusGrid grid;
  if (spec.empty())
    return grid;
  std::istringstream ss(spec);
  char c1 = 0;
  char c2 = 0;
  char c3 = 0;
  if (!(ss >> grid.radii >> c1 >> grid.angles >> c2 >> grid.inner_radius >> c3 >> grid.outer_radius) ||
      c1 != ',' || c2 != ',' || c3 != ',')
    throw InputError("--grid expects 'radii,angles,inner_radius,outer_radius'");
  return grid;
}

struct Options {
  // shared
  std::string file = "-";
  std::string out;
  double k = -1.0;
  // certify
  std::string test;
  double k1 = -1.0;
  double k2 = -1.0;
  double p = -1.0;
  bool sampled = false;
  // area-check
  std::size_t samples = kDefaultAreaSamples;
  // dilatation-grid
  std::string grid;
  std::string method = "closed";
  double step = kDefaultStep;
  // convolve
  std::string second;
  // extremal
  std::string a0 = "0";
  std::string a1 = "0";
  std::string family = "theorem1";
  std::size_t order = 0;
  // probe-injectivity
  std::size_t pairs = 100000;
  std::uint64_t seed = 0;
  bool enforce = false;
};

int emit(std::ostream& out, const json& j, bool pass) {
  out << j.dump(2) << '\n';
  return pass ? kPass : kFail;
}

int cmd_certify(const Options& o, std::istream& in, std::ostream& out) {
  if (o.test == "theorem3") {
    if (o.k1 < 0.0 || o.k2 < 0.0 || o.p < 0.0)
      throw InputError("--test theorem3 needs --k1, --k2 and --p");
    try {
      const auto cert = theorem3_certificate(o.k1, o.k2, o.p);
      return emit(out, io::to_json(cert), cert.valid);
    } catch (const InvalidParameter& e) {
      throw InputError(e.what());
    }
  }
  const auto file = load(o.file, in);
  if (o.test == "corollary1") {
    const auto cert = corollary1_certificate(file.function);
    return emit(out, io::to_json(cert), cert.valid);
  }
  // theorem2: omega is the omega block, or else the Taylor part itself.
  const double p = file.function.pole();
  std::vector<cplx> omega = file.omega.value_or(std::vector<cplx>(
      file.function.coeffs().begin(), file.function.coeffs().end()));
  const double tail = file.omega ? 0.0 : file.function.tail_bound();
  const auto part = AnalyticPart::polynomial(std::move(omega));
  if (o.sampled) {
    if (tail > 0.0)
      throw InputError("sampled theorem2 certificates need an exact coefficient list");
    const auto cert = theorem2_certificate_sampled([&part](cplx z) { return part.derivative(z); }, p);
    return emit(out, io::to_json(cert), cert.valid);
  }
  const auto cert = theorem2_certificate(part.derivative_bound() + tail, p);
  return emit(out, io::to_json(cert), cert.valid);
}

int cmd_area_check(const Options& o, std::istream& in, std::ostream& out) {
  if (!(o.k >= 0.0 && o.k < 1.0))
    throw InputError("--k must lie in [0, 1)");
  const auto file = load(o.file, in);
  const auto& f = file.function;
  AreaReport report;
  try {
    report = area_report(f, o.samples);
  } catch (const InvalidParameter& e) {
    throw InputError(e.what());
  }
  const auto check = area_theorem_check(f, o.k);
  json j = io::to_json(report);
  j["area_theorem"] = io::to_json(check);
  if (o.k > 0.0 && f.pole() > 0.0)
    j["a1_bound"] = io::to_json(a1_bound_check(f, o.k));
  return emit(out, j, check.pass);
}

int cmd_dilatation_grid(const Options& o, std::istream& in, std::ostream& out) {
  const auto file = load(o.file, in);
  const ExtensionMap map = io::extension_from_file(file);
  DerivativeMethod method;
  if (o.method == "fd")
    method = DerivativeMethod::finite_difference(o.step);
  else if (o.method != "closed")
    throw InputError("--method must be 'closed' or 'fd'");

  DilatationSweep sweep;
  try {
    sweep = sweep_dilatation(map, parse_grid(o.grid), method);
  } catch (const InvalidParameter& e) {
    throw InputError(e.what());
  }
  if (!o.out.empty()) {
    std::ofstream csv(o.out);
    if (!csv)
      throw InputError("cannot write '" + o.out + "'");
    io::write_dilatation_csv(csv, sweep);
  }
  const bool affine = std::holds_alternative<AffineMobius>(map.outer());
  json skipped = json::array();
  for (const cplx z : sweep.skipped)
    skipped.push_back(io::complex_to_json(z));
  json j{{"family", affine ? "theorem1" : "omega_reflection"},
         {"method", o.method},
         {"sup_dilatation", sweep.sup},
         {"inf_dilatation", sweep.inf},
         {"evaluated", sweep.evaluated},
         {"skipped", skipped}};
  if (const auto* r = std::get_if<OmegaReflection>(&map.outer())) {
    const double p = map.pole();
    j["dilatation_bound"] = (1.0 + p) * (1.0 + p) * r->omega.derivative_bound();
  }
  if (!o.out.empty())
    j["csv"] = o.out;
  return emit(out, j, sweep.sup < 1.0);
}

int cmd_convolve(const Options& o, std::istream& in, std::ostream& out) {
  const auto f = load(o.file, in);
  const auto g = load(o.second, in);
  PoledFunction h = [&] {
    try {
      return hadamard_product(f.function, g.function);
    } catch (const PoleMismatch& e) {
      throw InputError(e.what());
    }
  }();
  std::optional<MembershipCertificate> cert;
  if (o.k1 >= 0.0 || o.k2 >= 0.0) {
    if (o.k1 < 0.0 || o.k2 < 0.0)
      throw InputError("--k1 and --k2 must be given together");
    try {
      cert = theorem3_certificate(o.k1, o.k2, h.pole());
    } catch (const InvalidParameter& e) {
      throw InputError(e.what());
    }
  }
  json product = io::to_json(h);
  const bool pass = !cert || cert->valid;
  if (!o.out.empty()) {
    write_text(o.out, product.dump(2));
    if (cert)
      out << io::to_json(*cert).dump(2) << '\n';
    return pass ? kPass : kFail;
  }
  if (cert)
    product["theorem3_certificate"] = io::to_json(*cert);
  return emit(out, product, pass);
}

int cmd_extremal(const Options& o, std::ostream& out) {
  const std::size_t order = o.order > 0 ? o.order : default_order();
  const cplx a0 = parse_complex(o.a0, "--a0");
  io::FunctionFile file{PoledFunction(0.0), std::nullopt, std::nullopt};
  try {
    if (o.family == "theorem1") {
      const cplx a1 = parse_complex(o.a1, "--a1");
      file.function = extremal_theorem1(o.p, a0, a1, order);
      file.extension = AffineMobius{a0, a1};
    } else if (o.family == "chichra") {
      file.function = chichra_extremal(o.p, a0);
    } else {
      throw InputError("--family must be 'theorem1' or 'chichra'");
    }
  } catch (const InvalidParameter& e) {
    throw InputError(e.what());
  }
  const std::string text = io::to_json(file).dump(2);
  if (o.out.empty())
    out << text << '\n';
  else
    write_text(o.out, text);
  return kPass;
}

int cmd_probe(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  if (!(o.k >= 0.0 && o.k < 1.0))
    throw InputError("--k must lie in [0, 1)");
  const auto file = load(o.file, in);
  try {
    const auto report = injectivity_probe(file.function, o.k, o.pairs, o.seed, o.enforce);
    return emit(out, io::to_json(report), report.meets_bound);
  } catch (const BoundViolation& e) {
    err << "error: " << e.what() << '\n';
    return kFail;
  } catch (const InvalidParameter& e) {
    throw InputError(e.what());
  }
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quasiconformal extensions of poled univalent functions"};
  app.require_subcommand(1);
  Options o;

  auto* certify = app.add_subcommand("certify", "Membership certificate (exit 0 if witness k < 1)");
  certify->add_option("--test", o.test, "Sufficient condition to apply")
      ->required()
      ->check(CLI::IsMember({"corollary1", "theorem2", "theorem3"}));
  certify->add_option("file", o.file, "Function file ('-' for stdin)");
  certify->add_option("--k1", o.k1);
  certify->add_option("--k2", o.k2);
  certify->add_option("--p", o.p);
  certify->add_flag("--sampled", o.sampled, "theorem2: sample |omega'| on a disk grid");

  auto* area = app.add_subcommand("area-check", "Area relation and coefficient inequality");
  area->add_option("file", o.file, "Function file ('-' for stdin)");
  area->add_option("--k", o.k, "Quasiconformality constant")->required();
  area->add_option("--samples", o.samples, "Contour quadrature points");

  auto* grid = app.add_subcommand("dilatation-grid", "Sample |mu| on an annulus outside the disk");
  grid->add_option("file", o.file, "Function file ('-' for stdin)");
  grid->add_option("--grid", o.grid, "radii,angles,inner_radius,outer_radius");
  grid->add_option("--out", o.out, "CSV output path");
  grid->add_option("--method", o.method, "closed or fd");
  grid->add_option("--step", o.step, "Finite-difference step");

  auto* conv = app.add_subcommand("convolve", "Modified Hadamard product of two function files");
  conv->add_option("f", o.file)->required();
  conv->add_option("g", o.second)->required();
  conv->add_option("--out", o.out, "Output path for the product");
  conv->add_option("--k1", o.k1);
  conv->add_option("--k2", o.k2);

  auto* ext = app.add_subcommand("extremal", "Emit a closed-form extremal function");
  ext->add_option("--p", o.p)->required();
  ext->add_option("--a0", o.a0, "re or re,im");
  ext->add_option("--a1", o.a1, "re or re,im");
  ext->add_option("--family", o.family, "theorem1 or chichra");
  ext->add_option("--order", o.order, "Truncation order (default QCX_DEFAULT_N or 64)");
  ext->add_option("--out", o.out);

  auto* probe = app.add_subcommand("probe-injectivity", "Sample pairs for a univalence counterexample");
  probe->add_option("file", o.file, "Function file ('-' for stdin)");
  probe->add_option("--k", o.k)->required();
  probe->add_option("--pairs", o.pairs);
  probe->add_option("--seed", o.seed)->required();
  probe->add_flag("--enforce", o.enforce, "Treat a sub-bound ratio as a bug");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (certify->parsed())
      return cmd_certify(o, in, out);
    if (area->parsed())
      return cmd_area_check(o, in, out);
    if (grid->parsed())
      return cmd_dilatation_grid(o, in, out);
    if (conv->parsed())
      return cmd_convolve(o, in, out);
    if (ext->parsed())
      return cmd_extremal(o, out);
    if (probe->parsed())
      return cmd_probe(o, in, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

} // namespace qcx::cli
