// cqs: command-line front end.
//
//   cqs analyze (--nq N Q | --cone X1,Y1,X2,Y2) [--json | --text]
//   cqs chains  (--len M | --a A2,...,AE1) [--count-only]
//   cqs render  (--nq N Q | --cone ...) --out DIR [--scale PX]
//   cqs sweep   [--max-n N] [--oracle] [--jobs J] [--keep-going]
//
// Exit codes: 0 ok, 1 usage, 2 domain, 3 consistency failure.

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cqs/cqs.hpp"
#include "cqs/report/json.hpp"
#include "cqs/report/svg.hpp"
#include "cqs/report/text.hpp"
#include "cqs/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitConsistency = 3;

constexpr const char* kVersion = "cqs 1.0.0";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

cqs::Int parse_int(const std::string& s) {
  std::size_t i = (s.size() > 1 && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size() || s.find_first_not_of("0123456789", i) != std::string::npos)
    throw UsageError("not an integer: '" + s + "'");
  return cqs::Int(s[0] == '+' ? s.substr(1) : s);
}

std::vector<cqs::Int> parse_list(const std::string& s) {
  std::vector<cqs::Int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_int(item));
  if (out.empty()) throw UsageError("empty list");
  return out;
}

struct SingularityArgs {
  std::vector<std::string> nq;
  std::string cone;

  void add_to(CLI::App* cmd) {
    auto* o_nq = cmd->add_option("--nq", nq, "Y(n,q) given by N Q")->expected(2);
    auto* o_cone = cmd->add_option("--cone", cone, "cone generators X1,Y1,X2,Y2");
    o_nq->excludes(o_cone);
    o_cone->excludes(o_nq);
  }

  cqs::report::InputEcho echo() const {
    cqs::report::InputEcho in;
    if (!cone.empty()) {
      std::vector<cqs::Int> xs = parse_list(cone);
      if (xs.size() != 4) throw UsageError("--cone needs four integers X1,Y1,X2,Y2");
      in.kind = cqs::report::InputEcho::Kind::Cone;
      in.cone = {{xs[0], xs[1]}, {xs[2], xs[3]}};
    } else if (nq.size() == 2) {
      in.n = parse_int(nq[0]);
      in.q = parse_int(nq[1]);
    } else {
      throw UsageError("one of --nq N Q or --cone X1,Y1,X2,Y2 is required");
    }
    return in;
  }

  static cqs::NormalForm normal_form(const cqs::report::InputEcho& in) {
    if (in.kind == cqs::report::InputEcho::Kind::Cone) return cqs::normalize_cone(in.cone);
    return cqs::normal_form(in.n, in.q);
  }
};

int run_analyze(const SingularityArgs& args, bool json) {
  cqs::report::InputEcho in = args.echo();
  cqs::SingularityReport rep = cqs::component_table(SingularityArgs::normal_form(in));
  if (json) {
    std::cout << cqs::report::serialize(cqs::report::to_json(in, rep));
    for (const std::string& w : rep.warnings) std::cerr << "warning: " << w << "\n";
  } else {
    std::cout << cqs::report::to_text(rep);
  }
  return kExitOk;
}

int run_chains(long long len, const std::string& a_list, bool count_only) {
  std::vector<cqs::KChain> chains;
  if (!a_list.empty()) {
    cqs::CoeffChain a{parse_list(a_list), cqs::ChainRole::A};
    for (const cqs::Int& x : a.coefficients)
      if (x < 2) throw UsageError("a-chain entries must be >= 2");
    chains = cqs::enumerate_KY(a);
  } else if (len >= 1) {
    chains = cqs::enumerate_K(static_cast<std::size_t>(len));
  } else {
    throw UsageError("one of --len M (M >= 1) or --a A2,...,AE1 is required");
  }
  if (count_only) {
    std::cout << chains.size() << "\n";
    return kExitOk;
  }
  for (const cqs::KChain& c : chains)
    std::cout << "(" << cqs::join(c.k) << ")  q = (" << cqs::join(c.q_seq) << ")\n";
  return kExitOk;
}

int run_render(const SingularityArgs& args, const std::string& out_dir, int scale) {
  if (scale <= 0) throw UsageError("--scale must be positive");
  cqs::report::InputEcho in = args.echo();
  cqs::SingularityReport rep = cqs::component_table(SingularityArgs::normal_form(in));
  cqs::report::SvgStyle style;
  style.scale = scale;
  std::vector<cqs::report::SvgFile> files = cqs::report::render_all(rep, style);

  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  for (const cqs::report::SvgFile& f : files) {
    fs::path path = fs::path(out_dir) / f.name;
    std::ofstream os(path, std::ios::binary);
    os << f.content;
    if (!os) {
      std::cerr << "cqs render: cannot write " << path.string() << "\n";
      return kExitUsage;
    }
    std::cout << path.string() << "\n";
  }
  return kExitOk;
}

int run_sweep_cmd(const cqs::SweepOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  cqs::SweepSummary s = cqs::run_sweep(opts);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "singularities " << s.singularities << "\n";
  std::cout << "components " << s.components << "\n";
  std::cout << "max components " << s.max_components << " at Y(" << s.max_components_at.first << ","
            << s.max_components_at.second << ")\n";
  if (opts.oracle)
    std::cout << "oracle singularities " << s.oracle_singularities << " fans " << s.oracle_fans
              << " (equal to chain fans)\n";
  std::cout << "mismatches " << s.mismatches.size() << "\n";
  std::cerr << "elapsed " << secs << " s\n";
  if (s.ok()) return kExitOk;
  if (opts.keep_going)
    for (const cqs::Mismatch& m : s.mismatches) std::cerr << "mismatch " << m.repro() << "\n";
  else
    std::cerr << "mismatch " << s.mismatches.front().repro() << "\n";
  return kExitConsistency;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deformation invariants of two-dimensional cyclic quotient singularities", "cqs"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  SingularityArgs analyze_args;
  bool json = false, text = false;
  auto* analyze = app.add_subcommand("analyze", "P-resolutions, Milnor numbers and component dimensions");
  analyze_args.add_to(analyze);
  auto* o_json = analyze->add_flag("--json", json, "emit the JSON document");
  auto* o_text = analyze->add_flag("--text", text, "emit a text report (default)");
  o_json->excludes(o_text);

  long long len = 0;
  std::string a_list;
  bool count_only = false;
  auto* chains = app.add_subcommand("chains", "zero continued fractions K_m or K(Y)");
  auto* o_len = chains->add_option("--len", len, "chain length M");
  auto* o_a = chains->add_option("--a", a_list, "a-chain A2,...,AE1");
  o_len->excludes(o_a);
  chains->add_flag("--count-only", count_only, "print only the number of chains");

  SingularityArgs render_args;
  std::string out_dir;
  int scale = cqs::report::SvgStyle{}.scale;
  auto* render = app.add_subcommand("render", "SVG figures of the minimal resolution and P-resolutions");
  render_args.add_to(render);
  render->add_option("--out", out_dir, "output directory")->required();
  render->add_option("--scale", scale, "pixels per lattice unit");

  cqs::SweepOptions sweep_opts;
  auto* sweep = app.add_subcommand("sweep", "cross-formula consistency sweep");
  sweep->add_option("--max-n", sweep_opts.max_n, "largest n");
  sweep->add_flag("--oracle", sweep_opts.oracle, "compare with brute-force ray subsets for n <= 20");
  sweep->add_option("--jobs", sweep_opts.jobs, "worker threads (0: all cores)");
  sweep->add_flag("--keep-going", sweep_opts.keep_going, "report every mismatch");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) return run_analyze(analyze_args, json);
    if (*chains) return run_chains(len, a_list, count_only);
    if (*render) return run_render(render_args, out_dir, scale);
    if (*sweep) return run_sweep_cmd(sweep_opts);
  } catch (const UsageError& e) {
    std::cerr << "cqs: " << e.what() << "\n";
    return kExitUsage;
  } catch (const cqs::DomainError& e) {
    std::cerr << "cqs: " << e.what() << "\n";
    return kExitDomain;
  } catch (const cqs::ResourceError& e) {
    std::cerr << "cqs: " << e.what() << "\n";
    return kExitDomain;
  } catch (const cqs::ConsistencyError& e) {
    std::cerr << "cqs: consistency failure: " << e.what() << "\n";
    return kExitConsistency;
  } catch (const cqs::ValidationError& e) {
    std::cerr << "cqs: consistency failure: " << e.what() << "\n";
    return kExitConsistency;
  }
  return kExitUsage;
}
