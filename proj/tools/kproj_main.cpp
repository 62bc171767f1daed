#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kproj/io.hpp"
#include "kproj/svg.hpp"

namespace {

// exit codes: 0 pass, 2 condition failure, 3 lemma failure,
// 64 usage error, 65 depth-guard violation, 74 I/O error
constexpr int kExitCondition = 2;
constexpr int kExitLemma = 3;
constexpr int kExitUsage = 64;
constexpr int kExitDepthGuard = 65;
constexpr int kExitIo = 74;

struct Cli {
  std::string config_path;
  std::string case_label;
  double lambda = 0.0;
  double q = 0.0;
  int depth = 0;
  std::string range;
  std::string out_dir;
  std::string formats;
  std::string precision;

  std::string lemma;
  std::string point;
  std::string grid;
};

std::pair<int, int> parse_range(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("range must be n0:n1");
  return {std::stoi(s.substr(0, colon)), std::stoi(s.substr(colon + 1))};
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (pos <= s.size()) {
    const size_t comma = s.find(',', pos);
    if (comma == std::string::npos) {
      out.push_back(s.substr(pos));
      break;
    }
    out.push_back(s.substr(pos, comma - pos));
    pos = comma + 1;
  }
  return out;
}

kproj::RunConfig resolve_config(const Cli& cli) {
  kproj::RunConfig cfg;
  if (!cli.config_path.empty())
    cfg = kproj::config_from_json(kproj::read_file(cli.config_path));
  if (!cli.case_label.empty()) {
    const auto family = kproj::case_from_string(cli.case_label);
    if (!family) throw std::invalid_argument("unknown case: " + cli.case_label);
    cfg.family = *family;
  }
  if (cli.lambda != 0.0) cfg.lambda = cli.lambda;
  if (cli.q != 0.0) cfg.q = cli.q;
  if (cli.depth != 0) cfg.depth = cli.depth;
  if (!cli.range.empty()) {
    const auto [n0, n1] = parse_range(cli.range);
    cfg.n0 = n0;
    cfg.n1 = n1;
  }
  if (!cli.out_dir.empty()) cfg.out_dir = cli.out_dir;
  if (!cli.formats.empty()) cfg.formats = split_commas(cli.formats);
  if (!cli.precision.empty())
    cfg.mode = cli.precision == "extended" ? kproj::Precision::extended
                                           : kproj::Precision::standard;
  cfg.apply_defaults();
  return cfg;
}

bool wants(const kproj::RunConfig& cfg, const std::string& fmt) {
  for (const auto& f : cfg.formats)
    if (f == fmt) return true;
  return false;
}

void guard_range(const kproj::RunConfig& cfg) {
  if (cfg.n1 > cfg.depth - 2)
    throw std::out_of_range("range end " + std::to_string(cfg.n1) +
                            " is not truncation-safe at depth " +
                            std::to_string(cfg.depth));
}

std::string out_path(const kproj::RunConfig& cfg, const std::string& name) {
  std::filesystem::create_directories(cfg.out_dir);
  return (std::filesystem::path(cfg.out_dir) / name).string();
}

int cmd_validate(const kproj::RunConfig& cfg) {
  const kproj::AlphaSequence seq = cfg.make_sequence();
  const int horizon = 64;
  const kproj::ConditionReport rep =
      kproj::check_condition_c1(seq, horizon);
  if (!rep.first_failure) {
    std::cout << "condition holds up to n=" << rep.checked_up_to
              << "; min_index=" << seq.min_index() << "\n";
    return 0;
  }
  try {
    const int n_min = kproj::min_valid_index(seq, horizon);
    std::cout << "condition fails first at n=" << *rep.first_failure
              << " but holds from min_index=" << n_min << " on\n";
    return 0;
  } catch (const std::domain_error&) {
    std::cout << "condition fails first at n=" << *rep.first_failure
              << " with no valid tail before n=" << horizon << "\n";
    return kExitCondition;
  }
}

int cmd_construct(const kproj::RunConfig& cfg) {
  const kproj::BoundaryModel model =
      kproj::build_boundary(cfg.make_sequence(), cfg.depth);
  if (wants(cfg, "json"))
    kproj::write_file(out_path(cfg, "boundary.json"),
                      kproj::boundary_to_json(model));
  if (wants(cfg, "svg"))
    kproj::write_file(out_path(cfg, "boundary.svg"),
                      kproj::boundary_svg(model, cfg.n0, cfg.n1));
  std::cout << "built " << model.pieces.size() << " pieces at depth "
            << cfg.depth << "\n";
  return 0;
}

int cmd_project(const kproj::RunConfig& cfg, const std::string& point) {
  const auto comma = point.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("--point must be X,Y");
  const kproj::Point2 p{std::stod(point.substr(0, comma)),
                        std::stod(point.substr(comma + 1))};
  const kproj::BoundaryModel model =
      kproj::build_boundary(cfg.make_sequence(), cfg.depth);
  std::cout << kproj::projection_to_json(kproj::project(model, p)) << "\n";
  return 0;
}

int cmd_verify(const kproj::RunConfig& cfg, const std::string& lemma) {
  guard_range(cfg);
  const kproj::BoundaryModel model =
      kproj::build_boundary(cfg.make_sequence(), cfg.depth);
  const kproj::LemmaReport report =
      kproj::run_lemma(lemma, model, cfg.n0, cfg.n1);
  if (wants(cfg, "json"))
    kproj::write_file(out_path(cfg, lemma + ".json"),
                      kproj::lemma_report_to_json(report, cfg));
  if (wants(cfg, "csv"))
    kproj::write_file(out_path(cfg, lemma + ".csv"),
                      kproj::lemma_csv(report));
  std::cout << report.lemma << ": " << (report.pass ? "pass" : "FAIL")
            << " (max deviation " << kproj::format_double(report.max_deviation)
            << ", tolerance " << kproj::format_double(report.tolerance) << ")";
  if (!report.notes.empty()) std::cout << " [" << report.notes << "]";
  std::cout << "\n";
  return report.pass ? 0 : kExitLemma;
}

int cmd_quotients(const kproj::RunConfig& cfg, const std::string& grid) {
  const kproj::AlphaSequence seq = cfg.make_sequence();
  const kproj::BoundaryModel model = kproj::build_boundary(seq, cfg.depth);
  std::vector<kproj::QuotientSample> samples;
  std::vector<double> t_marks, s_marks;

  std::string kind = "params";
  int lo = cfg.n0, hi = cfg.n1;
  if (!grid.empty()) {
    const auto first = grid.find(':');
    if (first == std::string::npos)
      throw std::invalid_argument("--grid must be kind:n0:n1");
    kind = grid.substr(0, first);
    const auto [a, b] = parse_range(grid.substr(first + 1));
    lo = a;
    hi = b;
  }
  if (kind == "dyadic") {
    if (lo < 0 || hi < lo)
      throw std::invalid_argument("dyadic grid needs 0 <= k0 <= k1");
    for (int k = lo; k <= hi; ++k)
      samples.push_back(kproj::quotient(model, std::ldexp(1.0, -k)));
  } else if (kind == "params") {
    guard_range(cfg);
    const int start = std::max(lo, seq.min_index() + 1);
    for (int n = start; n <= hi; ++n) {
      kproj::QuotientSample at_t;
      at_t.theta = kproj::param_t(seq, n);
      at_t.projected = kproj::midpoint_T(seq, n);
      at_t.quotient = kproj::quotient_at_t(seq, n);
      at_t.truncation_safe = true;
      samples.push_back(at_t);
      t_marks.push_back(at_t.theta);

      kproj::QuotientSample at_s;
      at_s.theta = kproj::param_s(seq, n);
      at_s.projected = kproj::tangency_S(seq, n);
      at_s.quotient = kproj::quotient_at_s(seq, n);
      at_s.truncation_safe = true;
      samples.push_back(at_s);
      s_marks.push_back(at_s.theta);
    }
  } else {
    throw std::invalid_argument("unknown grid kind: " + kind);
  }

  if (wants(cfg, "csv"))
    kproj::write_file(out_path(cfg, "quotients.csv"),
                      kproj::quotients_csv(samples));
  if (wants(cfg, "svg"))
    kproj::write_file(out_path(cfg, "quotients.svg"),
                      kproj::quotient_svg(samples, t_marks, s_marks));
  std::cout << "sampled " << samples.size() << " quotients\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"piecewise arc-segment convex body: construction, exact "
               "metric projection, and limit verification"};
  app.require_subcommand(1);
  app.fallthrough();

  Cli cli;
  app.add_option("--config", cli.config_path, "JSON config file");
  app.add_option("--case", cli.case_label, "angle family: A, B, or C");
  app.add_option("--lambda", cli.lambda, "ratio for families B and C");
  app.add_option("--q", cli.q, "exponent for family A");
  app.add_option("--depth", cli.depth, "boundary build depth");
  app.add_option("--range", cli.range, "index range n0:n1");
  app.add_option("--out", cli.out_dir, "output directory");
  app.add_option("--format", cli.formats, "comma list of csv,json,svg");
  app.add_option("--precision", cli.precision, "standard or extended");

  CLI::App* validate = app.add_subcommand("validate", "check the angle "
                                          "sequence conditions");
  CLI::App* construct = app.add_subcommand("construct", "build and export "
                                           "the boundary");
  CLI::App* project = app.add_subcommand("project", "project a point onto "
                                         "the body");
  project->add_option("--point", cli.point, "query point X,Y")->required();
  CLI::App* verify = app.add_subcommand("verify", "run a named verifier");
  verify->add_option("--lemma", cli.lemma, "verifier id")->required();
  CLI::App* quotients = app.add_subcommand("quotients", "sample projection "
                                           "difference quotients");
  quotients->add_option("--grid", cli.grid,
                        "dyadic:k0:k1 or params:n0:n1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const kproj::RunConfig cfg = resolve_config(cli);
    if (validate->parsed()) return cmd_validate(cfg);
    if (construct->parsed()) return cmd_construct(cfg);
    if (project->parsed()) return cmd_project(cfg, cli.point);
    if (verify->parsed()) return cmd_verify(cfg, cli.lemma);
    if (quotients->parsed()) return cmd_quotients(cfg, cli.grid);
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "depth guard: " << e.what() << "\n";
    return kExitDepthGuard;
  } catch (const std::domain_error& e) {
    std::cerr << "degenerate construction: " << e.what() << "\n";
    return kExitCondition;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
}
