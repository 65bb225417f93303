#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <optional>
#include <regex>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "thurstonkit/errors.hpp"
#include "thurstonkit/json_io.hpp"
#include "thurstonkit/pretzel.hpp"
#include "thurstonkit/wrapping.hpp"

namespace thurstonkit::cli {
namespace {

using nlohmann::json;

void setup_logging() {
  static std::once_flag once;
  std::call_once(once, [] {
    auto logger = spdlog::stderr_color_mt("thurstonkit");
    const char* level = std::getenv("THURSTONKIT_LOG");
    logger->set_level(level ? spdlog::level::from_str(level) : spdlog::level::warn);
    spdlog::set_default_logger(logger);
  });
}

struct Range {
  std::int64_t lo = 0;
  std::int64_t hi = -1;
};

Range parse_range(const std::string& text, const char* flag) {
  static const std::regex pattern(R"(^\s*(-?\d+)\s*(?:\.\.\s*(-?\d+)\s*)?$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) {
    throw ContractViolation(std::string(flag) + ": expected an integer or a range lo..hi, got '" + text + "'");
  }
  const std::int64_t lo = std::stoll(m[1].str());
  const std::int64_t hi = m[2].matched ? std::stoll(m[2].str()) : lo;
  return {lo, hi};
}

RatVec parse_class(const std::string& text) {
  std::vector<Rat> coords;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    try {
      coords.push_back(Rat::parse(item));
    } catch (const Error&) {
      throw MalformedInput("--class: '" + item + "' is not a rational");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return RatVec(std::move(coords));
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream f(path);
  if (!f) throw MalformedInput("cannot write '" + path + "'");
  f << body;
}

void write_json(const std::string& path, const json& j) { write_file(path, j.dump(2) + "\n"); }

void print_vectors(std::ostream& out, const char* label, const std::vector<RatVec>& vs) {
  out << label << " (" << vs.size() << "):\n";
  for (const auto& v : vs) out << "  " << v.str() << "\n";
}

void print_halfspaces(std::ostream& out, const char* label, const std::vector<HalfSpace>& hs, const char* rel) {
  out << label << " (" << hs.size() << "):\n";
  for (const auto& h : hs) out << "  " << h.normal.str() << " . x " << rel << " " << h.rhs.str() << "\n";
}

struct Params {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  PretzelParams get() const { return {a, b, c}; }
};

void add_params(CLI::App* sub, Params& p) {
  sub->add_option("--a", p.a, "twist parameter a (2a half twists)")->required()->allow_extra_args(false);
  sub->add_option("--b", p.b, "twist parameter b")->required()->allow_extra_args(false);
  sub->add_option("--c", p.c, "twist parameter c")->required()->allow_extra_args(false);
}

int cmd_ball(const PretzelParams& p, const std::string& json_path, const std::string& off_path, std::ostream& out) {
  const CaseTag tag = classify(p);
  out << space_tag(p) << " " << to_string(tag) << "\n";
  try {
    const VRep ball = thurston_ball(p);
    const HRep facets = v_to_h(ball);
    print_vectors(out, "vertices", ball.vertices);
    if (!ball.lineality.empty()) print_vectors(out, "lineality", ball.lineality);
    print_halfspaces(out, "facets", facets.halfspaces, "<=");
    if (!json_path.empty()) {
      json j = polytope_json(ball, facets);
      j["link"] = space_tag(p);
      j["case"] = std::string(to_string(tag));
      write_json(json_path, j);
    }
    if (!off_path.empty()) write_file(off_path, to_off(ball));
  } catch (const UnknownRegion& e) {
    out << "unknown: " << e.what() << "\n";
    print_halfspaces(out, "outer bound, not the ball", e.outer_bound().halfspaces, "<=");
    if (!json_path.empty()) {
      json j;
      j["link"] = space_tag(p);
      j["case"] = std::string(to_string(tag));
      j["ball"] = "unknown";
      json hs = json::array();
      for (const auto& h : e.outer_bound().halfspaces) hs.push_back(to_json(h));
      j["outer_bound"] = {{"kind", "upper_bound_only"}, {"facets", hs}};
      write_json(json_path, j);
    }
    if (!off_path.empty()) throw;
  }
  return 0;
}

int cmd_verify(const PretzelParams& p, const VerifyOptions& opts, const std::string& json_path, std::ostream& out) {
  const CaseReport r = verify_case(p, opts);
  out << space_tag(p) << " " << to_string(r.tag) << (r.degenerate ? " (degenerate)" : "") << "\n";
  std::size_t passed = 0;
  for (const auto& c : r.checks) {
    out << (c.pass ? "  PASS " : "  FAIL ") << c.name << "\n";
    if (!c.pass) out << "       " << c.detail.dump() << "\n";
    passed += c.pass;
  }
  out << passed << "/" << r.checks.size() << " checks pass\n";
  if (!json_path.empty()) write_json(json_path, r.to_json());
  return r.passed() ? 0 : 1;
}

int cmd_wrap(const PretzelParams& p, const std::string& json_path, std::ostream& out) {
  const ScenarioReport r = baker_taylor_scenario(p);
  auto show = [](const std::optional<Rat>& v) { return v ? v->str() : std::string("uncertified"); };
  out << space_tag(p) << " alpha = " << bracket_str(r.alpha.coords) << ", beta = " << bracket_str(r.beta.coords) << "\n";
  out << "  wrap(alpha) = " << show(r.wrap_alpha) << "\n";
  out << "  wrap(beta) = " << show(r.wrap_beta) << "\n";
  out << "  wrap(alpha+beta) = " << show(r.wrap_sum) << "\n";
  out << "  defect = " << show(r.defect) << "\n";
  for (const auto& h : r.hypotheses) out << (h.pass ? "  PASS " : "  FAIL ") << "hypothesis " << h.name << "\n";
  for (const auto& c : r.checks) out << (c.pass ? "  PASS " : "  FAIL ") << c.name << "\n";
  for (const auto& n : r.notes) out << "  note: " << n << "\n";
  if (!json_path.empty()) write_json(json_path, r.to_json());
  return r.passed() ? 0 : 1;
}

int cmd_sweep(const Range& ra, const Range& rb, const Range& rc, const VerifyOptions& opts,
              const std::string& json_path, std::ostream& out) {
  std::vector<PretzelParams> grid;
  for (std::int64_t a = ra.lo; a <= ra.hi; ++a) {
    for (std::int64_t b = rb.lo; b <= rb.hi; ++b) {
      for (std::int64_t c = rc.lo; c <= rc.hi; ++c) {
        if (a != 0 && b > 0 && c > 0) grid.push_back({a, b, c});
      }
    }
  }
  if (grid.empty()) throw ContractViolation("sweep: the parameter grid has no valid triple (need a != 0, b, c > 0)");

  std::size_t verified = 0, failed = 0, unknown = 0, scenarios = 0, scenario_failures = 0;
  json rows = json::array();
  for (const auto& p : grid) {
    const std::string label = "(" + std::to_string(p.a) + ", " + std::to_string(p.b) + ", " + std::to_string(p.c) + ")";
    if (classify(p) == CaseTag::kUnknown) {
      ++unknown;
      out << label << " UNKNOWN skipped\n";
      continue;
    }
    spdlog::debug("verifying {}", label);
    const CaseReport r = verify_case(p, opts);
    ++verified;
    failed += !r.passed();
    json row = r.to_json();
    std::string line = label + " " + std::string(to_string(r.tag)) + (r.degenerate ? " degenerate" : "") +
                       (r.passed() ? " pass" : " FAIL");
    if (scenario_applies(p)) {
      const ScenarioReport s = baker_taylor_scenario(p);
      ++scenarios;
      scenario_failures += !s.passed();
      line += " wrap-defect " + (s.defect ? s.defect->str() : std::string("uncertified")) +
              (s.passed() ? " pass" : " FAIL");
      row["wrap"] = s.to_json();
    }
    out << line << "\n";
    rows.push_back(std::move(row));
  }
  out << "verified " << verified << ", failed " << failed << ", unknown skipped " << unknown << "; wrap scenarios "
      << scenarios << ", failed " << scenario_failures << "\n";
  if (!json_path.empty()) {
    write_json(json_path, {{"seed", opts.seed}, {"samples", opts.samples}, {"verified", verified},
                           {"failed", failed}, {"unknown_skipped", unknown}, {"wrap_scenarios", scenarios},
                           {"wrap_failures", scenario_failures}, {"cases", rows}});
  }
  return (failed + scenario_failures) == 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  setup_logging();
  CLI::App app{"Exact Thurston norm balls of pretzel links P(2a,2b,2c)", "thurstonkit"};
  app.require_subcommand(1);

  Params params;
  std::string json_path, off_path, spec_path, class_text, arc_text;
  std::string a_range, b_range, c_range;
  std::int64_t intersections = 2;
  VerifyOptions vopts;

  auto* ball = app.add_subcommand("ball", "Thurston ball of P(2a,2b,2c)");
  add_params(ball, params);
  ball->add_option("--json", json_path, "write the polytope as JSON");
  ball->add_option("--off", off_path, "write the polytope as an OFF file");

  auto* norm = app.add_subcommand("norm", "Thurston norm of a class");
  norm->add_option("--a", params.a);
  norm->add_option("--b", params.b);
  norm->add_option("--c", params.c);
  norm->add_option("--spec", spec_path, "seminorm JSON instead of a pretzel link");
  norm->add_option("--class", class_text, "class p,q,r in the surface basis")->required();

  auto* euler = app.add_subcommand("euler", "Euler classes of the four hierarchies");
  add_params(euler, params);
  euler->add_option("--json", json_path);

  auto* maw = app.add_subcommand("maw", "maw dual graph class of a branched surface");
  maw->add_option("--spec", spec_path, "branched surface JSON")->required();
  maw->add_option("--json", json_path);

  auto* swap = app.add_subcommand("swap", "Euler class after reversing a decomposing disk");
  swap->add_option("--a", params.a);
  swap->add_option("--b", params.b);
  swap->add_option("--c", params.c);
  swap->add_option("--class", class_text, "Euler class before the reversal");
  swap->add_option("--intersections", intersections, "|D cap gamma|");
  swap->add_option("--arc", arc_text, "class of the dual arc a(D)");

  auto* verify = app.add_subcommand("verify", "run every exact check for one link");
  add_params(verify, params);

  auto* wrap = app.add_subcommand("wrap", "wrapping numbers and the triangle-inequality defect");
  add_params(wrap, params);
  wrap->add_option("--json", json_path);

  auto* sweep = app.add_subcommand("sweep", "verify over a parameter grid");
  sweep->add_option("--a", a_range, "integer or lo..hi")->required();
  sweep->add_option("--b", b_range, "integer or lo..hi")->required();
  sweep->add_option("--c", c_range, "integer or lo..hi")->required();

  for (auto* sub : {verify, sweep}) {
    sub->add_option("--json", json_path, "write the report as JSON");
    sub->add_option("--seed", vopts.seed, "seed of the sampled inequality audit");
    sub->add_option("--samples", vopts.samples, "number of sampled classes");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const PretzelParams p = params.get();
    if (*ball) return cmd_ball(p, json_path, off_path, out);
    if (*norm) {
      const RatVec v = parse_class(class_text);
      const PolyhedralSeminorm x = spec_path.empty() ? seminorm_of(p) : seminorm_from_json(read_json_file(spec_path));
      out << eval(x, H2Class{x.space(), v}).str() << "\n";
      return 0;
    }
    if (*euler) {
      json j = json::object();
      for (const auto& [h, e] : euler_classes(p).available()) {
        out << "Gamma_" << to_string(h) << " " << bracket_str(e.coords) << "\n";
        j[std::string(to_string(h))] = to_json(e.coords);
      }
      if (!json_path.empty()) write_json(json_path, {{"link", space_tag(p)}, {"euler_classes", j}});
      return 0;
    }
    if (*maw) {
      const BranchedSurfaceSpec spec = branched_from_json(read_json_file(spec_path));
      const H1Class g = gamma_class(spec);
      out << bracket_str(g.coords) << "\n";
      if (!json_path.empty()) write_json(json_path, {{"ambient", spec.ambient}, {"gamma", to_json(g.coords)}});
      return 0;
    }
    if (*swap) {
      if (!class_text.empty()) {
        if (arc_text.empty()) throw ContractViolation("swap: --class needs --arc");
        const DiskSwapRecord rec{"D", intersections, H1Class{"", parse_class(arc_text)}};
        validate(rec);
        out << bracket_str(swap_disk_orientation(H1Class{"", parse_class(class_text)}, rec).coords) << "\n";
        return 0;
      }
      const EulerClasses e = euler_classes(p);
      auto line = [&](Hierarchy from, const H1Class& before, Hierarchy to) {
        const DiskSwapRecord rec = d2_swap_record(p, from);
        out << "Gamma_" << to_string(from) << " " << bracket_str(before.coords) << " -> Gamma_" << to_string(to)
            << " " << bracket_str(swap_disk_orientation(before, rec).coords) << " (|D2 cap gamma| = "
            << rec.suture_intersections << ")\n";
      };
      line(Hierarchy::kMinusMinus, e.minus_minus, Hierarchy::kMinusPlus);
      if (e.plus_minus) line(Hierarchy::kPlusMinus, *e.plus_minus, Hierarchy::kPlusPlus);
      return 0;
    }
    if (*verify) return cmd_verify(p, vopts, json_path, out);
    if (*wrap) return cmd_wrap(p, json_path, out);
    if (*sweep) {
      return cmd_sweep(parse_range(a_range, "--a"), parse_range(b_range, "--b"), parse_range(c_range, "--c"), vopts,
                       json_path, out);
    }
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace thurstonkit::cli
