// Command-line front end; talks to the library only through bdbar.h.
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "bdbar/bdbar.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitVerification = 3;
constexpr int kExitInternal = 1;

struct Failure {
  bdbar_status status;
  std::string message;
};

int exit_code(bdbar_status status) {
  switch (status) {
    case BDBAR_OK: return kExitOk;
    case BDBAR_E_CONSISTENCY_FAILURE: return kExitVerification;
    case BDBAR_E_INTERNAL: return kExitInternal;
    default: return kExitInput;
  }
}

struct ContextDeleter {
  void operator()(bdbar_context* c) const { bdbar_context_destroy(c); }
};
struct PolyDeleter {
  void operator()(bdbar_poly* p) const { bdbar_poly_destroy(p); }
};
using Context = std::unique_ptr<bdbar_context, ContextDeleter>;
using Poly = std::unique_ptr<bdbar_poly, PolyDeleter>;

void check(bdbar_context* ctx, bdbar_status status) {
  if (status != BDBAR_OK) throw Failure{status, bdbar_last_error(ctx)};
}

Context open(const std::string& domain) {
  bdbar_context* raw = nullptr;
  const bdbar_status status = bdbar_context_create(domain.c_str(), &raw);
  if (status != BDBAR_OK) throw Failure{status, "unknown domain '" + domain + "'"};
  return Context(raw);
}

Poly parse_poly(bdbar_context* ctx, const std::string& text) {
  bdbar_poly* raw = nullptr;
  check(ctx, bdbar_poly_parse(ctx, text.c_str(), &raw));
  return Poly(raw);
}

Json poly_json(bdbar_context* ctx, const bdbar_poly* p) {
  const char* text = nullptr;
  check(ctx, bdbar_poly_json(ctx, p, &text));
  return Json::parse(text);
}

std::vector<double> point(bdbar_context* ctx, const std::string& text) {
  std::vector<double> z(2 * bdbar_context_dim(ctx));
  check(ctx, bdbar_parse_point(ctx, text.c_str(), z.data()));
  return z;
}

Json complex_json(double re, double im) { return Json{{"re", re}, {"im", im}}; }

struct QuadOptions {
  std::string method = "polar";
  std::string nodes = "64x128";
  double rho = 1.0;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 42;

  void attach(CLI::App* cmd) {
    cmd->add_option("--quad", method, "Quadrature rule")->check(CLI::IsMember({"polar", "mc"}));
    cmd->add_option("--nodes", nodes, "Polar nodes RADIALxANGULAR");
    cmd->add_option("--rho", rho, "Radius cutoff in (0, 1]");
    cmd->add_option("--samples", samples, "Monte Carlo samples");
    cmd->add_option("--seed", seed, "Monte Carlo seed");
  }

  bdbar_quad build() const {
    bdbar_quad q;
    bdbar_quad_default(&q);
    q.method = method == "mc" ? BDBAR_QUAD_MONTE_CARLO : BDBAR_QUAD_POLAR;
    const auto x = nodes.find('x');
    try {
      if (x == std::string::npos) throw std::invalid_argument(nodes);
      q.radial_nodes = static_cast<unsigned>(std::stoul(nodes.substr(0, x)));
      q.angular_nodes = static_cast<unsigned>(std::stoul(nodes.substr(x + 1)));
    } catch (const std::exception&) {
      throw Failure{BDBAR_E_PARSE, "--nodes expects RADIALxANGULAR, got '" + nodes + "'"};
    }
    q.rho = rho;
    q.samples = samples;
    q.seed = seed;
    return q;
  }

  Json describe() const {
    Json j{{"method", method}};
    if (method == "mc") {
      j["samples"] = samples;
      j["seed"] = seed;
    } else {
      j["nodes"] = nodes;
    }
    j["rho"] = rho;
    return j;
  }
};

struct Options {
  std::string domain = "disc";
  std::string z;
  std::string w;
  std::string symbol;
  std::string form;
  std::string map;
  std::string mode = "exact";
  std::string output = "json";
  std::string rho_sweep = "0.9,0.99,0.999";
  std::string suite = "paper";
  bool exact = false;
  bool json_flag = false;
  unsigned max_degree = 10;
  unsigned max_n = 20;
  unsigned nodes = 4096;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 42;
  double rho = 0.5;
  double phi = 0.0;
  int criterion = 0;
  QuadOptions quad;
};

Json header(const std::string& command) { return Json{{"schema", "bergman-dbar/1"}, {"command", command}}; }

int emit(const Json& doc) {
  std::cout << doc.dump(2) << '\n';
  return kExitOk;
}

int cmd_kernel(const Options& o) {
  auto ctx = open(o.domain);
  const auto z = point(ctx.get(), o.z);
  const auto w = point(ctx.get(), o.w);
  double re = 0.0;
  double im = 0.0;
  check(ctx.get(), bdbar_kernel(ctx.get(), z.data(), w.data(), &re, &im));
  Json doc = header("kernel");
  doc["domain"] = o.domain;
  doc["z"] = o.z;
  doc["w"] = o.w;
  doc["re"] = re;
  doc["im"] = im;
  return emit(doc);
}

int cmd_project(const Options& o) {
  auto ctx = open(o.domain);
  auto f = parse_poly(ctx.get(), o.symbol);
  Json doc = header("project");
  doc["domain"] = o.domain;
  doc["symbol"] = o.symbol;
  if (o.exact || o.z.empty()) {
    bdbar_poly* raw = nullptr;
    check(ctx.get(), bdbar_project_exact(ctx.get(), f.get(), &raw));
    Poly p(raw);
    doc["mode"] = "exact";
    doc["result"] = poly_json(ctx.get(), p.get());
  } else {
    const auto z = point(ctx.get(), o.z);
    const bdbar_quad q = o.quad.build();
    double re = 0.0;
    double im = 0.0;
    check(ctx.get(), bdbar_project_quadrature(ctx.get(), f.get(), z.data(), &q, &re, &im));
    doc["mode"] = "quadrature";
    doc["z"] = o.z;
    doc["quadrature"] = o.quad.describe();
    doc["result"] = complex_json(re, im);
  }
  return emit(doc);
}

int cmd_solve(const Options& o) {
  auto ctx = open(o.domain);
  Json doc = header("solve");
  doc["domain"] = o.domain;
  doc["mode"] = o.mode;
  if (o.mode == "exact") {
    bdbar_poly* raw = nullptr;
    check(ctx.get(), bdbar_solve_exact(ctx.get(), o.form.c_str(), &raw));
    Poly u(raw);
    doc["form"] = o.form;
    doc["result"] = poly_json(ctx.get(), u.get());
    if (!o.z.empty()) {
      const auto z = point(ctx.get(), o.z);
      double re = 0.0;
      double im = 0.0;
      check(ctx.get(), bdbar_poly_evaluate(ctx.get(), u.get(), z.data(), &re, &im));
      doc["z"] = o.z;
      doc["value"] = complex_json(re, im);
    }
  } else if (o.mode == "integral") {
    if (o.z.empty()) throw Failure{BDBAR_E_INVALID_ARGUMENT, "--mode integral needs --z"};
    const auto z = point(ctx.get(), o.z);
    const bdbar_quad q = o.quad.build();
    double re = 0.0;
    double im = 0.0;
    check(ctx.get(), bdbar_solve_integral(ctx.get(), o.form.c_str(), z.data(), &q, &re, &im));
    doc["form"] = o.form;
    doc["z"] = o.z;
    doc["quadrature"] = o.quad.describe();
    doc["value"] = complex_json(re, im);
  } else {
    const char* text = nullptr;
    check(ctx.get(), bdbar_nn_form(ctx.get(), o.form.c_str(), &text));
    doc["density"] = o.form;
    doc["result"] = Json::parse(text);
  }
  return emit(doc);
}

int cmd_dbar(const Options& o) {
  auto ctx = open(o.domain);
  auto u = parse_poly(ctx.get(), o.symbol);
  const char* text = nullptr;
  check(ctx.get(), bdbar_dbar(ctx.get(), u.get(), &text));
  Json doc = header("dbar");
  doc["domain"] = o.domain;
  doc["symbol"] = o.symbol;
  doc["coefficients"] = Json::parse(text);
  return emit(doc);
}

int cmd_pullback(const Options& o) {
  auto ctx = open(o.domain);
  const char* text = nullptr;
  check(ctx.get(), bdbar_pullback(ctx.get(), o.map.c_str(), o.form.c_str(), &text));
  Json doc = header("pullback");
  doc["domain"] = o.domain;
  doc["map"] = o.map;
  doc["form"] = o.form;
  doc["result"] = Json::parse(text);
  return emit(doc);
}

int cmd_hs_sum(const Options& o) {
  auto ctx = open(o.domain);
  const char* text = nullptr;
  check(ctx.get(), bdbar_hs_sum(ctx.get(), o.max_degree, &text));
  const Json report = Json::parse(text);
  if (o.output == "csv") {
    std::cout << "degree,partial_sum\n";
    for (const auto& s : report["trend_samples"]) {
      std::cout << s["degree"].get<unsigned>() << ',' << Json(s["partial_sum"]).dump() << '\n';
    }
    return kExitOk;
  }
  Json doc = header("hs-sum");
  doc["result"] = report;
  return emit(doc);
}

int cmd_kernel_l2(const Options& o) {
  auto ctx = open(o.domain);
  std::vector<double> rho(64);
  std::size_t count = 0;
  check(ctx.get(), bdbar_parse_reals(ctx.get(), o.rho_sweep.c_str(), rho.data(), rho.size(), &count));
  const char* text = nullptr;
  check(ctx.get(), bdbar_kernel_l2(ctx.get(), rho.data(), count, o.samples, o.seed, &text));
  const Json result = Json::parse(text);
  if (o.output == "csv") {
    std::cout << "rho,estimate,std_error\n";
    for (const auto& s : result["samples"]) {
      std::cout << Json(s["rho"]).dump() << ',' << Json(s["estimate"]).dump() << ',' << Json(s["std_error"]).dump()
                << '\n';
    }
    return kExitOk;
  }
  Json doc = header("kernel-l2");
  doc["domain"] = o.domain;
  doc["result"] = result;
  return emit(doc);
}

int cmd_poisson(const Options& o) {
  auto ctx = open("disc");
  double value = 0.0;
  check(ctx.get(), bdbar_poisson(ctx.get(), o.rho, o.phi, o.nodes, &value));
  Json doc = header("poisson");
  doc["rho"] = o.rho;
  doc["phi"] = o.phi;
  doc["nodes"] = o.nodes;
  doc["value"] = value;
  doc["error"] = value - 6.283185307179586;
  return emit(doc);
}

int cmd_orthogonality(const Options& o) {
  auto ctx = open(o.domain);
  const char* text = nullptr;
  check(ctx.get(), bdbar_orthogonality(ctx.get(), o.max_n, &text));
  Json doc = header("orthogonality");
  doc["domain"] = o.domain;
  doc["result"] = Json::parse(text);
  return emit(doc);
}

void progress(int criterion, int passed, const char* title, double seconds, void*) {
  std::fprintf(stderr, "[%2d] %-4s %-34s %8.2f s\n", criterion, passed != 0 ? "PASS" : "FAIL", title, seconds);
}

int cmd_verify(const Options& o) {
  if (o.suite != "paper") throw Failure{BDBAR_E_INVALID_ARGUMENT, "unknown suite '" + o.suite + "'"};
  auto ctx = open("disc");
  const char* text = nullptr;
  int all_passed = 0;
  check(ctx.get(), bdbar_verify(ctx.get(), o.criterion, progress, nullptr, &text, &all_passed));
  Json doc = header("verify");
  doc["suite"] = o.suite;
  doc["result"] = Json::parse(text);
  emit(doc);
  return all_passed != 0 ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Canonical dbar solution operator on the disc, bidisc and ball"};
  app.require_subcommand(1);
  Options o;

  auto* kernel = app.add_subcommand("kernel", "Bergman kernel B(z, w)");
  kernel->add_option("--domain", o.domain);
  kernel->add_option("--z", o.z)->required();
  kernel->add_option("--w", o.w)->required();

  auto* project = app.add_subcommand("project", "Bergman projection of a symbol");
  project->add_option("--domain", o.domain);
  project->add_option("--symbol", o.symbol)->required();
  project->add_flag("--exact", o.exact, "Exact projection (default without --z)");
  project->add_option("--z", o.z, "Evaluate the quadrature projection at this point");
  o.quad.attach(project);

  auto* solve = app.add_subcommand("solve", "Canonical solution of dbar u = g");
  solve->add_option("--domain", o.domain);
  solve->add_option("--form", o.form, "Coefficients g_1; ...; g_n, or the density for --mode nn")->required();
  solve->add_option("--mode", o.mode)->check(CLI::IsMember({"exact", "integral", "nn"}));
  solve->add_option("--z", o.z);
  o.quad.attach(solve);

  auto* dbar = app.add_subcommand("dbar", "Wirtinger dbar of a symbol");
  dbar->add_option("--domain", o.domain);
  dbar->add_option("--symbol", o.symbol)->required();

  auto* pullback = app.add_subcommand("pullback", "Pullback of a (0,1)-form by a holomorphic map");
  pullback->add_option("--domain", o.domain);
  pullback->add_option("--map", o.map, "Components F_1; ...; F_n")->required();
  pullback->add_option("--form", o.form)->required();

  auto* hs = app.add_subcommand("hs-sum", "Hilbert-Schmidt partial sums");
  hs->add_option("--domain", o.domain);
  hs->add_option("--max-degree", o.max_degree)->required();
  hs->add_flag("--json", o.json_flag, "JSON output (default)");
  hs->add_option("--output", o.output)->check(CLI::IsMember({"json", "csv"}));

  auto* l2 = app.add_subcommand("kernel-l2", "Monte Carlo L2 norm of the solution kernel");
  l2->add_option("--domain", o.domain);
  l2->add_option("--rho-sweep", o.rho_sweep);
  l2->add_option("--samples", o.samples);
  l2->add_option("--seed", o.seed);
  l2->add_option("--output", o.output)->check(CLI::IsMember({"json", "csv"}));

  auto* poisson = app.add_subcommand("poisson", "Trapezoid integral of the Poisson kernel");
  poisson->add_option("--rho", o.rho);
  poisson->add_option("--phi", o.phi);
  poisson->add_option("--nodes", o.nodes);

  auto* ortho = app.add_subcommand("orthogonality", "Gram matrix of the disc images");
  ortho->add_option("--domain", o.domain);
  ortho->add_option("--max-n", o.max_n);

  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
  verify->add_option("--suite", o.suite);
  verify->add_option("--criterion", o.criterion, "Single criterion 1..12 (0 = all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return kExitInput;
  }

  try {
    if (*kernel) return cmd_kernel(o);
    if (*project) return cmd_project(o);
    if (*solve) return cmd_solve(o);
    if (*dbar) return cmd_dbar(o);
    if (*pullback) return cmd_pullback(o);
    if (*hs) return cmd_hs_sum(o);
    if (*l2) return cmd_kernel_l2(o);
    if (*poisson) return cmd_poisson(o);
    if (*ortho) return cmd_orthogonality(o);
    if (*verify) return cmd_verify(o);
  } catch (const Failure& f) {
    std::cerr << "error (" << bdbar_status_string(f.status) << "): " << f.message << '\n';
    return exit_code(f.status);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInput;
}
