// Command-line front end: cycle products, compactified point maps, double
// cover paths and SVG figures.

#include "eph/compact.hpp"
#include "eph/cover.hpp"
#include "eph/cycle.hpp"
#include "eph/errors.hpp"
#include "eph/json_io.hpp"
#include "eph/products.hpp"
#include "eph/render.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace eph;

/// Bad command-line value; reported with exit code 2.
struct ArgumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Rational> parse_tuple(const std::string& text, std::size_t expected, const char* what) {
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string item;
  try {
    while (std::getline(in, item, ',')) out.push_back(parse_rational(item));
  } catch (const std::invalid_argument& e) {
    throw ArgumentError(std::string(what) + ": " + e.what());
  }
  if (out.size() != expected)
    throw ArgumentError(std::string(what) + " needs " + std::to_string(expected) + " comma-separated rationals, got '" +
                        text + "'");
  return out;
}

Sigma sigma_arg(const std::string& text) {
  try {
    return parse_sigma(text);
  } catch (const ContextError& e) {
    throw ArgumentError(e.what());
  }
}

Cycle cycle_arg(const std::string& text) {
  auto q = parse_tuple(text, 4, "cycle");
  try {
    return {q[0], q[1], q[2], q[3]};
  } catch (const std::invalid_argument& e) {
    throw ArgumentError(e.what());
  }
}

CycleContext context_arg(const std::string& sigma_cycle, const std::string& s) {
  Rational sv = parse_tuple(s, 1, "--s")[0];
  if (sv == 0) throw ArgumentError("--s must be nonzero");
  return {sigma_arg(sigma_cycle), sv};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
  if (!out) throw std::runtime_error("failed writing " + path);
}

std::string format_point(const Point& p) { return "(" + to_string(p.u) + ", " + to_string(p.v) + ")"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conformal geometry of the elliptic, parabolic and hyperbolic planes"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string viewport_text = "-3:3:-3:3";
  int samples = 400;
  app.add_option("--viewport", viewport_text, "World window x0:x1:y0:y1");
  app.add_option("--samples", samples, "Samples per curve");

  // cycle
  auto* cycle_cmd = app.add_subcommand("cycle", "Cycle invariants and products");
  cycle_cmd->require_subcommand(1);
  std::string ortho_c, ortho_d, sigma_cycle = "e", s_text = "1";
  bool json_out = false;
  auto* ortho = cycle_cmd->add_subcommand("ortho", "Inner product and orthogonality of two cycles");
  ortho->add_option("C", ortho_c, "k,l,n,m")->required();
  ortho->add_option("D", ortho_d, "k,l,n,m")->required();
  ortho->add_option("--sigma-cycle", sigma_cycle, "Cycle-space sigma (e|p|h or -1|0|1)");
  ortho->add_option("--s", s_text, "FSCc parameter s");

  std::string info_q;
  auto* info = cycle_cmd->add_subcommand("info", "Canonical form and invariants of a cycle (JSON)");
  info->add_option("Q", info_q, "k,l,n,m")->required();
  info->add_option("--sigma-cycle", sigma_cycle, "Cycle-space sigma (e|p|h or -1|0|1)");
  info->add_option("--s", s_text, "FSCc parameter s");

  // point
  auto* point_cmd = app.add_subcommand("point", "Compactified points");
  point_cmd->require_subcommand(1);
  std::string g_text, p_text, sigma_text = "e";
  auto* map = point_cmd->add_subcommand("map", "Compactified Moebius action on a point");
  map->add_option("--g", g_text, "a_re,a_im,b_re,b_im,c_re,c_im,d_re,d_im")->required();
  map->add_option("--p", p_text, "u,v")->required();
  map->add_option("--sigma", sigma_text, "e|p|h");
  map->add_flag("--json", json_out, "Print the result as JSON");

  // cover
  auto* cover_cmd = app.add_subcommand("cover", "Double cover of the hyperbolic plane");
  cover_cmd->require_subcommand(1);
  std::string family = "shear", z_text = "0,1", sheet_text = "+", t_text = "0:2:20";
  auto* path = cover_cmd->add_subcommand("path", "Track a point along a one-parameter family (CSV)");
  path->add_option("--family", family, "shear|timereversal")->check(CLI::IsMember({"shear", "timereversal"}));
  path->add_option("--z", z_text, "u,v");
  path->add_option("--sheet", sheet_text, "+|-")->check(CLI::IsMember({"+", "-"}));
  path->add_option("--t", t_text, "a:b:steps");

  // render
  auto* render_cmd = app.add_subcommand("render", "SVG figures");
  render_cmd->require_subcommand(1);
  std::string out_path, out_dir = "frames", spacing_text = "1/2", extent_text, q_text;
  auto* grid = render_cmd->add_subcommand("invert-grid", "Rectangular grid reflected in the unit cycle");
  grid->add_option("--sigma", sigma_text, "e|p|h");
  grid->add_option("--spacing", spacing_text, "Grid spacing");
  grid->add_option("--extent", extent_text, "Largest |coordinate| of grid lines (default: viewport)");
  grid->add_option("--out", out_path, "Output SVG")->required();
  auto* lapse = render_cmd->add_subcommand("timelapse", "Eight frames of the time-reversal family");
  lapse->add_option("--out-dir", out_dir, "Output directory");
  auto* one = render_cmd->add_subcommand("cycle", "Draw a single cycle");
  one->add_option("--q", q_text, "k,l,n,m")->required();
  one->add_option("--sigma", sigma_text, "e|p|h");
  one->add_option("--out", out_path, "Output SVG")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    auto viewport = [&] {
      render::Viewport vp;
      try {
        vp = render::parse_viewport(viewport_text);
        vp.samples = samples;
        vp.validate();
      } catch (const std::invalid_argument& e) {
        throw ArgumentError(e.what());
      }
      return vp;
    };

    if (ortho->parsed()) {
      Cycle c = cycle_arg(ortho_c), d = cycle_arg(ortho_d);
      CycleContext ctx = context_arg(sigma_cycle, s_text);
      Rational value = inner(c, d, ctx);
      std::cout << "inner " << to_string(value) << "\n"
                << "orthogonal " << (value == 0 ? "true" : "false") << "\n";
    } else if (info->parsed()) {
      Cycle c = cycle_arg(info_q);
      CycleContext ctx = context_arg(sigma_cycle, s_text);
      nlohmann::json j;
      j["cycle"] = io::to_json(canonicalize(c));
      j["det"] = to_string(det_inv(c, ctx));
      j["trace"] = io::to_json(trace_inv(c, ctx));
      j["zero_radius"] = is_zero_radius(c, ctx);
      if (!c.is_line()) {
        Point p = centre(c, ctx);
        j["centre"] = {to_string(p.u), to_string(p.v)};
        j["radius_sq"] = to_string(radius_sq(c, ctx));
      }
      std::cout << j.dump(2) << "\n";
    } else if (map->parsed()) {
      Sigma sigma = sigma_arg(sigma_text);
      auto e = parse_tuple(g_text, 8, "--g");
      auto pt = parse_tuple(p_text, 2, "--p");
      MoebiusMap g(Matrix2{{e[0], e[1], sigma}, {e[2], e[3], sigma}, {e[4], e[5], sigma}, {e[6], e[7], sigma}});
      CPoint image = act(g, embed({pt[0], pt[1]}, sigma));
      Cycle q = canonicalize(image.quadruple());
      std::optional<Point> finite = unembed(image);
      if (json_out) {
        nlohmann::json j = io::to_json(CPoint(q, sigma));
        j["point"] = finite ? nlohmann::json{to_string(finite->u), to_string(finite->v)} : nlohmann::json("infinity");
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "cpoint " << to_string(q) << "\n"
                  << "point " << (finite ? format_point(*finite) : std::string("infinity")) << "\n";
      }
    } else if (path->parsed()) {
      auto zv = parse_tuple(z_text, 2, "--z");
      std::vector<std::string> parts;
      std::stringstream in(t_text);
      for (std::string item; std::getline(in, item, ':');) parts.push_back(item);
      if (parts.size() != 3) throw ArgumentError("--t must be a:b:steps");
      Rational a = parse_tuple(parts[0], 1, "--t start")[0];
      Rational b = parse_tuple(parts[1], 1, "--t end")[0];
      Rational steps = parse_tuple(parts[2], 1, "--t steps")[0];
      if (steps <= 0 || steps.get_den() != 1 || steps > 100000) throw ArgumentError("--t steps must be a positive integer");
      if (family == "timereversal" && (a < 0 || b < 0)) throw ArgumentError("time reversal needs t >= 0");
      std::vector<Rational> grid_t;
      for (long i = 0, n = steps.get_num().get_si(); i <= n; ++i) grid_t.push_back(a + (b - a) * i / steps);
      MapFamily fam = family == "shear" ? MapFamily([](const Rational& t) { return shear(t, Sigma::Hyperbolic); })
                                        : MapFamily([](const Rational& t) { return time_reversal(t); });
      SheetedPoint start({zv[0], zv[1], Sigma::Hyperbolic}, sheet_text == "+" ? Sheet::Plus : Sheet::Minus);
      PathTrace trace = continue_path(fam, start, grid_t);
      std::cout << "t,u,v,sheet,on_cone\n";
      for (const PathSample& s : trace.samples) {
        std::cout << to_string(s.t) << ",";
        if (s.z) std::cout << to_string(s.z->re()) << "," << to_string(s.z->im()) << "," << (*s.sheet == Sheet::Plus ? "+" : "-");
        else std::cout << ",,";
        std::cout << "," << (s.on_cone() ? 1 : 0) << "\n";
      }
      std::cerr << "flips " << trace.flips << "\n";
    } else if (grid->parsed()) {
      render::Viewport vp = viewport();
      render::GridSpec spec;
      spec.spacing = parse_tuple(spacing_text, 1, "--spacing")[0];
      if (spec.spacing <= 0) throw ArgumentError("--spacing must be positive");
      spec.extent = extent_text.empty() ? Rational(std::max({abs(vp.x0), abs(vp.x1), abs(vp.y0), abs(vp.y1)}))
                                        : parse_tuple(extent_text, 1, "--extent")[0];
      write_file(out_path, render::invert_grid(sigma_arg(sigma_text), spec, vp));
    } else if (lapse->parsed()) {
      render::Viewport vp = viewport();
      std::filesystem::create_directories(out_dir);
      auto frames = render::timelapse(render::default_timelapse_input(), vp);
      for (std::size_t i = 0; i < frames.size(); ++i) {
        std::string file = (std::filesystem::path(out_dir) / ("frame-" + std::to_string(i) + ".svg")).string();
        write_file(file, frames[i].svg);
        std::cout << file << " " << frames[i].label << "\n";
      }
    } else if (one->parsed()) {
      render::Viewport vp = viewport();
      write_file(out_path, render::cycle_document(cycle_arg(q_text), sigma_arg(sigma_text), vp));
    }
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
