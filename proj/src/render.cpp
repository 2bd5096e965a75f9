#include "eph/render.hpp"

#include "eph/compact.hpp"
#include "eph/moebius.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace eph::render {

namespace {

std::string num(double x) {
  if (x == 0) x = 0;  // no "-0"
  return fmt::format("{:.12g}", x);
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

/// XML comments must not contain "--".
std::string comment(std::string_view s) {
  std::string body(s);
  for (std::size_t pos; (pos = body.find("--")) != std::string::npos;) body.replace(pos, 2, "- -");
  return "<!-- " + body + " -->";
}

struct Box {
  double x0, x1, y0, y1;

  bool contains(const FloatPoint& p, double slack) const {
    return p.u >= x0 - slack && p.u <= x1 + slack && p.v >= y0 - slack && p.v <= y1 + slack;
  }
  double span() const { return std::max(x1 - x0, y1 - y0); }
};

Box box_of(const Viewport& vp) {
  return {to_double(vp.x0), to_double(vp.x1), to_double(vp.y0), to_double(vp.y1)};
}

/// Liang-Barsky clip of the line p + t d against the box.
std::optional<std::vector<FloatPoint>> clip_line(FloatPoint p, FloatPoint d, const Box& b) {
  double t0 = -1e300, t1 = 1e300;
  const std::array<std::pair<double, double>, 4> sides{{
      {-d.u, p.u - b.x0},
      {d.u, b.x1 - p.u},
      {-d.v, p.v - b.y0},
      {d.v, b.y1 - p.v},
  }};
  for (auto [q, r] : sides) {
    if (q == 0) {
      if (r < 0) return std::nullopt;
      continue;
    }
    double t = r / q;
    if (q < 0) t0 = std::max(t0, t);
    else t1 = std::min(t1, t);
  }
  if (t0 > t1) return std::nullopt;
  return std::vector<FloatPoint>{{p.u + t0 * d.u, p.v + t0 * d.v}, {p.u + t1 * d.u, p.v + t1 * d.v}};
}

/// Line a u + b v = h.
void add_line(CycleDrawing& out, double a, double b, double h, const Box& box) {
  double nn = a * a + b * b;
  FloatPoint p{a * h / nn, b * h / nn};
  if (auto seg = clip_line(p, {-b, a}, box)) out.polylines.push_back(std::move(*seg));
}

/// Samples f over [lo, hi] and keeps the runs that fall inside the box.
template <typename F>
void add_curve(CycleDrawing& out, F f, double lo, double hi, int samples, const Box& box) {
  const double slack = 1e-9 * box.span();
  std::vector<FloatPoint> run;
  for (int i = 0; i < samples; ++i) {
    double t = lo + (hi - lo) * i / (samples - 1);
    FloatPoint p = f(t);
    if (std::isfinite(p.u) && std::isfinite(p.v) && box.contains(p, slack)) {
      run.push_back(p);
    } else if (!run.empty()) {
      if (run.size() > 1) out.polylines.push_back(std::move(run));
      run.clear();
    }
  }
  if (run.size() > 1) out.polylines.push_back(std::move(run));
}

std::string canonical_q(const Cycle& c) {
  Cycle q = canonicalize(c);
  return to_string(q.k()) + "," + to_string(q.l()) + "," + to_string(q.n()) + "," + to_string(q.m());
}

double auto_width(const Style& style, const Box& box) { return style.width > 0 ? style.width : box.span() / 300; }

std::string document_open(const Box& box, std::string_view title) {
  const double w = box.x1 - box.x0;
  const double h = box.y1 - box.y0;
  const double px_w = 600;
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"{} {} {} {}\">\n",
      num(px_w), num(px_w * h / w), num(box.x0), num(-box.y1), num(w), num(h));
  out += "<title>" + xml_escape(title) + "</title>\n";
  out += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"white\"/>\n", num(box.x0),
                     num(-box.y1), num(w), num(h));
  out += "<g transform=\"scale(1,-1)\">\n";
  return out;
}

std::string document_close(const Box& box, std::string_view label) {
  std::string out = "</g>\n";
  if (!label.empty()) {
    double size = box.span() / 20;
    out += fmt::format("<text class=\"label\" x=\"{}\" y=\"{}\" font-family=\"serif\" font-size=\"{}\">{}</text>\n",
                       num(box.x0 + size / 2), num(-box.y1 + size * 1.2), num(size), xml_escape(label));
  }
  out += "</svg>\n";
  return out;
}

std::string layer(std::string_view id, std::string_view body) {
  return fmt::format("<g id=\"{}\">\n{}</g>\n", id, body);
}

}  // namespace

void Viewport::validate() const {
  if (!(x0 < x1) || !(y0 < y1)) throw std::invalid_argument("viewport ranges must be non-degenerate");
  if (samples < 2) throw std::invalid_argument("viewport needs at least two samples per curve");
}

Viewport parse_viewport(const std::string& text) {
  std::array<std::string, 4> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    std::size_t colon = text.find(':', start);
    if ((i < 3) == (colon == std::string::npos)) throw std::invalid_argument("viewport must be x0:x1:y0:y1");
    parts[i] = text.substr(start, i < 3 ? colon - start : std::string::npos);
    start = colon + 1;
  }
  Viewport vp;
  vp.x0 = parse_rational(parts[0]);
  vp.x1 = parse_rational(parts[1]);
  vp.y0 = parse_rational(parts[2]);
  vp.y1 = parse_rational(parts[3]);
  vp.validate();
  return vp;
}

std::string_view name(Shape s) {
  switch (s) {
    case Shape::Empty: return "empty";
    case Shape::Circle: return "circle";
    case Shape::Dot: return "dot";
    case Shape::Parabola: return "parabola";
    case Shape::VerticalLines: return "vertical-lines";
    case Shape::Hyperbola: return "hyperbola";
    case Shape::NullLines: return "null-lines";
    case Shape::Line: return "line";
  }
  return "?";
}

CycleDrawing draw_cycle(const Cycle& c, Sigma sigma, const Viewport& vp) {
  vp.validate();
  const Box box = box_of(vp);
  const int samples = vp.samples;
  CycleDrawing out;

  if (c.is_line()) {
    if (c.l() == 0 && c.n() == 0) {
      out.note = "empty: equation reduces to m = 0 (cycle at infinity)";
      return out;
    }
    out.shape = Shape::Line;
    // -2lu - 2nv + m = 0
    add_line(out, to_double(c.l()), to_double(c.n()), to_double(c.m()) / 2, box);
    return out;
  }

  const Rational lc = c.l() / c.k();
  const Rational nc = c.n() / c.k();
  const Rational mc = c.m() / c.k();
  const double L = to_double(lc), N = to_double(nc), M = to_double(mc);

  switch (sigma) {
    case Sigma::Elliptic: {
      // (u - L)^2 + (v - N)^2 = L^2 + N^2 - M
      Rational r2 = lc * lc + nc * nc - mc;
      if (r2 < 0) {
        out.note = "empty: circle with negative squared radius";
      } else if (r2 == 0) {
        out.shape = Shape::Dot;
        out.dots.push_back({L, N});
      } else {
        out.shape = Shape::Circle;
        out.circle = CycleDrawing::Circle{L, N, std::sqrt(to_double(r2))};
      }
      break;
    }
    case Sigma::Parabolic: {
      if (nc != 0) {
        out.shape = Shape::Parabola;
        add_curve(out, [&](double u) { return FloatPoint{u, (u * u - 2 * L * u + M) / (2 * N)}; }, box.x0, box.x1,
                  samples, box);
        break;
      }
      // (u - L)^2 = L^2 - M
      Rational disc = lc * lc - mc;
      if (disc < 0) {
        out.note = "empty: no real roots in u";
        break;
      }
      out.shape = Shape::VerticalLines;
      double w = std::sqrt(to_double(disc));
      add_line(out, 1, 0, L - w, box);
      if (disc != 0) add_line(out, 1, 0, L + w, box);
      break;
    }
    case Sigma::Hyperbolic: {
      // (u - L)^2 - (v + N)^2 = L^2 - N^2 - M
      Rational rho = lc * lc - nc * nc - mc;
      const double R = to_double(rho);
      if (rho == 0) {
        out.shape = Shape::NullLines;
        if (auto seg = clip_line({L, -N}, {1, 1}, box)) out.polylines.push_back(std::move(*seg));
        if (auto seg = clip_line({L, -N}, {1, -1}, box)) out.polylines.push_back(std::move(*seg));
      } else if (rho > 0) {
        out.shape = Shape::Hyperbola;
        for (int side : {-1, 1})
          add_curve(out, [&](double v) { return FloatPoint{L + side * std::sqrt(R + (v + N) * (v + N)), v}; },
                    box.y0, box.y1, samples, box);
      } else {
        out.shape = Shape::Hyperbola;
        for (int side : {-1, 1})
          add_curve(out, [&](double u) { return FloatPoint{u, -N + side * std::sqrt(-R + (u - L) * (u - L))}; },
                    box.x0, box.x1, samples, box);
      }
      break;
    }
  }
  return out;
}

std::string render_cycle(const Cycle& c, Sigma sigma, const Viewport& vp, const Style& style) {
  const CycleDrawing d = draw_cycle(c, sigma, vp);
  const Box box = box_of(vp);
  const double width = auto_width(style, box);

  std::string out = fmt::format(
      "<g class=\"cycle\" data-q=\"{}\" data-sigma=\"{}\" data-shape=\"{}\" stroke=\"{}\" stroke-width=\"{}\" "
      "fill=\"none\">\n",
      canonical_q(c), value(sigma), name(d.shape), xml_escape(style.stroke), num(width));
  if (!d.note.empty()) out += comment(d.note) + "\n";
  if (d.circle) out += fmt::format("<circle cx=\"{}\" cy=\"{}\" r=\"{}\"/>\n", num(d.circle->cx), num(d.circle->cy), num(d.circle->r));
  for (const FloatPoint& p : d.dots)
    out += fmt::format("<circle class=\"dot\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{}\"/>\n", num(p.u), num(p.v),
                       num(3 * width), xml_escape(style.stroke));
  for (const auto& run : d.polylines) {
    out += "<polyline points=\"";
    for (std::size_t i = 0; i < run.size(); ++i) out += (i ? " " : "") + num(run[i].u) + "," + num(run[i].v);
    out += "\"/>\n";
  }
  out += "</g>\n";
  return out;
}

std::string cycle_document(const Cycle& c, Sigma sigma, const Viewport& vp) {
  vp.validate();
  const Box box = box_of(vp);
  std::string title = "cycle " + canonical_q(c) + " sigma " + std::to_string(value(sigma));
  return document_open(box, title) + layer("cycle", render_cycle(c, sigma, vp)) + document_close(box, "");
}

std::vector<Cycle> grid_lines(const GridSpec& grid) {
  if (grid.spacing <= 0) throw std::invalid_argument("grid spacing must be positive");
  if (grid.extent < 0) throw std::invalid_argument("grid extent must be non-negative");
  mpz_class count = mpz_class(grid.extent / grid.spacing);  // truncates toward zero
  if (count > 5000) throw std::invalid_argument("grid too dense");
  const long steps = count.get_si();
  std::vector<Cycle> lines;
  // u = a  <=>  (0, 1, 0, 2a);  v = b  <=>  (0, 0, 1, 2b)
  for (long j = -steps; j <= steps; ++j) lines.emplace_back(0, 1, 0, 2 * j * grid.spacing);
  for (long j = -steps; j <= steps; ++j) lines.emplace_back(0, 0, 1, 2 * j * grid.spacing);
  return lines;
}

std::string invert_grid(Sigma sigma, const GridSpec& grid, const Viewport& vp) {
  vp.validate();
  const Box box = box_of(vp);

  std::string images;
  for (const Cycle& line : grid_lines(grid)) images += render_cycle(invert_unit(line), sigma, vp, {"black", 0});

  const Style red{"red", 2 * box.span() / 300};
  const Style blue{"blue", 2 * box.span() / 300};
  std::string unit = render_cycle(Cycle(1, 0, 0, -1), sigma, vp, red);
  std::string infinity = render_cycle(invert_unit(z_infinity(sigma).quadruple()), sigma, vp, blue);

  std::string title = fmt::format("grid inversion, sigma {}, spacing {}", value(sigma), to_string(grid.spacing));
  return document_open(box, title) + layer("grid-image", images) + layer("unit-cycle", unit) +
         layer("infinity-image", infinity) + document_close(box, "");
}

TimelapseInput default_timelapse_input() {
  TimelapseInput in;
  for (const auto& [u, v] : std::vector<std::pair<Rational, Rational>>{
           {0, 1}, {Rational(1, 2), 1}, {Rational(-1, 2), 1}, {0, Rational(1, 2)}, {0, 2}, {Rational(1, 4), Rational(3, 2)}})
    in.points.push_back({u, v});
  in.cycles.push_back(zero_radius_at({0, 1}, Sigma::Hyperbolic));
  in.cycles.push_back(Cycle(1, 0, 0, 1));  // u^2 - v^2 = -1
  return in;
}

std::vector<Frame> timelapse(const TimelapseInput& input, const Viewport& vp) {
  vp.validate();
  const Box box = box_of(vp);
  const Sigma h = Sigma::Hyperbolic;
  const CycleContext ctx = CycleContext::matching(h);

  struct Step {
    const char* label;
    std::optional<int> exponent;  // t = e^exponent; empty means t = 0
  };
  const std::array<Step, 8> steps{{{"t=0", std::nullopt},
                                   {"t=e^{-3}", -3},
                                   {"t=e^{-2}", -2},
                                   {"t=e^{-1}", -1},
                                   {"t=1", 0},
                                   {"t=e", 1},
                                   {"t=e^{2}", 2},
                                   {"t=e^{3}", 3}}};

  std::vector<Frame> frames;
  for (const Step& step : steps) {
    const double t = step.exponent ? std::exp(static_cast<double>(*step.exponent)) : 0.0;
    const MoebiusMap g = time_reversal(from_double(t));

    std::string cycles;
    for (const Cycle& c : input.cycles) cycles += render_cycle(similarity(g, c, ctx), h, vp, {"blue", 0});

    const double r = 3 * box.span() / 300;
    std::string points;
    for (const Point& p : input.points) {
      std::optional<HyperNum> w = apply(g, p.as_number(h));
      if (!w) {
        points += comment("point " + to_string(p.u) + "," + to_string(p.v) + " sent to the light cone at infinity") + "\n";
        continue;
      }
      points += fmt::format("<circle class=\"dot\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"red\"/>\n", num(to_double(w->re())),
                            num(to_double(w->im())), num(r));
    }

    std::string cone = render_cycle(zero_radius_at({0, 0}, h), h, vp, {"gray", 0});
    frames.push_back({step.label, t,
                      document_open(box, std::string("time reversal ") + step.label) + layer("light-cone", cone) +
                          layer("cycles", cycles) + layer("points", points) + document_close(box, step.label)});
  }
  return frames;
}

}  // namespace eph::render
