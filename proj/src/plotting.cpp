#include "waylab/plotting.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>

#include "waylab/error.hpp"

namespace waylab::plot {

namespace {

constexpr double kWidth = 640.0, kHeight = 480.0;
constexpr double kLeft = 70.0, kRight = 30.0, kTop = 40.0, kBottom = 60.0;

[[noreturn]] void malformed(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::MalformedCsv, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_number(std::string_view s, std::size_t line) {
  double v = 0.0;
  const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size() || !std::isfinite(v)) {
    malformed(line, "'" + std::string(s) + "' is not a finite number");
  }
  return v;
}

struct Lines {
  std::vector<std::pair<std::size_t, std::string_view>> rows;  // (1-based line, text)
};

Lines lines_of(std::string_view text) {
  Lines out;
  std::size_t n = 0;
  for (auto line : split(text, '\n')) {
    ++n;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    out.rows.emplace_back(n, line);
  }
  return out;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string header(const std::string& title) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" + num(kHeight) +
         "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) + "\">\n" +
         "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n" + "<text x=\"" + num(kWidth / 2) +
         "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">" + title + "</text>\n";
}

struct Frame {
  double x0, x1, y0, y1;
  double left, right, top, bottom;
  double px(double x) const { return left + (x - x0) / (x1 - x0) * (right - left); }
  double py(double y) const { return bottom - (y - y0) / (y1 - y0) * (bottom - top); }
};

std::string axes(const Frame& f, const std::string& xlabel, const std::string& ylabel, int ticks) {
  std::string s;
  s += "<g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n";
  s += "<line x1=\"" + num(f.left) + "\" y1=\"" + num(f.bottom) + "\" x2=\"" + num(f.right) + "\" y2=\"" +
       num(f.bottom) + "\"/>\n";
  s += "<line x1=\"" + num(f.left) + "\" y1=\"" + num(f.bottom) + "\" x2=\"" + num(f.left) + "\" y2=\"" +
       num(f.top) + "\"/>\n";
  for (int i = 0; i <= ticks; ++i) {
    const double tx = f.px(f.x0 + (f.x1 - f.x0) * i / ticks);
    const double ty = f.py(f.y0 + (f.y1 - f.y0) * i / ticks);
    s += "<line x1=\"" + num(tx) + "\" y1=\"" + num(f.bottom) + "\" x2=\"" + num(tx) + "\" y2=\"" +
         num(f.bottom + 5) + "\"/>\n";
    s += "<line x1=\"" + num(f.left - 5) + "\" y1=\"" + num(ty) + "\" x2=\"" + num(f.left) + "\" y2=\"" + num(ty) +
         "\"/>\n";
  }
  s += "</g>\n<g font-family=\"sans-serif\" font-size=\"11\" fill=\"black\">\n";
  for (int i = 0; i <= ticks; ++i) {
    const double vx = f.x0 + (f.x1 - f.x0) * i / ticks;
    const double vy = f.y0 + (f.y1 - f.y0) * i / ticks;
    s += "<text x=\"" + num(f.px(vx)) + "\" y=\"" + num(f.bottom + 18) + "\" text-anchor=\"middle\">" + label(vx) +
         "</text>\n";
    s += "<text x=\"" + num(f.left - 8) + "\" y=\"" + num(f.py(vy) + 4) + "\" text-anchor=\"end\">" + label(vy) +
         "</text>\n";
  }
  s += "</g>\n<g font-family=\"sans-serif\" font-size=\"13\" fill=\"black\">\n";
  s += "<text x=\"" + num((f.left + f.right) / 2) + "\" y=\"" + num(kHeight - 15) + "\" text-anchor=\"middle\">" +
       xlabel + "</text>\n";
  s += "<text x=\"18\" y=\"" + num((f.top + f.bottom) / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " +
       num((f.top + f.bottom) / 2) + ")\">" + ylabel + "</text>\n</g>\n";
  return s;
}

}  // namespace

ScanSeries parse_scan_csv(std::string_view text) {
  const auto lines = lines_of(text);
  if (lines.rows.empty()) malformed(1, "empty input");
  const auto head = split(lines.rows[0].second, ',');
  if (head.size() < 2 || head[0] != "alpha" || head[1] != "min_bound") {
    malformed(lines.rows[0].first, "expected header starting alpha,min_bound");
  }
  ScanSeries s;
  for (std::size_t i = 1; i < lines.rows.size(); ++i) {
    const auto [n, line] = lines.rows[i];
    const auto cells = split(line, ',');
    if (cells.size() != head.size()) malformed(n, "expected " + std::to_string(head.size()) + " fields");
    s.alpha.push_back(parse_number(cells[0], n));
    s.min_bound.push_back(parse_number(cells[1], n));
  }
  return s;
}

RegionCloud parse_region_csv(std::string_view text) {
  const auto lines = lines_of(text);
  RegionCloud r;
  std::size_t i = 0;
  for (; i < lines.rows.size() && lines.rows[i].second.starts_with('#'); ++i) {
    const auto [n, line] = lines.rows[i];
    const auto cells = split(line.substr(1), ',');
    if (cells[0] == "alpha" && cells.size() == 2) r.alpha = parse_number(cells[1], n);
    else if (cells[0] == "min_bound" && cells.size() == 2) r.min_bound = parse_number(cells[1], n);
    else if (cells[0] == "axis" && cells.size() == 4)
      r.axis = std::array<double, 3>{parse_number(cells[1], n), parse_number(cells[2], n), parse_number(cells[3], n)};
    else malformed(n, "unknown metadata line");
  }
  if (i == lines.rows.size() || lines.rows[i].second != "x,z") {
    malformed(i < lines.rows.size() ? lines.rows[i].first : 1, "expected header x,z");
  }
  for (++i; i < lines.rows.size(); ++i) {
    const auto [n, line] = lines.rows[i];
    const auto cells = split(line, ',');
    if (cells.size() != 2) malformed(n, "expected 2 fields");
    r.points.emplace_back(parse_number(cells[0], n), parse_number(cells[1], n));
  }
  return r;
}

std::string render_scan_svg(const ScanSeries& s) {
  double x0 = 0.0, x1 = 1.0, y1 = 1.0;
  if (!s.alpha.empty()) {
    x0 = *std::min_element(s.alpha.begin(), s.alpha.end());
    x1 = *std::max_element(s.alpha.begin(), s.alpha.end());
    if (x1 <= x0) x1 = x0 + 1.0;
    y1 = std::max(1e-12, *std::max_element(s.min_bound.begin(), s.min_bound.end()));
    y1 = std::ceil(y1 * 10.0) / 10.0;
  }
  const Frame f{x0, x1, 0.0, y1, kLeft, kWidth - kRight, kTop, kHeight - kBottom};
  std::string svg = header("minimised commutator bound");
  svg += axes(f, "alpha", "min 4||[U_alpha, S_n(+) (x) I]||", 8);
  if (!s.alpha.empty()) {
    const double ref = f.py(1.0);
    if (y1 >= 1.0) {
      svg += "<line x1=\"" + num(f.left) + "\" y1=\"" + num(ref) + "\" x2=\"" + num(f.right) + "\" y2=\"" + num(ref) +
             "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
    }
    svg += "<polyline fill=\"none\" stroke=\"navy\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < s.alpha.size(); ++i) {
      svg += (i ? " " : "") + num(f.px(s.alpha[i])) + "," + num(f.py(std::max(0.0, s.min_bound[i])));
    }
    svg += "\"/>\n";
  }
  return svg + "</svg>\n";
}

std::string render_region_svg(const RegionCloud& r) {
  const double side = kHeight - kTop - kBottom;
  const double left = (kWidth - side) / 2;
  const Frame f{-1.0, 1.0, -1.0, 1.0, left, left + side, kTop, kTop + side};
  std::string title = "realisable effects, xz cross-section";
  if (r.alpha) title += ", alpha = " + label(*r.alpha);
  std::string svg = header(title);
  svg += axes(f, "x", "z", 4);
  if (!r.points.empty()) {
    // One rectangle per lattice row, spanning its extreme x samples.
    std::vector<double> xs;
    for (const auto& p : r.points) xs.push_back(p.first);
    std::sort(xs.begin(), xs.end());
    double pitch = 2.0;
    for (std::size_t i = 1; i < xs.size(); ++i)
      if (xs[i] - xs[i - 1] > 1e-12) pitch = std::min(pitch, xs[i] - xs[i - 1]);
    std::map<long long, std::pair<double, double>> rows;
    std::map<long long, double> row_z;
    for (const auto& [x, z] : r.points) {
      const long long key = std::llround(z / pitch);
      auto [it, fresh] = rows.try_emplace(key, x, x);
      if (!fresh) it->second = {std::min(it->second.first, x), std::max(it->second.second, x)};
      row_z.try_emplace(key, z);
    }
    svg += "<circle cx=\"" + num(f.px(0)) + "\" cy=\"" + num(f.py(0)) + "\" r=\"" + num(side / 2) +
           "\" fill=\"none\" stroke=\"gray\"/>\n<g fill=\"steelblue\" stroke=\"none\">\n";
    const double h = pitch / 2.0;
    for (const auto& [key, span] : rows) {
      const double z = row_z[key];
      svg += "<rect x=\"" + num(f.px(span.first - h)) + "\" y=\"" + num(f.py(z + h)) + "\" width=\"" +
             num(f.px(span.second + h) - f.px(span.first - h)) + "\" height=\"" + num(f.py(z - h) - f.py(z + h)) +
             "\"/>\n";
    }
    svg += "</g>\n";

    double ax = 0.0, az = 1.0;
    if (r.axis) {
      ax = (*r.axis)[0];
      az = (*r.axis)[2];
    } else {
      double sxx = 0, szz = 0, sxz = 0, mx = 0, mz = 0;
      for (const auto& [x, z] : r.points) mx += x, mz += z;
      mx /= r.points.size();
      mz /= r.points.size();
      for (const auto& [x, z] : r.points) {
        sxx += (x - mx) * (x - mx);
        szz += (z - mz) * (z - mz);
        sxz += (x - mx) * (z - mz);
      }
      const double theta = 0.5 * std::atan2(2 * sxz, sxx - szz);
      ax = std::cos(theta);
      az = std::sin(theta);
    }
    const double n = std::hypot(ax, az);
    if (n > 1e-12) {
      ax /= n;
      az /= n;
      svg += "<line x1=\"" + num(f.px(-ax)) + "\" y1=\"" + num(f.py(-az)) + "\" x2=\"" + num(f.px(ax)) + "\" y2=\"" +
             num(f.py(az)) + "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    }
  }
  return svg + "</svg>\n";
}

std::string render_svg(std::string_view csv) {
  const auto lines = lines_of(csv);
  if (lines.rows.empty()) malformed(1, "empty input");
  const auto first = lines.rows[0].second;
  if (first.starts_with("alpha,")) return render_scan_svg(parse_scan_csv(csv));
  if (first.starts_with("#") || first == "x,z") return render_region_svg(parse_region_csv(csv));
  malformed(lines.rows[0].first, "unrecognised header");
}

}  // namespace waylab::plot
