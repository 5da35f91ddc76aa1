// Copyright 2026 The Privgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "privgame/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

namespace privgame {

namespace {

constexpr double kPanelW = 640.0, kPanelH = 420.0;
constexpr double kLeft = 70.0, kRight = 20.0, kTop = 44.0, kBottom = 52.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b"};

std::string fnum(double x, const char* spec = "%.6g") {
  char buf[40];
  std::snprintf(buf, sizeof(buf), spec, x);
  return buf;
}

struct Series {
  std::string name;
  std::vector<std::vector<std::pair<double, double>>> segments;
};

using Column = std::function<std::optional<double>(const SweepRow&)>;

// Median spacing of the distinct q grid, used to break lines across
// existence gaps.
double grid_step(const SweepTable& table) {
  std::vector<double> qs;
  for (const auto& r : table.rows) qs.push_back(r.q);
  std::sort(qs.begin(), qs.end());
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
  std::vector<double> diffs;
  for (std::size_t i = 1; i < qs.size(); ++i) diffs.push_back(qs[i] - qs[i - 1]);
  if (diffs.empty()) return 1.0;
  std::sort(diffs.begin(), diffs.end());
  return diffs[diffs.size() / 2];
}

Series extract(const SweepTable& table, const std::string& kind,
               const Column& column, const std::string& name, double step) {
  Series s;
  s.name = name;
  std::vector<std::pair<double, double>> segment;
  double last_q = -1.0;
  for (const auto& row : table.rows) {
    if (row.kind != kind) continue;
    const auto y = column(row);
    if (!y || !std::isfinite(*y)) continue;
    if (!segment.empty() && row.q - last_q > 3.0 * step) {
      s.segments.push_back(std::move(segment));
      segment.clear();
    }
    segment.emplace_back(row.q, *y);
    last_q = row.q;
  }
  if (!segment.empty()) s.segments.push_back(std::move(segment));
  return s;
}

double nice_step(double range) {
  if (!(range > 0.0)) return 1.0;
  const double raw = range / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double frac = raw / mag;
  if (frac < 1.5) return mag;
  if (frac < 3.5) return 2.0 * mag;
  if (frac < 7.5) return 5.0 * mag;
  return 10.0 * mag;
}

struct Panel {
  std::string title;
  std::string x_label = "q";
  std::string y_label;
  std::vector<Series> series;
  // Optional colored existence strip drawn under the x axis.
  std::vector<std::pair<double, std::string>> strip;  // (q, kind)
};

void render_panel(std::ostringstream& out, const Panel& panel, double x0) {
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const auto& s : panel.series) {
    for (const auto& seg : s.segments) {
      for (const auto& [x, y] : seg) {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
      }
    }
  }
  if (xmin > xmax) {
    xmin = 0.0;
    xmax = 1.0;
  }
  if (ymin > ymax) {
    ymin = 0.0;
    ymax = 1.0;
  }
  if (ymax - ymin < 1e-12) {
    ymin -= 0.5;
    ymax += 0.5;
  }
  const double ypad = 0.05 * (ymax - ymin);
  ymin -= ypad;
  ymax += ypad;

  const double plot_w = kPanelW - kLeft - kRight;
  const double plot_h = kPanelH - kTop - kBottom;
  const auto X = [&](double x) {
    return x0 + kLeft + (x - xmin) / (xmax - xmin) * plot_w;
  };
  const auto Y = [&](double y) {
    return kTop + (ymax - y) / (ymax - ymin) * plot_h;
  };

  out << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect x=\"" << fnum(x0 + kLeft) << "\" y=\"" << fnum(kTop)
      << "\" width=\"" << fnum(plot_w) << "\" height=\"" << fnum(plot_h)
      << "\" fill=\"none\" stroke=\"#333333\"/>\n";
  out << "<text x=\"" << fnum(x0 + kLeft + plot_w / 2) << "\" y=\"22\" "
      << "text-anchor=\"middle\" font-size=\"15\">" << panel.title
      << "</text>\n";

  const double xstep = nice_step(xmax - xmin);
  for (double t = std::ceil(xmin / xstep) * xstep; t <= xmax + 1e-12;
       t += xstep) {
    out << "<line x1=\"" << fnum(X(t)) << "\" y1=\"" << fnum(kTop)
        << "\" x2=\"" << fnum(X(t)) << "\" y2=\"" << fnum(kTop + plot_h)
        << "\" stroke=\"#dddddd\"/>\n";
    out << "<text x=\"" << fnum(X(t)) << "\" y=\""
        << fnum(kTop + plot_h + 16) << "\" text-anchor=\"middle\">"
        << fnum(t, "%.4g") << "</text>\n";
  }
  const double ystep = nice_step(ymax - ymin);
  for (double t = std::ceil(ymin / ystep) * ystep; t <= ymax + 1e-12;
       t += ystep) {
    out << "<line x1=\"" << fnum(x0 + kLeft) << "\" y1=\"" << fnum(Y(t))
        << "\" x2=\"" << fnum(x0 + kLeft + plot_w) << "\" y2=\""
        << fnum(Y(t)) << "\" stroke=\"#dddddd\"/>\n";
    out << "<text x=\"" << fnum(x0 + kLeft - 6) << "\" y=\""
        << fnum(Y(t) + 4) << "\" text-anchor=\"end\">" << fnum(t, "%.4g")
        << "</text>\n";
  }
  out << "<text x=\"" << fnum(x0 + kLeft + plot_w / 2) << "\" y=\""
      << fnum(kPanelH - 14) << "\" text-anchor=\"middle\">" << panel.x_label
      << "</text>\n";
  out << "<text transform=\"translate(" << fnum(x0 + 16) << ","
      << fnum(kTop + plot_h / 2) << ") rotate(-90)\" text-anchor=\"middle\">"
      << panel.y_label << "</text>\n";

  int color = 0;
  for (const auto& s : panel.series) {
    const char* stroke = kPalette[color % 6];
    for (const auto& seg : s.segments) {
      if (seg.size() == 1) {
        out << "<circle cx=\"" << fnum(X(seg[0].first)) << "\" cy=\""
            << fnum(Y(seg[0].second)) << "\" r=\"2\" fill=\"" << stroke
            << "\"/>\n";
        continue;
      }
      out << "<polyline fill=\"none\" stroke=\"" << stroke
          << "\" stroke-width=\"1.8\" points=\"";
      for (const auto& [x, y] : seg) {
        out << fnum(X(x), "%.2f") << ',' << fnum(Y(y), "%.2f") << ' ';
      }
      out << "\"/>\n";
    }
    const double ly = kTop + 16.0 + 16.0 * color;
    out << "<line x1=\"" << fnum(x0 + kLeft + 10) << "\" y1=\"" << fnum(ly)
        << "\" x2=\"" << fnum(x0 + kLeft + 34) << "\" y2=\"" << fnum(ly)
        << "\" stroke=\"" << stroke << "\" stroke-width=\"1.8\"/>\n";
    out << "<text x=\"" << fnum(x0 + kLeft + 40) << "\" y=\"" << fnum(ly + 4)
        << "\">" << s.name << "</text>\n";
    ++color;
  }

  if (!panel.strip.empty()) {
    const double sy = kTop + plot_h + 22.0;
    const auto strip_color = [](const std::string& kind) {
      if (kind == "discriminatory") return "#1f77b4";
      if (kind == "uniform_A") return "#2ca02c";
      if (kind == "uniform_B") return "#ff7f0e";
      return "#cccccc";
    };
    double prev_q = xmin;
    for (std::size_t i = 0; i < panel.strip.size(); ++i) {
      const double q = panel.strip[i].first;
      const double next =
          i + 1 < panel.strip.size() ? panel.strip[i + 1].first : xmax;
      const double a = 0.5 * (prev_q + q);
      const double b = 0.5 * (q + next);
      out << "<rect x=\"" << fnum(X(a)) << "\" y=\"" << fnum(sy)
          << "\" width=\"" << fnum(std::max(0.5, X(b) - X(a))) << "\" "
          << "height=\"6\" fill=\"" << strip_color(panel.strip[i].second)
          << "\"/>\n";
      prev_q = q;
    }
  }
  out << "</g>\n";
}

std::string render_figure(const std::vector<Panel>& panels) {
  std::ostringstream out;
  const double w = kPanelW * panels.size();
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fnum(w)
      << "\" height=\"" << fnum(kPanelH) << "\" viewBox=\"0 0 " << fnum(w)
      << ' ' << fnum(kPanelH) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t i = 0; i < panels.size(); ++i) {
    render_panel(out, panels[i], kPanelW * i);
  }
  out << "</svg>\n";
  return out.str();
}

Column col_price = [](const SweepRow& r) { return r.price; };
Column col_cutoff = [](const SweepRow& r) { return r.cutoff; };
Column col_r1 = [](const SweepRow& r) { return r.r1; };
Column col_r0 = [](const SweepRow& r) { return r.r0; };
Column col_mi = [](const SweepRow& r) { return r.mi_bits; };
Column col_adv = [](const SweepRow& r) { return r.adv_utility; };
Column col_cs = [](const SweepRow& r) { return r.cs; };
Column col_profit = [](const SweepRow& r) { return r.profit; };

void add_if_nonempty(std::vector<Series>& dst, Series s) {
  if (!s.segments.empty()) dst.push_back(std::move(s));
}

}  // namespace

std::string svg_prices_figure(const SweepTable& table) {
  const double step = grid_step(table);
  Panel p;
  p.title = "Prices and purchase cutoff";
  p.y_label = "price / value";
  add_if_nonempty(p.series,
                  extract(table, "discriminatory", col_price, "p1 (discriminatory)", step));
  add_if_nonempty(p.series,
                  extract(table, "discriminatory", col_cutoff, "v* (discriminatory)", step));
  for (const char* kind : {"uniform_A", "uniform_B"}) {
    add_if_nonempty(p.series, extract(table, kind, col_price,
                                      std::string("p_M (") + kind + ")", step));
  }
  return render_figure({p});
}

std::string svg_posteriors_figure(const SweepTable& table) {
  const double step = grid_step(table);
  Panel left;
  left.title = "Posterior beliefs";
  left.y_label = "Pr(type t1 | signal)";
  add_if_nonempty(left.series,
                  extract(table, "discriminatory", col_r1, "r(1, v*(q), q)", step));
  add_if_nonempty(left.series,
                  extract(table, "discriminatory", col_r0, "r(0, v*(q), q)", step));
  for (const char* kind : {"uniform_A", "uniform_B"}) {
    add_if_nonempty(left.series, extract(table, kind, col_r1,
                                         std::string("r(1, p_M, q) [") + kind + "]", step));
    add_if_nonempty(left.series, extract(table, kind, col_r0,
                                         std::string("r(0, p_M, q) [") + kind + "]", step));
  }

  Panel right;
  right.title = "Equilibrium regions";
  right.y_label = "";
  for (const auto& row : table.rows) {
    right.strip.emplace_back(row.q, row.kind);
  }
  // Give the strip panel an x range by adding an invisible series envelope.
  Series envelope;
  envelope.name = "";
  std::vector<std::pair<double, double>> seg;
  for (const auto& row : table.rows) seg.emplace_back(row.q, 0.0);
  if (!seg.empty()) envelope.segments.push_back(seg);
  right.series.push_back(envelope);
  return render_figure({left, right});
}

std::string svg_mutual_information_figure(const SweepTable& table) {
  const double step = grid_step(table);
  Panel p;
  p.title = "Signal-type mutual information";
  p.y_label = "bits";
  add_if_nonempty(p.series,
                  extract(table, "discriminatory", col_mi, "discriminatory", step));
  for (const char* kind : {"uniform_A", "uniform_B"}) {
    add_if_nonempty(p.series, extract(table, kind, col_mi, kind, step));
  }
  return render_figure({p});
}

std::string svg_advertiser_utility_figure(const SweepTable& table) {
  const double step = grid_step(table);
  Panel p;
  p.title = "Advertiser utility";
  p.y_label = "utility";
  add_if_nonempty(p.series,
                  extract(table, "discriminatory", col_adv, "discriminatory", step));
  for (const char* kind : {"uniform_A", "uniform_B"}) {
    add_if_nonempty(p.series, extract(table, kind, col_adv, kind, step));
  }
  return render_figure({p});
}

std::string svg_welfare_figure(const SweepTable& table) {
  const double step = grid_step(table);
  Panel cs;
  cs.title = "Consumer surplus";
  cs.y_label = "utility";
  Panel profit;
  profit.title = "Seller profit";
  profit.y_label = "revenue";
  for (const char* kind : {"discriminatory", "uniform_A", "uniform_B"}) {
    add_if_nonempty(cs.series, extract(table, kind, col_cs, kind, step));
    add_if_nonempty(profit.series, extract(table, kind, col_profit, kind, step));
  }
  return render_figure({cs, profit});
}

std::string svg_discontinuity_figure(const SweepTable& table) {
  const double step = grid_step(table);
  Panel cs;
  cs.title = "Consumer surplus";
  cs.y_label = "utility";
  Panel profit;
  profit.title = "Seller profit";
  profit.y_label = "revenue";
  Panel adv;
  adv.title = "Advertiser utility";
  adv.y_label = "utility";
  for (const char* kind : {"discriminatory", "uniform_A", "uniform_B"}) {
    add_if_nonempty(cs.series, extract(table, kind, col_cs, kind, step));
    add_if_nonempty(profit.series, extract(table, kind, col_profit, kind, step));
    add_if_nonempty(adv.series, extract(table, kind, col_adv, kind, step));
  }
  return render_figure({cs, profit, adv});
}

}  // namespace privgame
