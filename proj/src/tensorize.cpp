#include "scalpgrid/tensorize.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

#include "scalpgrid/errors.hpp"

namespace scalpgrid {

std::vector<double> concat_sample(const BandEnergyMatrix& matrix) {
  return matrix.values;  // already row-major (channel, band)
}

SparseScalpField rasterize(const BandEnergyMatrix& matrix, const ElectrodeLayout& layout) {
  if (matrix.n_channels != static_cast<int>(layout.entries.size()))
    throw DataError("rasterize: matrix rows do not match layout size");
  SparseScalpField field;
  field.subject_id = matrix.subject_id;
  field.label = matrix.label;
  field.window_index = matrix.window_index;
  field.grid_height = layout.grid_height;
  field.grid_width = layout.grid_width;
  field.n_bands = matrix.n_bands;
  field.rows.reserve(layout.entries.size());
  field.cols.reserve(layout.entries.size());
  for (const Electrode& e : layout.entries) {
    field.rows.push_back(e.row);
    field.cols.push_back(e.col);
  }
  field.values.resize(static_cast<std::size_t>(matrix.n_bands) * matrix.n_channels);
  for (int b = 0; b < matrix.n_bands; ++b)
    for (int c = 0; c < matrix.n_channels; ++c)
      field.values[b * matrix.n_channels + c] = matrix.at(c, b);
  return field;
}

namespace {

// -1 where the pixel is not an electrode, else the electrode index.
std::vector<int> pixel_owner(const SparseScalpField& field) {
  std::vector<int> owner(static_cast<std::size_t>(field.grid_height) * field.grid_width, -1);
  for (int i = 0; i < field.n_points(); ++i)
    owner[field.rows[i] * field.grid_width + field.cols[i]] = i;
  return owner;
}

int nearest_electrode(const SparseScalpField& field, int r, int c) {
  int best = 0;
  double best_d2 = std::numeric_limits<double>::infinity();
  for (int i = 0; i < field.n_points(); ++i) {
    const double dr = r - field.rows[i];
    const double dc = c - field.cols[i];
    const double d2 = dr * dr + dc * dc;
    if (d2 < best_d2) {  // strict: ties keep the lower layout index
      best_d2 = d2;
      best = i;
    }
  }
  return best;
}

GridSample make_grid_like(const SparseScalpField& field) {
  GridSample g;
  g.subject_id = field.subject_id;
  g.label = field.label;
  g.window_index = field.window_index;
  g.height = field.grid_height;
  g.width = field.grid_width;
  g.n_bands = field.n_bands;
  g.tensor.assign(static_cast<std::size_t>(g.height) * g.width * g.n_bands, 0.0);
  return g;
}

// ---- Delaunay triangulation (Bowyer-Watson) over electrode pixels ----

struct Triangle {
  int a, b, c;
};

struct Point {
  double x, y;
};

bool ccw(const Point& a, const Point& b, const Point& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x) > 0.0;
}

// Strictly-inside-circumcircle test; assumes t is counter-clockwise.
bool in_circumcircle(const std::vector<Point>& pts, const Triangle& t, const Point& p) {
  const long double ax = pts[t.a].x - p.x, ay = pts[t.a].y - p.y;
  const long double bx = pts[t.b].x - p.x, by = pts[t.b].y - p.y;
  const long double cx = pts[t.c].x - p.x, cy = pts[t.c].y - p.y;
  const long double det = (ax * ax + ay * ay) * (bx * cy - cx * by) -
                          (bx * bx + by * by) * (ax * cy - cx * ay) +
                          (cx * cx + cy * cy) * (ax * by - bx * ay);
  return det > 0.0L;
}

std::vector<Triangle> delaunay(const std::vector<Point>& input) {
  std::vector<Point> pts = input;
  const int n = static_cast<int>(input.size());
  // Super-triangle comfortably containing the 15x15 raster.
  pts.push_back({-1000.0, -1000.0});
  pts.push_back({3000.0, -1000.0});
  pts.push_back({-1000.0, 3000.0});

  auto oriented = [&](int a, int b, int c) {
    return ccw(pts[a], pts[b], pts[c]) ? Triangle{a, b, c} : Triangle{a, c, b};
  };

  std::vector<Triangle> tris{oriented(n, n + 1, n + 2)};
  for (int p = 0; p < n; ++p) {
    std::vector<std::pair<int, int>> boundary;
    std::vector<Triangle> keep;
    for (const Triangle& t : tris) {
      if (in_circumcircle(pts, t, pts[p])) {
        const std::pair<int, int> edges[3] = {{t.a, t.b}, {t.b, t.c}, {t.c, t.a}};
        for (const auto& e : edges) {
          const auto rev = std::make_pair(e.second, e.first);
          const auto it = std::find(boundary.begin(), boundary.end(), rev);
          if (it != boundary.end())
            boundary.erase(it);  // interior edge, shared by two bad triangles
          else
            boundary.push_back(e);
        }
      } else {
        keep.push_back(t);
      }
    }
    tris = std::move(keep);
    for (const auto& e : boundary) tris.push_back(oriented(e.first, e.second, p));
  }

  std::vector<Triangle> result;
  for (const Triangle& t : tris)
    if (t.a < n && t.b < n && t.c < n) result.push_back(t);
  return result;
}

// Barycentric coordinates of p in t; all >= -eps means containment.
bool barycentric(const std::vector<Point>& pts, const Triangle& t, const Point& p,
                 double coords[3]) {
  const double x1 = pts[t.a].x, y1 = pts[t.a].y;
  const double x2 = pts[t.b].x, y2 = pts[t.b].y;
  const double x3 = pts[t.c].x, y3 = pts[t.c].y;
  const double det = (y2 - y3) * (x1 - x3) + (x3 - x2) * (y1 - y3);
  if (det == 0.0) return false;
  coords[0] = ((y2 - y3) * (p.x - x3) + (x3 - x2) * (p.y - y3)) / det;
  coords[1] = ((y3 - y1) * (p.x - x3) + (x1 - x3) * (p.y - y3)) / det;
  coords[2] = 1.0 - coords[0] - coords[1];
  const double eps = 1e-12;
  return coords[0] >= -eps && coords[1] >= -eps && coords[2] >= -eps;
}

// ---- Thin-plate spline ----

double tps_kernel(double r2) {
  if (r2 <= 0.0) return 0.0;
  return 0.5 * r2 * std::log(r2);  // r^2 log r
}

// Dense LU with partial pivoting; A is n x n row-major, factorized in place.
struct LuFactor {
  std::vector<double> a;
  std::vector<int> perm;
  int n = 0;

  void factorize(std::vector<double> matrix, int size) {
    a = std::move(matrix);
    n = size;
    perm.resize(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int k = 0; k < n; ++k) {
      int piv = k;
      double best = std::abs(a[k * n + k]);
      for (int i = k + 1; i < n; ++i)
        if (std::abs(a[i * n + k]) > best) {
          best = std::abs(a[i * n + k]);
          piv = i;
        }
      if (best == 0.0) throw NumericError("thin-plate spline: singular system");
      if (piv != k) {
        for (int j = 0; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
        std::swap(perm[k], perm[piv]);
      }
      const double inv = 1.0 / a[k * n + k];
      for (int i = k + 1; i < n; ++i) {
        const double f = a[i * n + k] * inv;
        a[i * n + k] = f;
        for (int j = k + 1; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
      }
    }
  }

  std::vector<double> solve(const std::vector<double>& rhs) const {
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) x[i] = rhs[perm[i]];
    for (int i = 1; i < n; ++i) {
      double s = x[i];
      for (int j = 0; j < i; ++j) s -= a[i * n + j] * x[j];
      x[i] = s;
    }
    for (int i = n - 1; i >= 0; --i) {
      double s = x[i];
      for (int j = i + 1; j < n; ++j) s -= a[i * n + j] * x[j];
      x[i] = s / a[i * n + i];
    }
    return x;
  }
};

}  // namespace

struct Tensorizer::Impl {
  InterpMethod method;
  IdwParams params;
  std::vector<int> rows, cols;
  int grid_height = kGridSize, grid_width = kGridSize;

  // idw / nearest precomputation: per pixel, the in-range neighbors with
  // weights, or the border electrode.
  struct PixelPlan {
    int electrode = -1;                        // >= 0: copy this electrode
    int border = -1;                           // >= 0: nearest fallback
    std::vector<std::pair<int, double>> wts;   // (electrode, weight)
  };
  std::vector<PixelPlan> plans;

  // barycentric
  std::vector<Point> pts;
  std::vector<Triangle> tris;

  // spline
  LuFactor tps;

  explicit Impl(const ElectrodeLayout& layout, InterpMethod m, IdwParams p)
      : method(m), params(p) {
    layout.validate();
    if (params.d_max <= 0.0) throw UsageError("interpolate: d_max must be positive");
    grid_height = layout.grid_height;
    grid_width = layout.grid_width;
    for (const Electrode& e : layout.entries) {
      rows.push_back(e.row);
      cols.push_back(e.col);
      pts.push_back({static_cast<double>(e.col), static_cast<double>(e.row)});
    }
    const int n = static_cast<int>(rows.size());

    SparseScalpField probe;  // geometry-only helper for nearest lookups
    probe.rows = rows;
    probe.cols = cols;
    probe.grid_height = grid_height;
    probe.grid_width = grid_width;

    plans.resize(static_cast<std::size_t>(grid_height) * grid_width);
    const std::vector<int> owner = pixel_owner(probe);
    for (int r = 0; r < grid_height; ++r)
      for (int c = 0; c < grid_width; ++c) {
        PixelPlan& plan = plans[r * grid_width + c];
        if (owner[r * grid_width + c] >= 0) {
          plan.electrode = owner[r * grid_width + c];
          continue;
        }
        const int nearest = nearest_electrode(probe, r, c);
        switch (method) {
          case InterpMethod::nearest:
          case InterpMethod::linear_barycentric:
            plan.border = nearest;  // barycentric uses it outside the hull
            break;
          case InterpMethod::idw_nn:
          case InterpMethod::idw_zero:
            for (int i = 0; i < n; ++i) {
              const double dr = r - rows[i], dc = c - cols[i];
              const double d = std::sqrt(dr * dr + dc * dc);
              if (d < params.d_max) plan.wts.emplace_back(i, 1.0 / d);
            }
            if (plan.wts.empty())
              plan.border = method == InterpMethod::idw_zero ? -1 : nearest;
            break;
          case InterpMethod::cubic_spline:
            break;
        }
      }

    if (method == InterpMethod::linear_barycentric) tris = delaunay(pts);

    if (method == InterpMethod::cubic_spline) {
      const int m_sz = n + 3;
      std::vector<double> a(static_cast<std::size_t>(m_sz) * m_sz, 0.0);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          const double dx = pts[i].x - pts[j].x, dy = pts[i].y - pts[j].y;
          a[i * m_sz + j] = tps_kernel(dx * dx + dy * dy);
        }
        a[i * m_sz + n] = 1.0;
        a[i * m_sz + n + 1] = pts[i].x;
        a[i * m_sz + n + 2] = pts[i].y;
        a[(n)*m_sz + i] = 1.0;
        a[(n + 1) * m_sz + i] = pts[i].x;
        a[(n + 2) * m_sz + i] = pts[i].y;
      }
      tps.factorize(std::move(a), m_sz);
    }
  }

  GridSample run(const SparseScalpField& field) const {
    GridSample g = make_grid_like(field);
    const int n = field.n_points();
    for (int b = 0; b < field.n_bands; ++b) {
      const double* u = field.values.data() + static_cast<std::size_t>(b) * n;

      std::vector<double> spline_w;
      if (method == InterpMethod::cubic_spline) {
        std::vector<double> rhs(n + 3, 0.0);
        for (int i = 0; i < n; ++i) rhs[i] = u[i];
        spline_w = tps.solve(rhs);
      }

      for (int r = 0; r < g.height; ++r)
        for (int c = 0; c < g.width; ++c) {
          const PixelPlan& plan = plans[r * g.width + c];
          double value = 0.0;
          if (plan.electrode >= 0) {
            value = u[plan.electrode];  // knot exactness for every method
          } else
            switch (method) {
              case InterpMethod::nearest:
                value = u[plan.border];
                break;
              case InterpMethod::idw_nn:
              case InterpMethod::idw_zero: {
                if (!plan.wts.empty()) {
                  double num = 0.0, den = 0.0;
                  for (const auto& [i, w] : plan.wts) {
                    num += w * u[i];
                    den += w;
                  }
                  value = num / den;
                } else {
                  value = plan.border >= 0 ? u[plan.border] : 0.0;
                }
                break;
              }
              case InterpMethod::linear_barycentric: {
                const Point p{static_cast<double>(c), static_cast<double>(r)};
                bool found = false;
                double coords[3];
                for (const Triangle& t : tris)
                  if (barycentric(pts, t, p, coords)) {
                    value = coords[0] * u[t.a] + coords[1] * u[t.b] + coords[2] * u[t.c];
                    found = true;
                    break;
                  }
                if (!found) value = u[plan.border];  // outside the convex hull
                break;
              }
              case InterpMethod::cubic_spline: {
                const Point p{static_cast<double>(c), static_cast<double>(r)};
                double s = spline_w[n] + spline_w[n + 1] * p.x + spline_w[n + 2] * p.y;
                for (int i = 0; i < n; ++i) {
                  const double dx = p.x - pts[i].x, dy = p.y - pts[i].y;
                  s += spline_w[i] * tps_kernel(dx * dx + dy * dy);
                }
                if (s < 0.0) {
                  s = 0.0;
                  ++g.clamped;
                }
                value = s;
                break;
              }
            }
          g.at(r, c, b) = value;
        }
    }
    return g;
  }
};

Tensorizer::Tensorizer(const ElectrodeLayout& layout, InterpMethod method, IdwParams params)
    : impl_(std::make_unique<Impl>(layout, method, params)) {}
Tensorizer::~Tensorizer() = default;
Tensorizer::Tensorizer(Tensorizer&&) noexcept = default;
Tensorizer& Tensorizer::operator=(Tensorizer&&) noexcept = default;

GridSample Tensorizer::grid(const BandEnergyMatrix& matrix) const {
  SparseScalpField field;
  field.subject_id = matrix.subject_id;
  field.label = matrix.label;
  field.window_index = matrix.window_index;
  field.grid_height = impl_->grid_height;
  field.grid_width = impl_->grid_width;
  field.n_bands = matrix.n_bands;
  field.rows = impl_->rows;
  field.cols = impl_->cols;
  field.values.resize(static_cast<std::size_t>(matrix.n_bands) * matrix.n_channels);
  for (int b = 0; b < matrix.n_bands; ++b)
    for (int c = 0; c < matrix.n_channels; ++c)
      field.values[b * matrix.n_channels + c] = matrix.at(c, b);
  return impl_->run(field);
}

namespace {

ElectrodeLayout layout_from_field(const SparseScalpField& field) {
  ElectrodeLayout layout;
  layout.grid_height = field.grid_height;
  layout.grid_width = field.grid_width;
  for (int i = 0; i < field.n_points(); ++i)
    layout.entries.push_back({"e" + std::to_string(i), field.rows[i], field.cols[i]});
  return layout;
}

}  // namespace

GridSample interpolate(const SparseScalpField& field, InterpMethod method,
                       const IdwParams& params) {
  Tensorizer::Impl impl(layout_from_field(field), method, params);
  return impl.run(field);
}

GridSample interpolate_idw(const SparseScalpField& field, const IdwParams& params) {
  return interpolate(field,
                     params.border_fill == IdwParams::BorderFill::zero ? InterpMethod::idw_zero
                                                                       : InterpMethod::idw_nn,
                     params);
}

void write_grid_dump(const std::string& path, const std::vector<GridSample>& grids,
                     InterpMethod method, double d_max) {
  std::ofstream out(path);
  if (!out) throw DataError("grid dump: cannot write '" + path + "'");
  out << "# method=" << to_string(method) << " d_max=" << d_max << "\n";
  out << "subject_id,label,window,values_row_col_band\n";
  out.precision(17);
  for (const GridSample& g : grids) {
    out << g.subject_id << "," << g.label << "," << g.window_index;
    for (double v : g.tensor) out << "," << v;
    out << "\n";
  }
  if (!out) throw DataError("grid dump: write failure for '" + path + "'");
}

}  // namespace scalpgrid
