#pragma once

#include <memory>
#include <string>
#include <vector>

#include "scalpgrid/config.hpp"
#include "scalpgrid/dsp.hpp"
#include "scalpgrid/layout.hpp"

namespace scalpgrid {

// Scattered per-band energies pinned to electrode pixels of the scalp raster.
struct SparseScalpField {
  std::string subject_id;
  int label = 0;
  std::size_t window_index = 0;
  int grid_height = kGridSize;
  int grid_width = kGridSize;
  int n_bands = kNumBands;
  std::vector<int> rows;               // per electrode, layout order
  std::vector<int> cols;
  std::vector<double> values;          // [band * n_electrodes + electrode]

  int n_points() const { return static_cast<int>(rows.size()); }
  double value(int band, int electrode) const { return values[band * n_points() + electrode]; }
};

// Interpolated scalp tensor, (row, col, band) row-major. Every electrode
// pixel carries its source energy exactly; values are finite and >= 0.
struct GridSample {
  std::string subject_id;
  int label = 0;
  std::size_t window_index = 0;
  int height = kGridSize;
  int width = kGridSize;
  int n_bands = kNumBands;
  std::vector<double> tensor;
  int clamped = 0;  // spline values lifted to 0 from below

  double at(int row, int col, int band) const {
    return tensor[(static_cast<std::size_t>(row) * width + col) * n_bands + band];
  }
  double& at(int row, int col, int band) {
    return tensor[(static_cast<std::size_t>(row) * width + col) * n_bands + band];
  }
};

struct IdwParams {
  double d_max = 4.0;  // neighborhood radius, pixels
  enum class BorderFill { nearest, zero } border_fill = BorderFill::nearest;
};

// Row-major (channel, band) flattening; 34*5 = 170 values.
std::vector<double> concat_sample(const BandEnergyMatrix& matrix);

// Pins matrix row i to the layout's pixel i for every band.
SparseScalpField rasterize(const BandEnergyMatrix& matrix, const ElectrodeLayout& layout);

// Shepard weighting w_i = 1/d(x, x_i) over electrodes closer than d_max;
// electrode pixels are copied verbatim, which also removes the d = 0
// singularity. Pixels with an empty neighborhood take the globally nearest
// electrode's value (ties to the lower layout index) or zero.
GridSample interpolate_idw(const SparseScalpField& field, const IdwParams& params);

// Dispatch over all interpolation methods. linear_barycentric triangulates
// the electrode pixels (Delaunay) and falls back to the nearest electrode
// outside the convex hull; cubic_spline is a thin-plate spline, exact at the
// knots and clamped at 0 from below.
GridSample interpolate(const SparseScalpField& field, InterpMethod method,
                       const IdwParams& params);

// Precomputes geometry (triangulation, spline factorization) for one layout
// so per-window interpolation stays cheap inside experiment loops.
class Tensorizer {
 public:
  Tensorizer(const ElectrodeLayout& layout, InterpMethod method, IdwParams params);
  ~Tensorizer();
  Tensorizer(Tensorizer&&) noexcept;
  Tensorizer& operator=(Tensorizer&&) noexcept;

  GridSample grid(const BandEnergyMatrix& matrix) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Per-window rows of 1125 values in (row, col, band) order.
void write_grid_dump(const std::string& path, const std::vector<GridSample>& grids,
                     InterpMethod method, double d_max);

}  // namespace scalpgrid
