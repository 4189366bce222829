#include "scalpgrid/layout.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "scalpgrid/errors.hpp"

namespace scalpgrid {

void ElectrodeLayout::validate() const {
  if (static_cast<int>(entries.size()) != kNumElectrodes)
    throw DataError("layout: expected " + std::to_string(kNumElectrodes) +
                    " electrodes, got " + std::to_string(entries.size()));
  std::set<std::string> names;
  std::set<std::pair<int, int>> pixels;
  for (const Electrode& e : entries) {
    if (e.name.empty()) throw DataError("layout: empty electrode name");
    if (e.row < 0 || e.row >= grid_height || e.col < 0 || e.col >= grid_width)
      throw DataError("layout: electrode '" + e.name + "' coordinate out of range: (" +
                      std::to_string(e.row) + "," + std::to_string(e.col) + ")");
    if (!names.insert(e.name).second)
      throw DataError("layout: duplicate electrode name '" + e.name + "'");
    if (!pixels.insert({e.row, e.col}).second)
      throw DataError("layout: duplicate pixel (" + std::to_string(e.row) + "," +
                      std::to_string(e.col) + ")");
  }
}

int ElectrodeLayout::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i].name == name) return static_cast<int>(i);
  return -1;
}

ElectrodeLayout default_layout() {
  ElectrodeLayout layout;
  layout.entries = {
      {"Fp1", 0, 5},  {"Fpz", 0, 7},  {"Fp2", 0, 9},
      {"AF3", 1, 5},  {"AF4", 1, 9},
      {"F7", 3, 1},   {"F3", 3, 4},   {"Fz", 3, 7},   {"F4", 3, 10},  {"F8", 3, 13},
      {"FC5", 5, 2},  {"FC1", 5, 5},  {"FC2", 5, 9},  {"FC6", 5, 12},
      {"T7", 7, 0},   {"C3", 7, 4},   {"Cz", 7, 7},   {"C4", 7, 10},  {"T8", 7, 14},
      {"CP5", 9, 2},  {"CP1", 9, 5},  {"CP2", 9, 9},  {"CP6", 9, 12},
      {"P7", 11, 1},  {"P3", 11, 4},  {"Pz", 11, 7},  {"P4", 11, 10}, {"P8", 11, 13},
      {"PO3", 13, 5}, {"POz", 13, 7}, {"PO4", 13, 9},
      {"O1", 14, 5},  {"Oz", 14, 7},  {"O2", 14, 9},
  };
  layout.validate();
  return layout;
}

ElectrodeLayout load_layout(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("layout: cannot open '" + path + "'");
  ElectrodeLayout layout;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ss(line);
    Electrode e;
    std::string row_s, col_s;
    if (!std::getline(ss, e.name, ',') || !std::getline(ss, row_s, ',') ||
        !std::getline(ss, col_s))
      throw DataError("layout: parse failure at " + path + ":" + std::to_string(line_no));
    try {
      e.row = std::stoi(row_s);
      e.col = std::stoi(col_s);
    } catch (const std::exception&) {
      throw DataError("layout: bad coordinates at " + path + ":" + std::to_string(line_no));
    }
    // trim trailing whitespace in name
    while (!e.name.empty() && (e.name.back() == ' ' || e.name.back() == '\t'))
      e.name.pop_back();
    layout.entries.push_back(std::move(e));
  }
  layout.validate();
  return layout;
}

void save_layout(const ElectrodeLayout& layout, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DataError("layout: cannot write '" + path + "'");
  out << "# electrode,row,col  (15x15 grid, row 0 frontal)\n";
  for (const Electrode& e : layout.entries)
    out << e.name << "," << e.row << "," << e.col << "\n";
  if (!out) throw DataError("layout: write failure for '" + path + "'");
}

}  // namespace scalpgrid
