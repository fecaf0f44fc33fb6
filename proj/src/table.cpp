#include "narayana/table.hpp"

#include "narayana/counting.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace narayana {

std::string render_table(int i, int nmax, TableFormat format) {
  if (i < 1 || i > nmax || nmax > 50) {
    throw std::domain_error("render_table: need 1 <= i <= nmax <= 50, got i=" +
                            std::to_string(i) + ", nmax=" + std::to_string(nmax));
  }

  // cells[r][c]: row n = i + r, column j = i + c; empty past the diagonal.
  std::vector<std::vector<std::string>> cells;
  for (int n = i; n <= nmax; ++n) {
    std::vector<std::string> row;
    for (int j = i; j <= n; ++j) {
      row.push_back(gen_narayana(i, n, j).str());
    }
    cells.push_back(std::move(row));
  }

  std::ostringstream out;
  const int columns = nmax - i + 1;
  if (format == TableFormat::Tsv) {
    out << "n\\j";
    for (int c = 0; c < columns; ++c) out << '\t' << i + c;
    out << '\n';
    for (int r = 0; r < static_cast<int>(cells.size()); ++r) {
      out << i + r;
      for (int c = 0; c < columns; ++c) {
        out << '\t';
        if (c < static_cast<int>(cells[r].size())) out << cells[r][c];
      }
      out << '\n';
    }
    return out.str();
  }

  const std::string corner = "n\\j";
  std::size_t label_width = corner.size();
  for (int r = 0; r < static_cast<int>(cells.size()); ++r) {
    label_width = std::max(label_width, std::to_string(i + r).size());
  }
  std::vector<std::size_t> widths(columns);
  for (int c = 0; c < columns; ++c) {
    widths[c] = std::to_string(i + c).size();
    for (const auto& row : cells) {
      if (c < static_cast<int>(row.size())) widths[c] = std::max(widths[c], row[c].size());
    }
  }

  auto pad = [&out](const std::string& text, std::size_t width) {
    for (std::size_t k = text.size(); k < width; ++k) out << ' ';
    out << text;
  };

  pad(corner, label_width);
  for (int c = 0; c < columns; ++c) {
    out << "  ";
    pad(std::to_string(i + c), widths[c]);
  }
  out << '\n';
  for (int r = 0; r < static_cast<int>(cells.size()); ++r) {
    pad(std::to_string(i + r), label_width);
    for (int c = 0; c < static_cast<int>(cells[r].size()); ++c) {
      out << "  ";
      pad(cells[r][c], widths[c]);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace narayana
