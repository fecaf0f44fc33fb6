#pragma once

#include <string>

namespace narayana {

enum class TableFormat { Aligned, Tsv };

// Rows n = i..nmax, columns j = i..n (the printed layout: the last column of
// each row is the diagonal, zero for i < n and one for i = n). Aligned output
// right-justifies columns; TSV is rectangular with empty cells past the
// diagonal and a "n\j" header.
std::string render_table(int i, int nmax, TableFormat format);

}  // namespace narayana
