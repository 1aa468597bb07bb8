#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "surrogen/generator.hpp"
#include "surrogen/time_series.hpp"

namespace surrogen::io {

enum class MissingPolicy { Error, Interpolate };

// Reads one numeric column from a CSV file (UTF-8, comma separator, '.'
// decimal point, optional single header row). `column` is matched against
// header names first; if no header cell matches and the string parses as a
// non-negative integer it is used as a 0-based column index. Blank cells
// are missing data: under Error the row is reported, under Interpolate the
// gap is filled linearly between the nearest finite neighbours and
// boundary gaps take the nearest value. A cell that is neither blank nor
// numeric is a ParseError carrying the 0-based data row.
TimeSeries read_series_csv(const std::filesystem::path& path,
                           const std::string& column,
                           MissingPolicy policy = MissingPolicy::Error);

enum class BatchFormat { Wide, Long };

// Wide: header "s0000,s0001,...", one row per time index. Long: header
// "sample_id,index,value", surrogates in order, each in index order.
// Values are written as shortest round-trip decimals, so both formats
// read back bit-exact.
void write_surrogates_csv(const std::filesystem::path& path,
                          const SurrogateBatch& batch, BatchFormat format);

// Reads either format back (detected from the header) as one value vector
// per surrogate.
std::vector<std::vector<double>> read_surrogates_csv(const std::filesystem::path& path);

}  // namespace surrogen::io
