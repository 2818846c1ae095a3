#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "isogeny/arith.hpp"
#include "isogeny/census.hpp"

namespace iso {

// "123", "1e9", "2.5e3"; rejects negatives and non-integral values
Int parse_bound(const std::string& s);

// one output row; a and b are empty for nonzero-genus curves
struct CensusRow {
  int m = 0;
  std::string a, b;
  Int A_model, B_model, defect, A_min, B_min, twist_height, j_num, j_den;
  int multiplicity = 1;
};

const char* csv_header();

// equipped: one row per parameter point; otherwise one row per class
std::vector<CensusRow> census_rows(const std::vector<TwistClassRecord>& recs, bool equipped);

void write_csv(std::ostream& os, const std::vector<CensusRow>& rows);
void write_csv_row(std::ostream& os, const CensusRow& r);
std::vector<CensusRow> read_csv(std::istream& is);

// big integers are written as decimal strings
std::string rows_to_json(const std::vector<CensusRow>& rows, int indent = -1);

}  // namespace iso
