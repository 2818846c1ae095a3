#include "isogeny/io.hpp"

#include <istream>
#include <ostream>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace iso {

Int parse_bound(const std::string& s) {
  static const std::regex re(R"(\s*(\d+)(?:\.(\d*))?(?:[eE]\+?(\d+))?\s*)");
  std::smatch mt;
  if (!std::regex_match(s, mt, re)) throw DomainError("not a nonnegative integer bound: '" + s + "'");
  std::string digits = mt[1].str() + mt[2].str();
  long frac = static_cast<long>(mt[2].length());
  long exp = mt[3].matched ? std::stol(mt[3].str()) : 0;
  if (exp > 100000) throw DomainError("exponent too large in '" + s + "'");
  long shift = exp - frac;
  Int v = parse_int(digits);
  if (shift >= 0) return v * ipow(10, static_cast<unsigned long>(shift));
  Int d = ipow(10, static_cast<unsigned long>(-shift));
  if (v % d != 0) throw DomainError("bound is not an integer: '" + s + "'");
  return v / d;
}

const char* csv_header() {
  return "m,a,b,A_model,B_model,defect,A_min,B_min,twist_height,j_num,j_den,multiplicity";
}

std::vector<CensusRow> census_rows(const std::vector<TwistClassRecord>& recs, bool equipped) {
  std::vector<CensusRow> out;
  for (const auto& r : recs) {
    auto row_for = [&](const ClassPoint& p, int mult) {
      CensusRow c;
      c.m = r.m;
      if (p.b != 0) {
        c.a = p.a.get_str();
        c.b = p.b.get_str();
      }
      c.A_model = p.A_model;
      c.B_model = p.B_model;
      c.defect = p.defect;
      c.A_min = r.A_min;
      c.B_min = r.B_min;
      c.twist_height = r.twist_height;
      c.j_num = r.j_invariant.get_num();
      c.j_den = r.j_invariant.get_den();
      c.multiplicity = mult;
      return c;
    };
    if (equipped) {
      for (const auto& p : r.points) out.push_back(row_for(p, p.multiplicity));
    } else {
      out.push_back(row_for(r.points.front(), r.multiplicity()));
    }
  }
  return out;
}

void write_csv_row(std::ostream& os, const CensusRow& r) {
  os << r.m << ',' << r.a << ',' << r.b << ',' << r.A_model.get_str() << ','
     << r.B_model.get_str() << ',' << r.defect.get_str() << ',' << r.A_min.get_str() << ','
     << r.B_min.get_str() << ',' << r.twist_height.get_str() << ',' << r.j_num.get_str() << ','
     << r.j_den.get_str() << ',' << r.multiplicity << '\n';
}

void write_csv(std::ostream& os, const std::vector<CensusRow>& rows) {
  os << csv_header() << '\n';
  for (const auto& r : rows) write_csv_row(os, r);
}

std::vector<CensusRow> read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != csv_header()) throw DomainError("missing CSV header");
  std::vector<CensusRow> out;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (!line.empty() && line.back() == ',') f.emplace_back();
    if (f.size() != 12) throw DomainError("bad CSV row: " + line);
    CensusRow r;
    r.m = std::stoi(f[0]);
    r.a = f[1];
    r.b = f[2];
    r.A_model = parse_int(f[3]);
    r.B_model = parse_int(f[4]);
    r.defect = parse_int(f[5]);
    r.A_min = parse_int(f[6]);
    r.B_min = parse_int(f[7]);
    r.twist_height = parse_int(f[8]);
    r.j_num = parse_int(f[9]);
    r.j_den = parse_int(f[10]);
    r.multiplicity = std::stoi(f[11]);
    out.push_back(std::move(r));
  }
  return out;
}

std::string rows_to_json(const std::vector<CensusRow>& rows, int indent) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json o;
    o["m"] = r.m;
    o["a"] = r.a.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(r.a);
    o["b"] = r.b.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(r.b);
    o["A_model"] = r.A_model.get_str();
    o["B_model"] = r.B_model.get_str();
    o["defect"] = r.defect.get_str();
    o["A_min"] = r.A_min.get_str();
    o["B_min"] = r.B_min.get_str();
    o["twist_height"] = r.twist_height.get_str();
    o["j_num"] = r.j_num.get_str();
    o["j_den"] = r.j_den.get_str();
    o["multiplicity"] = r.multiplicity;
    arr.push_back(std::move(o));
  }
  return arr.dump(indent);
}

}  // namespace iso
