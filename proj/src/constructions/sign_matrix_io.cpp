#include <istream>
#include <ostream>
#include <string>

#include "starb/constructions.hpp"
#include "starb/errors.hpp"

namespace starb {

void write_sign_matrix(std::ostream& out, const IntMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      switch (m(r, c)) {
        case 1: out << '+'; break;
        case -1: out << '-'; break;
        case 0: out << '0'; break;
        default: throw std::invalid_argument("sign matrix entries must be in {-1,0,1}");
      }
    }
    out << '\n';
  }
}

IntMatrix read_sign_matrix(std::istream& in) {
  std::vector<std::vector<IntMatrix::value_type>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<IntMatrix::value_type> row;
    for (char ch : line) {
      switch (ch) {
        case '+': row.push_back(1); break;
        case '-': row.push_back(-1); break;
        case '0': row.push_back(0); break;
        case ' ': case '\t': case '\r': break;
        default: throw ParseError(std::string("unexpected character '") + ch + "' in sign matrix", lineno);
      }
    }
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError("row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(rows.front().size()), lineno);
    rows.push_back(std::move(row));
  }
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  return m;
}

}  // namespace starb
