#include "ucstar/zero_one_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ucstar {

namespace {

std::vector<std::vector<int>> digit_rows(std::vector<std::string> const& lines) {
  std::vector<std::vector<int>> rows;
  for (auto const& line : lines) {
    std::vector<int> row;
    for (char c : line) {
      if (c != '0' && c != '1')
        throw std::invalid_argument("matrix entries must be 0 or 1, got '" + std::string(1, c) + "'");
      row.push_back(c - '0');
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

ZeroOneMatrix::ZeroOneMatrix(std::vector<std::vector<int>> rows)
    : ZeroOneMatrix(truncated(std::move(rows), {})) {
  infinite_ = false;
  row_finite_.assign(n_, true);
  for (std::size_t i = 1; i <= n_; ++i) {
    bool any = false;
    for (std::size_t j = 1; j <= n_; ++j) any = any || (*this)(i, j);
    if (!any) throw std::invalid_argument("matrix has an identically zero row: row " + std::to_string(i));
  }
}

ZeroOneMatrix ZeroOneMatrix::truncated(std::vector<std::vector<int>> rows, std::vector<bool> row_finite) {
  ZeroOneMatrix m;
  m.n_ = rows.size();
  if (m.n_ == 0) throw std::invalid_argument("matrix must have at least one row");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.n_)
      throw std::invalid_argument("matrix must be square: row " + std::to_string(i + 1) + " has " +
                                  std::to_string(rows[i].size()) + " entries");
    for (int v : rows[i]) {
      if (v != 0 && v != 1) throw std::invalid_argument("matrix entries must be 0 or 1");
      m.entries_.push_back(v);
    }
  }
  m.infinite_ = true;
  row_finite.resize(m.n_, false);
  m.row_finite_ = std::move(row_finite);
  for (std::size_t i = 1; i <= m.n_; ++i) {
    if (!m.row_finite_[i - 1]) continue;
    bool any = false;
    for (std::size_t j = 1; j <= m.n_; ++j) any = any || m(i, j);
    if (!any) throw std::invalid_argument("matrix has an identically zero row: row " + std::to_string(i));
  }
  return m;
}

ZeroOneMatrix ZeroOneMatrix::from_rows(std::string_view spec) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : spec) {
    if (c == ',' || c == ';') {
      lines.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  lines.push_back(cur);
  return ZeroOneMatrix(digit_rows(lines));
}

ZeroOneMatrix ZeroOneMatrix::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::string> body;
  std::string header;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line.erase(std::remove_if(line.begin(), line.end(), [](char c) { return c == '\r' || c == '\t'; }), line.end());
    auto first = line.find_first_not_of(' ');
    if (first == std::string::npos) continue;
    line = line.substr(first, line.find_last_not_of(' ') - first + 1);
    if (header.empty()) {
      header = line;
    } else {
      body.push_back(line);
    }
  }
  std::istringstream hs(header);
  std::string tag;
  std::size_t k = 0;
  if (!(hs >> tag >> k) || tag != "el-matrix") throw std::invalid_argument("expected header 'el-matrix k'");
  bool truncated_flag = false;
  std::vector<bool> finite_rows(k, false);
  std::string word;
  while (hs >> word) {
    if (word == "truncated") {
      truncated_flag = true;
    } else if (word.rfind("finite-rows=", 0) == 0) {
      std::istringstream ls(word.substr(12));
      std::string item;
      while (std::getline(ls, item, ',')) {
        std::size_t r = std::stoul(item);
        if (r < 1 || r > k) throw std::invalid_argument("finite-rows index out of range: " + item);
        finite_rows[r - 1] = true;
      }
    } else {
      throw std::invalid_argument("unknown matrix header option '" + word + "'");
    }
  }
  if (body.size() != k)
    throw std::invalid_argument("expected " + std::to_string(k) + " matrix rows, got " + std::to_string(body.size()));
  auto rows = digit_rows(body);
  if (truncated_flag) return truncated(std::move(rows), std::move(finite_rows));
  return ZeroOneMatrix(std::move(rows));
}

void ZeroOneMatrix::check_index(std::size_t i) const {
  if (i < 1 || i > n_)
    throw std::out_of_range("matrix index " + std::to_string(i) + " outside 1.." + std::to_string(n_));
}

int ZeroOneMatrix::operator()(std::size_t i, std::size_t j) const {
  check_index(i);
  check_index(j);
  return entries_[(i - 1) * n_ + (j - 1)];
}

bool ZeroOneMatrix::row_known_finite(std::size_t i) const {
  check_index(i);
  return row_finite_[i - 1];
}

bool ZeroOneMatrix::row_finite_all() const {
  return std::all_of(row_finite_.begin(), row_finite_.end(), [](bool b) { return b; });
}

std::string ZeroOneMatrix::rows_spec() const {
  std::string out;
  for (std::size_t i = 1; i <= n_; ++i) {
    if (i > 1) out += ',';
    for (std::size_t j = 1; j <= n_; ++j) out += static_cast<char>('0' + (*this)(i, j));
  }
  return out;
}

std::string ZeroOneMatrix::str() const {
  std::string out = "el-matrix " + std::to_string(n_);
  if (infinite_) {
    out += " truncated";
    std::string rows;
    for (std::size_t i = 0; i < n_; ++i)
      if (row_finite_[i]) rows += (rows.empty() ? "" : ",") + std::to_string(i + 1);
    if (!rows.empty()) out += " finite-rows=" + rows;
  }
  out += '\n';
  for (std::size_t i = 1; i <= n_; ++i) {
    for (std::size_t j = 1; j <= n_; ++j) out += static_cast<char>('0' + (*this)(i, j));
    out += '\n';
  }
  return out;
}

}  // namespace ucstar
