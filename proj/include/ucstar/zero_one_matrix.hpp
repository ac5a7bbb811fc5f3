#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ucstar {

/// Square 0-1 matrix indexed by 1..n with no identically zero rows.
///
/// A matrix may be a finite truncation of a declared infinite matrix. In that
/// case only rows flagged `row_finite` are known to have no 1s beyond the
/// truncation; every other entry past column n is unknown.
class ZeroOneMatrix {
 public:
  ZeroOneMatrix() = default;
  explicit ZeroOneMatrix(std::vector<std::vector<int>> rows);

  /// Truncated view of an infinite matrix. Zero rows are only rejected when
  /// the row is declared finite.
  static ZeroOneMatrix truncated(std::vector<std::vector<int>> rows, std::vector<bool> row_finite);

  /// Rows as digit strings separated by commas, e.g. "11,10".
  static ZeroOneMatrix from_rows(std::string_view spec);
  /// `el-matrix k [truncated [finite-rows=i,j,...]]` followed by k digit rows.
  static ZeroOneMatrix parse(std::string_view text);

  std::size_t size() const { return n_; }
  bool infinite() const { return infinite_; }
  /// Entry A_ij, 1-based.
  int operator()(std::size_t i, std::size_t j) const;
  bool row_known_finite(std::size_t i) const;
  bool row_finite_all() const;

  std::string rows_spec() const;
  std::string str() const;

  friend bool operator==(ZeroOneMatrix const&, ZeroOneMatrix const&) = default;

 private:
  void check_index(std::size_t i) const;

  std::size_t n_ = 0;
  std::vector<int> entries_;
  bool infinite_ = false;
  std::vector<bool> row_finite_;
};

}  // namespace ucstar
