#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace s3real {

/// Raised when an operation is called outside its domain.
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a branch the constructive proof guarantees is not reached.
/// Always signals a bug, never bad input.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A degree sequence kept in non-increasing order.
///
/// The order is re-established on construction, so two sequences holding the
/// same multiset compare equal. Entries must be non-negative; operations that
/// need positive entries check it themselves.
class DegreeSequence {
 public:
  DegreeSequence() = default;
  explicit DegreeSequence(std::vector<int> degrees);
  DegreeSequence(std::initializer_list<int> degrees);

  [[nodiscard]] std::size_t size() const { return degrees_.size(); }
  [[nodiscard]] bool empty() const { return degrees_.empty(); }
  [[nodiscard]] long long sum() const;

  /// 1-based access, matching d_1 >= d_2 >= ... >= d_n.
  [[nodiscard]] int d(std::size_t i) const { return degrees_.at(i - 1); }
  [[nodiscard]] int max() const { return degrees_.front(); }
  [[nodiscard]] int min() const { return degrees_.back(); }
  [[nodiscard]] const std::vector<int>& values() const { return degrees_; }

  /// Exponent notation, e.g. "(6^3,5^4)".
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
  friend auto operator<=>(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<int> degrees_;
};

/// Parses `term ("," term)*` with `term := INT ("^" INT)?`. Whitespace and a
/// single pair of enclosing parentheses are ignored.
DegreeSequence parse_sequence(std::string_view text);

/// Erdos-Gallai test over k = 1..f(seq), f = max{i : d_i >= i}.
bool is_graphic(const DegreeSequence& seq);

/// Remove d_n and subtract one from the d_n largest remaining entries.
DegreeSequence laying_sequence(const DegreeSequence& seq);

/// Remove d_n and subtract one from the d_n - 2 largest remaining entries.
DegreeSequence lifting_sequence(const DegreeSequence& seq);

/// Every entry minus two.
DegreeSequence minus2_sequence(const DegreeSequence& seq);

/// (n-1-d_1, ..., n-1-d_n), re-sorted.
DegreeSequence complement_sequence(const DegreeSequence& seq);

enum class GapVerdict { graphic, inconclusive };

/// Sufficient condition n >= floor((d_1+d_n+1)^2/4) / d_n for graphicality.
GapVerdict is_graphic_small_gap(const DegreeSequence& seq);

/// Membership in the exceptional family R(n) of Z3 realizations.
bool in_z3_exceptions(const DegreeSequence& seq);

/// Graphic sequences with n >= 5 and d_n >= 2 have a Z3-connected realization
/// iff sum >= 4n - 4 and the sequence avoids R(n).
bool is_z3_realizable(const DegreeSequence& seq);

/// Graphic sequences with d_n > 0 have an S3-connected realization iff
/// sum >= 6n - 4 and d_n >= 4.
bool is_s3_realizable(const DegreeSequence& seq);

/// Every graphic sequence of length n with entries >= min_entry, in
/// lexicographically decreasing order.
std::vector<DegreeSequence> graphic_sequences(int n, int min_entry = 0);

}  // namespace s3real
