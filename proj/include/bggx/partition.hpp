#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bggx/errors.hpp"

namespace bggx {

/// Weakly decreasing sequence of non-negative integers, stored without
/// trailing zeros. Indexes Schubert classes; |lambda| is the codimension.
class Partition {
public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0) {
        throw DomainError("partition has a negative part: " + describe(parts_));
      }
      if (i > 0 && parts_[i] > parts_[i - 1]) {
        throw DomainError("partition is not weakly decreasing: " + describe(parts_));
      }
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Parses "3,2,0" (== "3,2"). The empty string and "0" give the empty partition.
  static Partition parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    auto is_blank = [](std::string_view s) {
      return std::all_of(s.begin(), s.end(), [](char c) { return c == ' ' || c == '\t'; });
    };
    if (is_blank(text)) return Partition();
    while (pos <= text.size()) {
      const auto comma = text.find(',', pos);
      auto field = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
      while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) field.remove_prefix(1);
      while (!field.empty() && (field.back() == ' ' || field.back() == '\t')) field.remove_suffix(1);
      if (field.empty() || !std::all_of(field.begin(), field.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw DomainError("malformed partition: '" + std::string(text) + "'");
      }
      parts.push_back(std::stoi(std::string(field)));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return Partition(std::move(parts));
  }

  [[nodiscard]] std::span<const int> parts() const { return parts_; }
  [[nodiscard]] const std::vector<int>& vector() const { return parts_; }
  [[nodiscard]] std::size_t length() const { return parts_.size(); }
  [[nodiscard]] bool empty() const { return parts_.empty(); }
  [[nodiscard]] int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  /// Part i (0-based); zero beyond the length.
  [[nodiscard]] int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  [[nodiscard]] bool fits_box(std::size_t rows, int cols) const {
    return parts_.size() <= rows && (parts_.empty() || parts_.front() <= cols);
  }

  [[nodiscard]] Partition conjugate() const {
    std::vector<int> out(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_) {
      for (int c = 0; c < p; ++c) ++out[static_cast<std::size_t>(c)];
    }
    return Partition(std::move(out));
  }

  [[nodiscard]] std::string to_string() const { return describe(parts_); }

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

private:
  static std::string describe(const std::vector<int>& parts) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts[i]);
    }
    return s;
  }

  std::vector<int> parts_;
};

/// Componentwise comparison (Young-diagram containment). Returns unordered
/// for incomparable pairs.
inline std::partial_ordering componentwise_compare(const Partition& a, const Partition& b) {
  const std::size_t n = std::max(a.length(), b.length());
  bool some_greater = false;
  bool some_less = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] > b[i]) some_greater = true;
    if (a[i] < b[i]) some_less = true;
  }
  if (some_greater && some_less) return std::partial_ordering::unordered;
  if (some_greater) return std::partial_ordering::greater;
  if (some_less) return std::partial_ordering::less;
  return std::partial_ordering::equivalent;
}

/// lambda_i >= mu_i for all i, strictly for some i.
inline bool is_bigger(const Partition& lambda, const Partition& mu) {
  return componentwise_compare(lambda, mu) == std::partial_ordering::greater;
}

/// Calls f on every partition of n with at most max_len parts, each at most
/// max_part (max_part < 0 means unbounded), in decreasing lexicographic order.
template <class F>
void for_each_partition(int n, std::size_t max_len, int max_part, F&& f) {
  if (n < 0) return;
  if (max_part < 0) max_part = n;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      f(Partition(current));
      return;
    }
    if (current.size() == max_len) return;
    for (int part = std::min(remaining, cap); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, max_part);
}

inline std::vector<Partition> partitions_of(int n, std::size_t max_len, int max_part = -1) {
  std::vector<Partition> out;
  for_each_partition(n, max_len, max_part, [&](Partition p) { out.push_back(std::move(p)); });
  return out;
}

/// All partitions in the rows x cols box, grouped by increasing size.
inline std::vector<Partition> partitions_in_box(std::size_t rows, int cols) {
  std::vector<Partition> out;
  const int top = static_cast<int>(rows) * cols;
  for (int n = 0; n <= top; ++n) {
    for_each_partition(n, rows, cols, [&](Partition p) { out.push_back(std::move(p)); });
  }
  return out;
}

} // namespace bggx
