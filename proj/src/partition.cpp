// SPDX-License-Identifier: Apache-2.0
#include "sigmahg/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

#include "sigmahg/error.hpp"

namespace sigmahg {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::validation: return "validation";
    case ErrorCode::precondition: return "precondition";
    case ErrorCode::cap_exceeded: return "cap_exceeded";
    case ErrorCode::colouring: return "colouring";
    case ErrorCode::size: return "size";
    case ErrorCode::parse: return "parse";
    case ErrorCode::internal: return "internal";
  }
  return "unknown";
}

Partition Partition::normalize(std::vector<int> raw_parts) {
  if (raw_parts.empty()) {
    throw Error(ErrorCode::validation, "partition must have at least one part");
  }
  for (int p : raw_parts) {
    if (p < 1) {
      throw Error(ErrorCode::validation,
                  "partition parts must be positive, got " + std::to_string(p));
    }
  }
  std::sort(raw_parts.begin(), raw_parts.end(), std::greater<>());
  Partition out;
  out.r_ = std::accumulate(raw_parts.begin(), raw_parts.end(), 0);
  out.parts_ = std::move(raw_parts);
  return out;
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw Error(ErrorCode::parse,
                  "cannot parse partition part '" + std::string(token) + "'");
    }
    parts.push_back(value);
    pos = comma + 1;
  }
  return normalize(std::move(parts));
}

PartitionStats Partition::stats() const {
  return {parts_.front(), parts_.back(), size()};
}

std::vector<std::pair<int, int>> Partition::grouped() const {
  std::vector<std::pair<int, int>> out;
  for (int p : parts_) {
    if (!out.empty() && out.back().first == p) {
      ++out.back().second;
    } else {
      out.emplace_back(p, 1);
    }
  }
  return out;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

PartitionStats partition_stats(const Partition& sigma) { return sigma.stats(); }

std::vector<Partition> enumerate_partitions(int r, int min_parts) {
  std::vector<Partition> out;
  if (r < 1) return out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      if (static_cast<int>(current.size()) >= min_parts) {
        out.push_back(Partition::normalize(current));
      }
      return;
    }
    for (int p = std::min(remaining, cap); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(r, r);
  return out;
}

std::string ValidationResult::message() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << "violated " << violations[i].condition << ": " << violations[i].detail;
  }
  return os.str();
}

ValidationResult validate_instance(int n, int r, int q, const Partition& sigma) {
  ValidationResult res;
  auto fail = [&](std::string cond, std::string detail) {
    res.violations.push_back({std::move(cond), std::move(detail)});
  };
  if (n < 1) fail("n >= 1", "n=" + std::to_string(n));
  if (q < 1) fail("q >= 1", "q=" + std::to_string(q));
  if (r < 3) fail("r >= 3", "r=" + std::to_string(r));
  if (sigma.size() == 0) {
    fail("sum(sigma) = r", "sigma is empty");
    return res;
  }
  if (sigma.r() != r) {
    fail("sum(sigma) = r",
         "sum(sigma)=" + std::to_string(sigma.r()) + ", r=" + std::to_string(r));
  }
  const auto st = sigma.stats();
  if (st.s < 2) fail("s(sigma) >= 2", "s(sigma)=" + std::to_string(st.s));
  if (!res.ok()) return res;

  if (st.delta_max > q) {
    res.degenerate = true;
    res.degenerate_reasons.push_back("delta_max(sigma)=" + std::to_string(st.delta_max) +
                                     " > q=" + std::to_string(q));
  }
  if (st.s > n) {
    res.degenerate = true;
    res.degenerate_reasons.push_back("s(sigma)=" + std::to_string(st.s) +
                                     " > n=" + std::to_string(n));
  }
  return res;
}

}  // namespace sigmahg
