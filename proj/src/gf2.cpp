#include "fracfac/gf2.hpp"

#include <array>
#include <bit>
#include <sstream>

namespace fracfac {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "dimension-mismatch";
    case ErrorKind::SizeLimit: return "size-limit";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Inconsistent: return "inconsistent-input";
    case ErrorKind::ResolutionBelowII: return "resolution-below-II";
    case ErrorKind::ResolutionBelowIII: return "resolution-below-III";
    case ErrorKind::Capacity: return "capacity";
    case ErrorKind::InvalidGenerator: return "invalid-generator";
    case ErrorKind::ReducedRank: return "reduced-rank";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Scale: return "scale";
    case ErrorKind::Budget: return "budget";
    case ErrorKind::Parse: return "parse";
  }
  return "unknown";
}

}  // namespace fracfac

namespace fracfac::gf2 {

namespace {

std::uint32_t width_mask(int width) {
  return width >= 32 ? 0xFFFFFFFFu : ((1u << width) - 1u);
}

void check_width(int width) {
  if (width < 1 || width > kMaxWidth) {
    throw Error(ErrorKind::SizeLimit,
                "bit vector width " + std::to_string(width) + " outside [1, 32]");
  }
}

using Pascal = std::array<std::array<std::uint64_t, kMaxBinomial + 1>, kMaxBinomial + 1>;

const Pascal& pascal() {
  static const Pascal table = [] {
    Pascal t{};
    for (int n = 0; n <= kMaxBinomial; ++n) {
      t[n][0] = 1;
      for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k < n ? t[n - 1][k] : 0);
    }
    return t;
  }();
  return table;
}

}  // namespace

BitVec::BitVec(int width, std::uint32_t bits) : width_(width), bits_(bits) {
  check_width(width);
  if ((bits & ~width_mask(width)) != 0) {
    throw Error(ErrorKind::Domain, "bits set beyond width " + std::to_string(width));
  }
}

BitVec BitVec::unit(int width, int coordinate) {
  check_width(width);
  if (coordinate < 1 || coordinate > width) {
    throw Error(ErrorKind::Domain, "coordinate " + std::to_string(coordinate) + " out of range");
  }
  return BitVec(width, 1u << (width - coordinate));
}

BitVec BitVec::from_string(std::string_view s) {
  check_width(static_cast<int>(s.size()));
  std::uint32_t bits = 0;
  for (char c : s) {
    if (c != '0' && c != '1') {
      throw Error(ErrorKind::Parse, "bit string contains '" + std::string(1, c) + "'");
    }
    bits = (bits << 1) | static_cast<std::uint32_t>(c == '1');
  }
  return BitVec(static_cast<int>(s.size()), bits);
}

int BitVec::weight() const noexcept { return std::popcount(bits_); }

bool BitVec::coord(int i) const {
  if (i < 1 || i > width_) throw Error(ErrorKind::Domain, "coordinate out of range");
  return ((bits_ >> (width_ - i)) & 1u) != 0;
}

BitVec BitVec::extended(bool last) const {
  if (width_ >= kMaxWidth) {
    throw Error(ErrorKind::SizeLimit, "cannot extend a width-32 vector");
  }
  return BitVec(width_ + 1, (bits_ << 1) | static_cast<std::uint32_t>(last));
}

bool BitVec::dot(const BitVec& other) const {
  if (other.width_ != width_) throw Error(ErrorKind::DimensionMismatch, "dot of unequal widths");
  return (std::popcount(bits_ & other.bits_) & 1) != 0;
}

std::string BitVec::to_string() const {
  std::string s(static_cast<std::size_t>(width_), '0');
  for (int i = 1; i <= width_; ++i) {
    if (coord(i)) s[static_cast<std::size_t>(i - 1)] = '1';
  }
  return s;
}

BitVec& BitVec::operator^=(const BitVec& other) {
  if (other.width_ != width_) {
    throw Error(ErrorKind::DimensionMismatch, "xor of widths " + std::to_string(width_) + " and " +
                                                  std::to_string(other.width_));
  }
  bits_ ^= other.bits_;
  return *this;
}

int rank(std::span<const BitVec> rows) {
  if (rows.empty()) return 0;
  const int width = rows.front().width();
  // basis[b] holds a reduced vector whose leading bit is b, or 0.
  std::array<std::uint32_t, 32> basis{};
  int r = 0;
  for (const auto& row : rows) {
    if (row.width() != width) {
      throw Error(ErrorKind::DimensionMismatch, "rank over mixed widths");
    }
    std::uint32_t v = row.bits();
    while (v != 0) {
      const int lead = 31 - std::countl_zero(v);
      if (basis[lead] == 0) {
        basis[lead] = v;
        ++r;
        break;
      }
      v ^= basis[lead];
    }
  }
  return r;
}

std::vector<BitVec> enumerate_span(std::span<const BitVec> generators, int width) {
  check_width(width);
  const auto r = generators.size();
  if (r > static_cast<std::size_t>(kMaxSpanDim)) {
    throw Error(ErrorKind::SizeLimit, "span of " + std::to_string(r) +
                                          " generators exceeds the 2^26 enumeration cap");
  }
  for (const auto& g : generators) {
    if (g.width() != width) throw Error(ErrorKind::DimensionMismatch, "generator width mismatch");
  }
  const std::size_t size = std::size_t{1} << r;
  std::vector<BitVec> out;
  out.reserve(size);
  BitVec current = BitVec::zero(width);
  out.push_back(current);
  for (std::size_t i = 1; i < size; ++i) {
    current ^= generators[static_cast<std::size_t>(std::countr_zero(i))];
    out.push_back(current);
  }
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (n < 0 || n > kMaxBinomial) {
    throw Error(ErrorKind::Domain, "binomial row " + std::to_string(n) + " outside [0, 64]");
  }
  if (k < 0 || k > n) return 0;
  return pascal()[n][k];
}

std::int64_t krawtchouk(int n, int j, int x) {
  if (n < 0 || n > kMaxBinomial || j < 0 || j > n || x < 0 || x > n) {
    throw Error(ErrorKind::Domain, "krawtchouk arguments out of range");
  }
  __int128 sum = 0;
  for (int s = 0; s <= j; ++s) {
    const __int128 term =
        static_cast<__int128>(binomial(x, s)) * static_cast<__int128>(binomial(n - x, j - s));
    sum += (s % 2 == 0) ? term : -term;
  }
  return static_cast<std::int64_t>(sum);
}

std::uint64_t WeightDistribution::total() const {
  std::uint64_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

WeightDistribution macwilliams_dual(const WeightDistribution& weights, int code_dim) {
  const int n = weights.length();
  if (n < 0) throw Error(ErrorKind::Inconsistent, "empty weight distribution");
  if (n > kMaxBinomial) {
    throw Error(ErrorKind::SizeLimit, "MacWilliams transform limited to length 64");
  }
  if (code_dim < 0 || code_dim > n || code_dim > 62) {
    throw Error(ErrorKind::Inconsistent, "code dimension out of range");
  }
  if (weights.counts[0] < 1 || weights.total() != (std::uint64_t{1} << code_dim)) {
    throw Error(ErrorKind::Inconsistent, "weights do not describe a code of dimension " +
                                             std::to_string(code_dim));
  }
  WeightDistribution dual;
  dual.counts.assign(static_cast<std::size_t>(n) + 1, 0);
  const __int128 size = static_cast<__int128>(1) << code_dim;
  for (int j = 0; j <= n; ++j) {
    __int128 sum = 0;
    for (int i = 0; i <= n; ++i) {
      if (weights.counts[i] == 0) continue;
      sum += static_cast<__int128>(weights.counts[i]) * krawtchouk(n, j, i);
    }
    if (sum < 0 || sum % size != 0) {
      std::ostringstream os;
      os << "dual weight B_" << j << " is not a nonnegative integer";
      throw Error(ErrorKind::Inconsistent, os.str());
    }
    dual.counts[j] = static_cast<std::uint64_t>(sum / size);
  }
  return dual;
}

}  // namespace fracfac::gf2
