#include "fracfac/analyze.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdio>
#include <unordered_set>

namespace fracfac {

namespace {

constexpr int kMaxMaximalityWidth = 24;

// Coordinates of vectors with respect to a basis, by elimination with
// combination tracking (bit j of a combination <-> basis element j).
class BasisCoordinates {
 public:
  explicit BasisCoordinates(const std::vector<std::uint32_t>& basis) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      std::uint32_t v = basis[j];
      std::uint32_t combo = 1u << j;
      reduce(v, combo);
      const int lead = 31 - std::countl_zero(v);
      used_[lead] = true;
      pivot_[lead] = v;
      combo_[lead] = combo;
    }
  }

  std::uint32_t coordinates(std::uint32_t v) const {
    std::uint32_t combo = 0;
    reduce(v, combo);
    if (v != 0) throw Error(ErrorKind::Domain, "vector outside the span of the basis");
    return combo;
  }

 private:
  void reduce(std::uint32_t& v, std::uint32_t& combo) const {
    while (v != 0) {
      const int lead = 31 - std::countl_zero(v);
      if (!used_[lead]) return;
      v ^= pivot_[lead];
      combo ^= combo_[lead];
    }
  }

  std::array<std::uint32_t, 32> pivot_{};
  std::array<std::uint32_t, 32> combo_{};
  std::array<bool, 32> used_{};
};

std::uint32_t combine(std::uint32_t combo, const std::vector<std::uint32_t>& images) {
  std::uint32_t out = 0;
  for (std::size_t j = 0; j < images.size(); ++j) {
    if ((combo >> j) & 1u) out ^= images[j];
  }
  return out;
}

void require_full_rank(const RegularDesign& d, const char* op) {
  if (d.rank() < d.k()) {
    throw Error(ErrorKind::ReducedRank, std::string(op) + " requires rank == k; reembed first");
  }
}

}  // namespace

MaximalityReport is_maximal(const RegularDesign& d) {
  require_full_rank(d, "is_maximal");
  if (d.k() > kMaxMaximalityWidth) throw Error(ErrorKind::SizeLimit, "maximality limited to k <= 24");
  const auto profile = alias_profile(d);
  for (const auto& c : d.columns()) {
    if (profile.at(c).m != 0) {
      throw Error(ErrorKind::Precondition,
                  "maximality is defined for resolution >= IV; column " + c.to_string() +
                      " is aliased with a two-factor interaction");
    }
  }

  // Definition: v can be added iff it is neither a column nor a sum of two.
  const std::size_t size = std::size_t{1} << d.k();
  std::vector<bool> covered(size, false);
  covered[0] = true;
  const auto& cols = d.columns();
  for (std::size_t i = 0; i < cols.size(); ++i) {
    covered[cols[i].bits()] = true;
    for (std::size_t j = i + 1; j < cols.size(); ++j) covered[cols[i].bits() ^ cols[j].bits()] = true;
  }
  MaximalityReport report;
  for (std::size_t v = 1; v < size; ++v) {
    if (!covered[v]) {
      report.witness = BitVec(d.k(), static_cast<std::uint32_t>(v));
      break;
    }
  }
  report.is_maximal = !report.witness.has_value();

  const auto nonmain = profile.nonmain_multiset();
  const bool by_alias_sets = nonmain.empty() || nonmain.front() > 0;
  report.criterion_agreement = by_alias_sets == report.is_maximal;
  return report;
}

CanonicalForm canonical_form(const RegularDesign& d) {
  if (d.k() > kMaxCanonicalWidth) {
    throw Error(ErrorKind::Scale, "exact canonical form limited to k <= 5; compare fingerprints");
  }
  require_full_rank(d, "canonical_form");
  const int k = d.k();

  // The least image contains every power of two: whenever its next element
  // leaves the span of the smaller ones, a transform fixing that span can
  // lower it to the next power of two. So it suffices to send ordered bases
  // drawn from the columns to (1, 2, 4, ...); a column's image is then its
  // coordinate vector in that basis.
  //
  // Sets are masks over the 2^k points; for equal sizes the lexicographically
  // smaller sorted list owns the lowest bit where the masks differ.
  auto less = [](std::uint64_t a, std::uint64_t b) {
    const std::uint64_t diff = a ^ b;
    return diff != 0 && (a & (diff & (~diff + 1))) != 0;
  };

  std::vector<std::uint32_t> cols;
  for (const auto& c : d.columns()) cols.push_back(c.bits());
  const int n = static_cast<int>(cols.size());

  std::uint64_t best = 0;
  bool have_best = false;
  std::vector<std::uint32_t> basis;
  std::vector<BitVec> basis_vecs;

  auto recurse = [&](auto&& self) -> void {
    if (static_cast<int>(basis.size()) == k) {
      const BasisCoordinates coords(basis);
      std::uint64_t mask = 0;
      for (auto c : cols) mask |= std::uint64_t{1} << coords.coordinates(c);
      if (!have_best || less(mask, best)) {
        best = mask;
        have_best = true;
      }
      return;
    }
    for (int i = 0; i < n; ++i) {
      basis_vecs.emplace_back(k, cols[static_cast<std::size_t>(i)]);
      if (gf2::rank(basis_vecs) == static_cast<int>(basis_vecs.size())) {
        basis.push_back(cols[static_cast<std::size_t>(i)]);
        self(self);
        basis.pop_back();
      }
      basis_vecs.pop_back();
    }
  };
  recurse(recurse);

  CanonicalForm out;
  out.k = k;
  for (std::uint32_t v = 1; v < (1u << k); ++v) {
    if ((best >> v) & 1u) out.columns.emplace_back(k, v);
  }
  return out;
}

std::string DesignFingerprint::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto mix = [&h](std::uint64_t value) {
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (value >> (8 * byte)) & 0xffu;
      h *= 0x100000001b3ull;
    }
  };
  mix(runs);
  mix(static_cast<std::uint64_t>(factors));
  mix(wlp.words.size());
  for (auto b : wlp.words) mix(b);
  mix(m_main.size());
  for (auto m : m_main) mix(m);
  mix(m_nonmain.size());
  for (auto m : m_nonmain) mix(m);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

DesignFingerprint fingerprint(const RegularDesign& d) {
  const RegularDesign full = d.rank() < d.k() ? reembed(d) : d;
  const auto profile = alias_profile(full);
  DesignFingerprint fp;
  fp.runs = full.runs();
  fp.factors = full.factors();
  fp.wlp = wordlength_pattern(full);
  fp.m_main = profile.main_multiset();
  fp.m_nonmain = profile.nonmain_multiset();
  return fp;
}

const char* to_string(Isomorphism verdict) noexcept {
  switch (verdict) {
    case Isomorphism::Yes: return "yes";
    case Isomorphism::No: return "no";
    case Isomorphism::Unknown: return "unknown";
  }
  return "unknown";
}

std::optional<std::vector<BitVec>> find_isomorphism(const RegularDesign& d1,
                                                    const RegularDesign& d2,
                                                    std::uint64_t budget) {
  if (d1.k() != d2.k() || d1.factors() != d2.factors()) return std::nullopt;
  require_full_rank(d1, "find_isomorphism");
  require_full_rank(d2, "find_isomorphism");
  const int k = d1.k();
  const int n = d1.factors();

  std::vector<std::uint32_t> basis;
  std::vector<BitVec> picked;
  for (const auto& c : d1.columns()) {
    picked.push_back(c);
    if (gf2::rank(picked) > static_cast<int>(basis.size())) {
      basis.push_back(c.bits());
    } else {
      picked.pop_back();
    }
  }
  const BasisCoordinates coords(basis);

  // Columns of d1 checked as soon as the basis elements they use are mapped.
  std::vector<std::vector<std::uint32_t>> check_at(static_cast<std::size_t>(k));
  for (const auto& c : d1.columns()) {
    const auto combo = coords.coordinates(c.bits());
    check_at[static_cast<std::size_t>(31 - std::countl_zero(combo))].push_back(combo);
  }

  std::unordered_set<std::uint32_t> target;
  for (const auto& c : d2.columns()) target.insert(c.bits());
  std::vector<std::uint32_t> targets;
  for (const auto& c : d2.columns()) targets.push_back(c.bits());

  std::vector<std::uint32_t> images;
  std::vector<BitVec> image_vecs;
  std::uint64_t visited = 0;

  auto recurse = [&](auto&& self, int depth) -> bool {
    if (depth == k) return true;
    for (int i = 0; i < n; ++i) {
      if (++visited > budget) {
        throw Error(ErrorKind::Budget,
                    "isomorphism search exceeded " + std::to_string(budget) + " nodes");
      }
      const auto g = targets[static_cast<std::size_t>(i)];
      image_vecs.emplace_back(k, g);
      if (gf2::rank(image_vecs) != depth + 1) {
        image_vecs.pop_back();
        continue;
      }
      images.push_back(g);
      bool ok = true;
      for (auto combo : check_at[static_cast<std::size_t>(depth)]) {
        if (!target.contains(combine(combo, images))) {
          ok = false;
          break;
        }
      }
      if (ok && self(self, depth + 1)) return true;
      images.pop_back();
      image_vecs.pop_back();
    }
    return false;
  };
  if (!recurse(recurse, 0)) return std::nullopt;

  std::vector<BitVec> unit_images;
  for (int j = 1; j <= k; ++j) {
    unit_images.emplace_back(k, combine(coords.coordinates(BitVec::unit(k, j).bits()), images));
  }
  return unit_images;
}

Isomorphism are_isomorphic(const RegularDesign& d1, const RegularDesign& d2,
                           std::uint64_t budget) {
  if (d1.k() != d2.k() || d1.factors() != d2.factors()) return Isomorphism::No;
  if (fingerprint(d1) != fingerprint(d2)) return Isomorphism::No;
  const RegularDesign a = d1.rank() < d1.k() ? reembed(d1) : d1;
  const RegularDesign b = d2.rank() < d2.k() ? reembed(d2) : d2;
  if (a.k() <= kMaxCanonicalWidth) {
    return canonical_form(a) == canonical_form(b) ? Isomorphism::Yes : Isomorphism::No;
  }
  try {
    return find_isomorphism(a, b, budget) ? Isomorphism::Yes : Isomorphism::No;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Budget) return Isomorphism::Unknown;
    throw;
  }
}

RegularDesign apply_transform(const RegularDesign& d, const std::vector<BitVec>& images) {
  if (static_cast<int>(images.size()) != d.k()) {
    throw Error(ErrorKind::DimensionMismatch, "transform needs one image per coordinate");
  }
  if (gf2::rank(images) != d.k()) throw Error(ErrorKind::Domain, "transform is not invertible");
  std::vector<BitVec> cols;
  cols.reserve(d.columns().size());
  for (const auto& c : d.columns()) {
    BitVec v = BitVec::zero(d.k());
    for (int i = 1; i <= d.k(); ++i) {
      if (c.coord(i)) v ^= images[static_cast<std::size_t>(i - 1)];
    }
    cols.push_back(v);
  }
  return RegularDesign::from_columns(d.k(), std::move(cols));
}

}  // namespace fracfac
