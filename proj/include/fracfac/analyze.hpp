#pragma once

// Maximality, isomorphism and invariants.
//
// Two designs with the same k and n are isomorphic when an invertible k x k
// GF(2) matrix maps one column set onto the other (a change of basis of the
// run space combined with a relabelling of factors).

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fracfac/design.hpp"

namespace fracfac {

struct MaximalityReport {
  bool is_maximal = false;
  /// A column that can be appended without dropping to resolution III.
  std::optional<BitVec> witness;
  /// Whether the alias-set criterion (every non-main-effect set has m > 0)
  /// agrees with the definitional one.
  bool criterion_agreement = false;
};

/// Requires resolution >= IV and rank == k; k <= 24.
MaximalityReport is_maximal(const RegularDesign& d);

/// The lexicographically least sorted column set over the GL(k, 2) orbit.
/// Columns compare as integers with coordinate 1 most significant.
struct CanonicalForm {
  int k = 0;
  std::vector<BitVec> columns;

  RegularDesign design() const { return RegularDesign::from_columns(k, columns); }

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

inline constexpr int kMaxCanonicalWidth = 5;

/// Exact orbit minimisation; k <= 5 and rank == k.
CanonicalForm canonical_form(const RegularDesign& d);

struct DesignFingerprint {
  std::uint64_t runs = 0;
  int factors = 0;
  WordlengthPattern wlp;
  std::vector<std::uint64_t> m_main;
  std::vector<std::uint64_t> m_nonmain;

  /// FNV-1a over the fields, as 16 hex digits.
  std::string hash() const;

  friend bool operator==(const DesignFingerprint&, const DesignFingerprint&) = default;
};

/// Isomorphism invariant; reembeds first when rank < k.
DesignFingerprint fingerprint(const RegularDesign& d);

enum class Isomorphism { Yes, No, Unknown };

const char* to_string(Isomorphism verdict) noexcept;

/// Searches for an invertible map sending d1's columns onto d2's. The images
/// of a fixed basis chosen among d1's columns range over ordered independent
/// tuples of d2's columns, so an exhausted search proves non-isomorphism.
/// Returns the images of the unit vectors e_1..e_k when found; nullopt when
/// none exists. Throws Budget when `budget` tuples are visited first.
std::optional<std::vector<BitVec>> find_isomorphism(const RegularDesign& d1,
                                                    const RegularDesign& d2,
                                                    std::uint64_t budget);

/// Designs with different (k, n) are not isomorphic. Otherwise fingerprints
/// are compared, then canonical forms when k <= 5, then a budgeted
/// find_isomorphism for larger k (Unknown if the budget runs out).
Isomorphism are_isomorphic(const RegularDesign& d1, const RegularDesign& d2,
                           std::uint64_t budget = 50'000'000);

/// Applies the linear map sending e_i to images[i - 1].
RegularDesign apply_transform(const RegularDesign& d, const std::vector<BitVec>& images);

}  // namespace fracfac
