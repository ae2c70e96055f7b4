#pragma once

// The explicit cycles C_0(1..14), the parametric families C_1 .. C_19 built
// from the generator calculus, their printed cutout catalog and the selection
// of instances used to cut out the complement of the region.

#include "gsrs/dynamics.hpp"
#include "gsrs/geometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gsrs {

inline constexpr int kFamilyCount = 20;  // C_0 .. C_19

struct FamilyInstance {
    int family = 0;
    long n = 0;
    long m = 0;  // unused (zero) for family 0

    friend bool operator==(const FamilyInstance&, const FamilyInstance&) = default;
    friend auto operator<=>(const FamilyInstance&, const FamilyInstance&) = default;
};

std::string to_string(const FamilyInstance& inst);

/// The definition range of the family (for C_0: 1 <= n <= 14, m = 0).
bool is_valid(const FamilyInstance& inst);

/// All valid instances of a family with the given n.
std::vector<FamilyInstance> valid_instances(int family, long n);

/// A corrected term of the printed C_19 definitions (by n mod 3).
struct Erratum {
    int residue;
    std::string printed;
    std::string corrected;
};
const std::vector<Erratum>& generator_errata();

/// The cycle of a valid instance. Throws std::invalid_argument for invalid
/// instances or an empty expansion and std::domain_error for non-integral
/// coordinates. With `literal` the printed definitions are used without the
/// errata.
Cycle expand_generators(const FamilyInstance& inst, bool literal = false);

/// The printed cutout for the instance, or nullopt when no printed case
/// covers it.
std::optional<Cell> expected_cutout(const FamilyInstance& inst);

/// Range condition of the selection table.
bool in_selection_table(const FamilyInstance& inst);

/// Table row n in full, plus instances of rows n-2..n+2 whose cutout meets the
/// sector window of pike n (n >= 7).
/// Families listed in `omit` are skipped.
std::vector<FamilyInstance> selection(long n, const std::vector<int>& omit = {});

/// Instances listed by the selection table that reach the prefix (slope > 1/7):
/// the fixed head of the table plus every table instance with n <= max_n, and
/// C_8(1,-1) which covers the left half-plane part of the disk.
std::vector<FamilyInstance> prefix_selection(long max_n = 9);

}  // namespace gsrs
