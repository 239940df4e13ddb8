#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "mcg/graph.hpp"

namespace mcg {

enum class Family { kWheel, kCycle, kComplete, kPrism, kMoebiusLadder, kPetersen, kC6Complement };

/// A named graph family member. `order` is ignored for the fixed-size
/// families (petersen, c6-complement).
struct FamilySpec {
  Family family = Family::kWheel;
  int order = 0;
};

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);
/// Smallest order the family accepts; fixed-size families report their order.
int family_min_order(Family f);
bool family_has_fixed_order(Family f);

/// Throws std::invalid_argument when the order violates the family's
/// constraints (wheel >= 4, cycle >= 3, complete >= 1, prism and Moebius
/// ladder even and >= 6).
Graph generate(const FamilySpec& spec);

/// Hub is vertex 0; the rim is the cycle 1, 2, ..., n-1.
Graph wheel(int order);
Graph cycle(int order);
Graph complete(int order);
/// Two (n/2)-cycles 0..k-1 and k..2k-1 joined by the rungs i ~ i+k.
Graph prism(int order);
/// The n-cycle 0..n-1 plus the chords i ~ i+n/2.
Graph moebius_ladder(int order);
Graph petersen();
Graph c6_complement();

}  // namespace mcg
