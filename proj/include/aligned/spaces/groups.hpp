#pragma once

#include <string>
#include <string_view>

#include "aligned/exact/ratfn.hpp"

namespace aligned::spaces {

enum class GroupFamily { SO, SU, Sp, G2, F4, E6, E7, E8 };

std::string to_string(GroupFamily f);
bool is_classical(GroupFamily f);

/// A compact simple group written as in the tables: "SO(8)", "Sp(m)",
/// "SO((m-1)*(m+2)/2)", "E6". Classical groups carry their index as a
/// rational function of the family parameter m (a constant for fixed groups).
struct GroupName {
  GroupFamily family = GroupFamily::SO;
  exact::RatFn index;  // unused for exceptional groups
  std::string text;

  bool is_parametric() const;
  exact::RatFn dimension() const;
  /// Concrete name at a given m, e.g. "SO(10)". Throws std::domain_error when
  /// the index is not a positive integer there.
  std::string at(long m) const;
};

/// Throws std::invalid_argument on anything that is not a group name.
GroupName parse_group(std::string_view text);

/// Integer dimension of a concrete group name. Throws if parametric.
long group_dimension(const GroupName& g);

/// "SO(10)" -> "SO10": the spelling used inside space identifiers.
std::string compact(const std::string& group);

}  // namespace aligned::spaces
