#include "aligned/spaces/groups.hpp"

#include <stdexcept>

namespace aligned::spaces {

using exact::RatFn;
using exact::Rational;

std::string to_string(GroupFamily f) {
  switch (f) {
    case GroupFamily::SO: return "SO";
    case GroupFamily::SU: return "SU";
    case GroupFamily::Sp: return "Sp";
    case GroupFamily::G2: return "G2";
    case GroupFamily::F4: return "F4";
    case GroupFamily::E6: return "E6";
    case GroupFamily::E7: return "E7";
    case GroupFamily::E8: return "E8";
  }
  return "?";
}

bool is_classical(GroupFamily f) { return f == GroupFamily::SO || f == GroupFamily::SU || f == GroupFamily::Sp; }

bool GroupName::is_parametric() const { return is_classical(family) && index.num().degree() > 0; }

RatFn GroupName::dimension() const {
  const RatFn& k = index;
  switch (family) {
    case GroupFamily::SO: return k * (k - 1) / 2;
    case GroupFamily::SU: return k * k - 1;
    case GroupFamily::Sp: return k * (2 * k + 1);
    case GroupFamily::G2: return 14;
    case GroupFamily::F4: return 52;
    case GroupFamily::E6: return 78;
    case GroupFamily::E7: return 133;
    case GroupFamily::E8: return 248;
  }
  return 0;
}

std::string GroupName::at(long m) const {
  if (!is_classical(family)) return text;
  Rational k = index(Rational(m));
  if (k.get_den() != 1 || k < 1) throw std::domain_error(text + " has no integer index at m = " + std::to_string(m));
  return to_string(family) + "(" + k.get_num().get_str() + ")";
}

GroupName parse_group(std::string_view text) {
  GroupName g;
  g.text = std::string(text);
  static const std::pair<const char*, GroupFamily> exceptional[] = {
      {"G2", GroupFamily::G2}, {"F4", GroupFamily::F4}, {"E6", GroupFamily::E6},
      {"E7", GroupFamily::E7}, {"E8", GroupFamily::E8}};
  for (const auto& [label, fam] : exceptional) {
    if (text == label) {
      g.family = fam;
      return g;
    }
  }
  static const std::pair<const char*, GroupFamily> classical[] = {
      {"SO", GroupFamily::SO}, {"SU", GroupFamily::SU}, {"Sp", GroupFamily::Sp}};
  for (const auto& [label, fam] : classical) {
    std::string_view prefix(label);
    if (text.size() > prefix.size() + 2 && text.substr(0, prefix.size()) == prefix && text[prefix.size()] == '(' &&
        text.back() == ')') {
      g.family = fam;
      g.index = exact::parse_ratfn(text.substr(prefix.size() + 1, text.size() - prefix.size() - 2));
      if (!g.is_parametric()) {
        Rational k = g.index(Rational(0));
        if (k.get_den() != 1 || k < 1) throw std::invalid_argument("group index must be a positive integer: " + g.text);
      }
      return g;
    }
  }
  throw std::invalid_argument("not a group name: '" + std::string(text) + "'");
}

long group_dimension(const GroupName& g) {
  if (g.is_parametric()) throw std::invalid_argument("group_dimension of parametric " + g.text);
  Rational d = g.dimension()(Rational(0));
  return d.get_num().get_si();
}

std::string compact(const std::string& group) {
  std::string out;
  for (char c : group) {
    if (c != '(' && c != ')') out += c;
  }
  return out;
}

}  // namespace aligned::spaces
