#include "denial/conditions.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace denial {

std::string to_string(ConditionId c) {
  return "C" + std::to_string(static_cast<int>(c));
}

std::vector<ConditionId> ConditionVector::members() const {
  std::vector<ConditionId> out;
  for (auto c : kAllConditions)
    if (contains(c)) out.push_back(c);
  return out;
}

std::string ConditionVector::canonical_text() const {
  std::string out;
  for (auto c : members()) {
    if (!out.empty()) out += ',';
    out += to_string(c);
  }
  return out;
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

ConditionVector vector_from_names(const std::string& text) {
  ConditionVector v;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    std::string t = trim(token);
    if (t.empty()) continue;
    if (t.size() == 2 && (t[0] == 'C' || t[0] == 'c') && t[1] >= '0' &&
        t[1] <= '5') {
      v.insert(static_cast<ConditionId>(t[1] - '0'));
    } else {
      throw std::invalid_argument("unknown condition token \"" + t + "\"");
    }
  }
  return v;
}

}  // namespace denial
