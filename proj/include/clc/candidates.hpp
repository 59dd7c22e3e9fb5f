#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "clc/errors.hpp"

namespace clc {

/// Declared, ordered list of distinct candidate names. The declared order is
/// the canonical tie-break everywhere in the library.
class CandidateSet {
 public:
  CandidateSet() = default;

  explicit CandidateSet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw DomainError("candidate set must not be empty");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      const auto& name = names_[i];
      if (!valid_name(name)) throw DomainError("invalid candidate name '" + name + "'");
      if (!index_.emplace(name, i).second)
        throw DomainError("duplicate candidate name '" + name + "'");
    }
  }

  /// Names may not be empty nor contain whitespace or any of `> = : #`.
  static bool valid_name(std::string_view name) {
    if (name.empty()) return false;
    for (char c : name) {
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '>' || c == '=' || c == ':' ||
          c == '#')
        return false;
    }
    return true;
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<std::size_t> find(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t index_of(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw DomainError("unknown candidate '" + std::string(name) + "'");
  }

  /// Candidate set formed by the given indices, in the order given.
  CandidateSet subset(const std::vector<std::size_t>& indices) const {
    std::vector<std::string> names;
    names.reserve(indices.size());
    for (auto i : indices) names.push_back(name(i));
    return CandidateSet(std::move(names));
  }

  friend bool operator==(const CandidateSet& a, const CandidateSet& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

/// Default names for generated data: A..Z, then c26, c27, ...
inline CandidateSet letter_candidates(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    names.push_back(i < 26 ? std::string(1, static_cast<char>('A' + i)) : "c" + std::to_string(i));
  return CandidateSet(std::move(names));
}

}  // namespace clc
