#pragma once

#include <stdexcept>
#include <string>

namespace symheat {

/// Requested operation is not available for the given model family.
class capability_error : public std::runtime_error {
 public:
  explicit capability_error(const std::string& what) : std::runtime_error(what) {}
};

/// A run configuration failed to parse or validate. `where` is a
/// slash/period path into the offending config entry.
class config_error : public std::runtime_error {
 public:
  config_error(const std::string& where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

}  // namespace symheat
