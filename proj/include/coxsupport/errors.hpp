#pragma once

#include <stdexcept>
#include <string>

namespace coxsupport {

/// A well-formed request outside the supported scope (e.g. enumerating E8,
/// nonpositive parameters where a criterion needs c > 0).
class ScopeError : public std::runtime_error {
 public:
  explicit ScopeError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace coxsupport
