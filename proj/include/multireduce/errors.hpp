#pragma once

#include <stdexcept>
#include <string>

namespace multireduce {

// Realizable training gave up within its update budget. Does not prove the
// sample is non-separable; callers fall back to approximate ERM.
class not_realizable_error : public std::runtime_error {
  public:
    explicit not_realizable_error(const std::string& what) : std::runtime_error(what) {}
};

// tree_to_msvm could not find a positive margin gamma (or the required
// precision exceeds what long double can resolve).
class tolerance_unachievable_error : public std::runtime_error {
  public:
    explicit tolerance_unachievable_error(const std::string& what) : std::runtime_error(what) {}
};

// A constructed point embedding failed its realizability certificate.
class embedding_invalid_error : public std::runtime_error {
  public:
    explicit embedding_invalid_error(const std::string& what) : std::runtime_error(what) {}
};

// An exhaustive search was asked to exceed its enumeration budget.
class budget_exceeded_error : public std::runtime_error {
  public:
    explicit budget_exceeded_error(const std::string& what) : std::runtime_error(what) {}
};

// sensitive_vector requires Delta(M) >= 1.
class no_sensitive_guarantee_error : public std::runtime_error {
  public:
    explicit no_sensitive_guarantee_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace multireduce
