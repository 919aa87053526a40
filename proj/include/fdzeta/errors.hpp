#ifndef FDZETA_ERRORS_HPP
#define FDZETA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fdzeta {

// Caller passed arguments outside a documented precondition.
class usage_error : public std::invalid_argument {
 public:
  explicit usage_error(const std::string& what) : std::invalid_argument(what) {}
};

// A series/representation diverges at the requested point (e.g. Li_1(1)).
class divergence_error : public usage_error {
 public:
  explicit divergence_error(const std::string& what) : usage_error(what) {}
};

// An integrand produced a non-finite value at an interior node.
class integrand_error : public std::runtime_error {
 public:
  explicit integrand_error(const std::string& what) : std::runtime_error(what) {}
};

// A truncation/remainder bound cannot meet the requested accuracy.
class accuracy_error : public std::runtime_error {
 public:
  explicit accuracy_error(const std::string& what) : std::runtime_error(what) {}
};

// No rational of the requested height matches the input at the requested tolerance.
class recognition_error : public std::runtime_error {
 public:
  explicit recognition_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fdzeta

#endif
