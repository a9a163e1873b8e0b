#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace wst {

// Thrown by class-restricted solvers when the input graph is not in the
// declared class. Carries an induced embedding of the offending pattern.
class ClassViolation : public std::runtime_error {
 public:
  ClassViolation(std::string required, std::vector<int> witness);

  const std::string& required_class() const { return required_; }
  const std::vector<int>& witness() const { return witness_; }

 private:
  std::string required_;
  std::vector<int> witness_;
};

// Thrown by solve() when no class-specific algorithm applies and the
// instance is too large for the oracle fallback.
class UnsupportedInstance : public std::runtime_error {
 public:
  explicit UnsupportedInstance(std::vector<int> p4_witness);

  // An induced P4 embedding (the first pattern the classifier failed on).
  const std::vector<int>& witness() const { return witness_; }

 private:
  std::vector<int> witness_;
};

}  // namespace wst
