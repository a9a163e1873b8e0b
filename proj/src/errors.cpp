#include "wst/errors.hpp"

namespace wst {
namespace {

std::string join_ids(const std::vector<int>& vs) {
  std::string out;
  for (int v : vs) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

}  // namespace

ClassViolation::ClassViolation(std::string required, std::vector<int> witness)
    : std::runtime_error("instance is not " + required +
                         "; induced witness: " + join_ids(witness)),
      required_(std::move(required)),
      witness_(std::move(witness)) {}

UnsupportedInstance::UnsupportedInstance(std::vector<int> p4_witness)
    : std::runtime_error("no polynomial solver applies and the instance "
                         "exceeds the oracle cap; induced P4: " +
                         join_ids(p4_witness)),
      witness_(std::move(p4_witness)) {}

}  // namespace wst
