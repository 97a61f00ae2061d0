#ifndef CSST_ERRORS_H
#define CSST_ERRORS_H

#include <cstdint>
#include <stdexcept>
#include <string>

namespace csst {

/// Thrown when an exponential loop would exceed its work budget.
class EnumerationCapExceeded : public std::runtime_error {
 public:
  EnumerationCapExceeded(std::string what_loop, double required, uint64_t cap);

  const std::string &loop() const { return loop_; }
  double required() const { return required_; }
  uint64_t cap() const { return cap_; }

 private:
  std::string loop_;
  double required_;
  uint64_t cap_;
};

/// Thrown for tan/sec at a level where cos(2*pi/2^l) vanishes.
class DegenerateLevel : public std::domain_error {
 public:
  explicit DegenerateLevel(int level);
};

constexpr uint64_t kDefaultEnumerationCap = uint64_t{1} << 22;

/// Throws EnumerationCapExceeded if `work` exceeds `cap`.
void require_within_cap(const std::string &loop, double work, uint64_t cap);

}  // namespace csst

#endif
