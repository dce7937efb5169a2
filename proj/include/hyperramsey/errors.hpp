#pragma once

#include <stdexcept>
#include <string>

namespace hr {

// Precondition violated by a caller-supplied value.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed KGC/HGR/TRN/DSC/CERT/config input.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A construction produced an object its theorem rules out. Always a bug.
class SoundnessError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hr
