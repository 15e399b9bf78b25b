#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace vyg {

// Base class for all contract violations raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an exact search would have to run on an instance larger than
// the configured cap.  Instances settled by the polynomial paths (empty,
// edgeless, bipartite, or greedy bound meeting the lower bound) never
// trigger this.
class SizeCapError : public Error {
 public:
  SizeCapError(std::size_t size, std::size_t cap)
      : SizeCapError("exact search", size, cap) {}

  SizeCapError(const std::string& context, std::size_t size, std::size_t cap)
      : Error(context + ": instance of size " + std::to_string(size) +
              " exceeds the cap " + std::to_string(cap)),
        size_(size),
        cap_(cap) {}

  std::size_t size() const { return size_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t size_;
  std::size_t cap_;
};

}  // namespace vyg
