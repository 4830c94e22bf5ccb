#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cnz {

// Misuse of the API by calling code: mismatched arity, out-of-range index,
// division by zero. Never triggered by well-formed user input.
class usage_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Rejected user input: duplicate set elements, the zero polynomial where a
// nonzero one is required, grid sizes violating the |S_k| = d_k + 1
// hypothesis, malformed text.
class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text that does not match the element / set / polynomial grammar.
// Carries the byte offset of the first offending character.
class parse_error : public input_error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : input_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// An evaluation set with two equal elements.
class duplicate_error : public input_error {
 public:
  using input_error::input_error;
};

// A grid axis whose size differs from the required d_k + 1.
class grid_size_error : public input_error {
 public:
  grid_size_error(const std::string& what, std::size_t axis,
                  std::size_t required_size)
      : input_error(what), axis_(axis), required_size_(required_size) {}

  std::size_t axis() const noexcept { return axis_; }
  std::size_t required_size() const noexcept { return required_size_; }

 private:
  std::size_t axis_;
  std::size_t required_size_;
};

// A benchmark parameter beyond its documented cap.
class cap_error : public input_error {
 public:
  using input_error::input_error;
};

// A broken internal invariant: inexact division inside fraction-free
// elimination, a lambda family failing its defining equations, or the
// functional disagreeing with c * prod(r). Indicates a bug, not bad input.
class integrity_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cnz
