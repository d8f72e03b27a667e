#pragma once

#include <stdexcept>
#include <string>

namespace mbx {

enum class errc {
  invalid_argument,
  not_invariant,
  not_rotation_set,
  unrealizable,
  budget_exceeded,
  no_convergence,
  inside_set,
  undecided,
  too_close,
  io_error,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace mbx
