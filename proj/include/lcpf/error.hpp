#pragma once

#include <stdexcept>
#include <string>

namespace lcpf {

enum class Errc {
  embedded_sentinel,
  too_large,
  out_of_range,
  not_found,
  queue_underflow,
  queue_residue,
  inconsistent_inputs,
  bad_format,
  io_error,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace lcpf
