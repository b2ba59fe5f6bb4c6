#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace edq {

enum class Errc {
  zero_norm,
  not_normalized,
  bad_grid,
  dimension_mismatch,
  node_encountered,
  unstable_step,
  grid_too_small,
  not_orthonormal,
  not_hermitian,
  inconsistent_data,
  orthogonal_postselection,
  zero_momentum_amplitude,
  empty_sample,
  grid_mismatch,
  config_invalid,
  io_failure,
};

const char* errc_name(Errc c) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Config validation failure; `field` is the dotted path of the offending key.
class ConfigError : public Error {
 public:
  ConfigError(std::string field, std::string msg)
      : Error(Errc::config_invalid, std::move(msg)), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace edq
