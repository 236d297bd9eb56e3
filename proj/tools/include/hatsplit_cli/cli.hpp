#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hatsplit/json_io.hpp"

namespace hatsplit::cli {

struct CommandResult {
  enum class Status { Ok, NoneFound, InputError };

  Status status = Status::Ok;
  // Deterministic for fixed arguments; printed to stdout.
  Json payload;
  // Human-readable diagnostics (errors, help text); printed to stderr.
  std::string message;
  std::int64_t elapsed_us = 0;

  [[nodiscard]] int exit_code() const noexcept {
    return status == Status::Ok ? 0 : status == Status::NoneFound ? 1 : 2;
  }
};

// args excludes the program name.
CommandResult run(const std::vector<std::string>& args);

}  // namespace hatsplit::cli
