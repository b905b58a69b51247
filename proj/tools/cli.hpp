#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyps/strata.hpp"

namespace hyps::cli {

enum class Format { Json, Text };

struct Invocation {
  std::string command;
  std::optional<std::string> input_path;
  Format format = Format::Json;
  int g = 0;
  bool dot = false;
  int n = 0;
  int r = 0;
  Scaling scaling = Scaling::Literal;
  std::optional<int> brauer;
};

struct Outcome {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Commands that read a document from --input or standard input.
bool reads_input(std::string_view command);

/// Evaluates one command on the given input bytes. Exit code 0 whenever the
/// evaluation completed, 2 on malformed input or a violated precondition,
/// 1 on an internal error.
Outcome execute(const Invocation& inv, std::string_view input_bytes);

/// Parses argv-style arguments (without the program name) and executes. The
/// input is read from --input when given, otherwise from `read_stdin`.
Outcome run(const std::vector<std::string>& args, const std::function<std::string()>& read_stdin);

/// Lower-case hex SHA-256 of `bytes`.
std::string sha256_hex(std::string_view bytes);

}  // namespace hyps::cli
