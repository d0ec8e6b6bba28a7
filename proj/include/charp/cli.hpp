#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "charp/ring.hpp"

namespace charp::cli {

enum class OutputFormat { Text, Json };

struct SessionConfig {
  std::uint32_t p = 0;
  std::vector<std::string> base_params;
  std::vector<std::string> variables;
  MonomialOrder monomial_order = MonomialOrder::Grevlex;
  OutputFormat output_format = OutputFormat::Text;
  unsigned threads = 1;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitMathError = 1;
inline constexpr int kExitInputError = 2;

/// Runs one command line (without the program name). `env_format` is the
/// value of CHARP_OUTPUT, if set; it overrides the default format but not an
/// explicit --format.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const char* env_format = nullptr);

/// Replaces every `@path` argument with the contents of that file.
std::vector<std::string> expand_file_arguments(const std::vector<std::string>& args);

}  // namespace charp::cli
