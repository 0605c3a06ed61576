#include "virtlink/error.hpp"

namespace virtlink {

ParseError::ParseError(const std::string& what, std::size_t line, std::string token, std::string file)
    : std::runtime_error((file.empty() ? std::string() : file + ":") + std::to_string(line) + ": " + what +
                         (token.empty() ? std::string() : " at token '" + token + "'")),
      reason_(what),
      line_(line),
      token_(std::move(token)),
      file_(std::move(file)) {}

ParseError ParseError::with_file(const std::string& file) const {
  return ParseError(reason_, line_, token_, file);
}

}  // namespace virtlink
